#pragma once

#include <complex>
#include <vector>

namespace qcircle {

using Complex = std::complex<double>;

/// Periodicity class of the Hilbert space: f(phi + 2*pi) = exp(2*pi*i*lambda) f(phi).
/// Time-reversal invariance of [J,U] = U leaves only lambda = 0 (boson,
/// periodic) and lambda = 1/2 (fermion, anti-periodic).
enum class LambdaCase { Boson, Fermion };

inline double lambda_of(LambdaCase c) { return c == LambdaCase::Boson ? 0.0 : 0.5; }

/// Reduce an angle into [0, 2*pi).
double reduce_angle(double x);

/// Wrap-aware angular distance, in [0, pi].
double angular_gap(double a, double b);

/// A wavefunction as truncated Fourier coefficients over the angular-momentum
/// eigenmodes e_j(phi) = exp(i*j*phi), j = k + lambda for integer k in
/// [k_min, k_max]. Immutable after construction; all operators return new
/// states, so values can be shared freely across threads.
class ModeState {
public:
    ModeState(LambdaCase c, int k_min, std::vector<Complex> coeffs);

    /// Unit coefficient on mode j = k + lambda.
    static ModeState basis(LambdaCase c, int k);

    LambdaCase lambda_case() const { return case_; }
    int k_min() const { return k_min_; }
    int k_max() const { return k_min_ + static_cast<int>(coeffs_.size()) - 1; }
    double mode_j(int k) const { return k + lambda_of(case_); }

    /// Coefficient of mode j = k + lambda; zero outside the window.
    Complex coeff(int k) const;

    const std::vector<Complex>& coeffs() const { return coeffs_; }

private:
    LambdaCase case_;
    int k_min_;
    std::vector<Complex> coeffs_;
};

/// J: c_j -> j * c_j.
ModeState apply_J(const ModeState& s);

/// Ladder up, U e_j = e_{j+1}. The window grows by one slot at the top, so
/// no coefficient is ever clipped and the map is an exact isometry.
ModeState apply_U(const ModeState& s);

/// Ladder down, U^dag e_j = e_{j-1}. Window grows by one at the bottom.
ModeState apply_U_dagger(const ModeState& s);

/// Z = exp(-J + 1/2) U, applied compositionally: ladder up, then scale the
/// coefficient on mode j by exp(-j + 1/2).
ModeState apply_Z(const ModeState& s);

/// Free evolution exp(-i t J^2 / 2): c_j -> exp(-i j^2 t / 2) c_j.
ModeState evolve_phase(const ModeState& s, double t);

/// sum_j conj(a_j) b_j over the union window (missing coefficients are zero).
/// Throws std::invalid_argument on a lambda-case mismatch.
Complex inner_product(const ModeState& a, const ModeState& b);

double squared_norm(const ModeState& s);

/// Fourier synthesis sum_j c_j exp(i j phi).
Complex wavefunction_at(const ModeState& s, double phi);

}  // namespace qcircle
