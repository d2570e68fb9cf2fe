#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qcircle/coherent.hpp"

namespace qcircle {

/// Uniform angle samples phi_m = 2*pi*m / n_points, m = 0..n_points-1,
/// covering [0, 2*pi) exactly once. Requires n_points >= 8.
class AngleGrid {
public:
    explicit AngleGrid(int n_points);

    int n_points() const { return n_points_; }
    double point(int m) const;
    double spacing() const;
    /// Cell midpoint phi_m + spacing/2; used by the quadrature rules to stay
    /// clear of the sawtooth discontinuity at phi = 0.
    double midpoint(int m) const;

private:
    int n_points_;
};

/// A detected discontinuity of the classical angle Arg<U(t)>.
struct JumpEvent {
    double t_star;       // jump time
    double left_angle;   // limit from below, in [0, 2*pi)
    double right_angle;  // limit from above, in [0, 2*pi)
    double gap;          // wrap-aware angular size of the discontinuity
};

struct DensityMaximum {
    double phi;
    double value;
};

/// Thrown when Arg<U(t)> is requested where |<U(t)>| is below kAngleFloor,
/// i.e. at the zero crossing that constitutes the jump itself.
class AngleUndefinedError : public std::domain_error {
    using std::domain_error::domain_error;
};

/// |<U(t)>| below this makes the classical angle ill-conditioned.
inline constexpr double kAngleFloor = 1e-12;

/// Wrap-aware gap between adjacent scan samples above this flags a jump;
/// true jumps are ~pi while numerical drift at dt <= 1e-3 stays well below.
inline constexpr double kJumpThreshold = 1.0;

/// Evolved wave packet f_xi(phi, t): theta3((phi-alpha-i*l)/(2*pi) | (i-t)/(2*pi))
/// in the boson case, theta2 of the same arguments in the fermion case.
Complex evolved_wavefunction(const CoherentParams& p, double phi, double t,
                             double tol = kThetaTol);

/// |f_xi(phi,t)|^2 / ||f_xi||^2 with the norm from the overlap diagonal.
double probability_density(const CoherentParams& p, double phi, double t,
                           double tol = kThetaTol);

/// <U(t)> closed form: e^{-1/4} e^{i alpha} theta2(t/(2*pi) - i*l/pi | i/pi)
/// / theta3(i*l/pi | i/pi) for bosons; theta2 and theta3 swap roles for
/// fermions.
Complex expectation_U_t(const CoherentParams& p, double t, double tol = kThetaTol);

/// Classical angle Arg<U(t)> reduced into [0, 2*pi). Throws
/// AngleUndefinedError when |<U(t)>| <= kAngleFloor.
double classical_angle(const CoherentParams& p, double t, double tol = kThetaTol);

/// <phi(t)> = (1/2*pi) Int_0^{2*pi} phi p(phi,t) dphi by the midpoint rule
/// on the grid.
double expectation_angle_t(const CoherentParams& p, double t, const AngleGrid& grid,
                           double tol = kThetaTol);

/// Local maxima of the probability density on the grid, refined by
/// golden-section search to 1e-8 in phi and sorted by value descending.
/// Requires grid.n_points() >= 64.
std::vector<DensityMaximum> find_density_maxima(const CoherentParams& p, double t,
                                                const AngleGrid& grid,
                                                double tol = kThetaTol);

/// Scan the classical angle over [t_range.first, t_range.second) with step dt,
/// flag wrap-aware gaps above kJumpThreshold, and refine each jump time by
/// bisection to 1e-8. Returns the events in time order (empty when none).
std::vector<JumpEvent> detect_jumps(const CoherentParams& p,
                                    std::pair<double, double> t_range, double dt,
                                    double tol = kThetaTol);

}  // namespace qcircle
