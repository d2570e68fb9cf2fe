#pragma once

#include "qcircle/states.hpp"

namespace qcircle {

/// Half-width of the default coherent-state mode window around l; the
/// coefficients fall off like exp(-(j-l)^2/2), so 12 modes leave a relative
/// tail below 1e-15.
inline constexpr int kCoherentModeMargin = 12;

/// Truncation tolerance used for the theta-series closed forms.
inline constexpr double kThetaTol = 1e-14;

/// The point xi = exp(-l + i*alpha) on the cylinder phase space: l is the
/// classical angular momentum, alpha the classical angle (reduced into
/// [0, 2*pi) on construction).
struct CoherentParams {
    CoherentParams(LambdaCase c, double l, double alpha);

    LambdaCase lambda_case;
    double l;
    double alpha;

    Complex xi() const;
};

/// Coherent wavefunction f_xi(phi): theta3((phi-alpha-i*l)/(2*pi) | i/(2*pi))
/// in the boson case, theta2 of the same argument in the fermion case.
/// The state is unnormalized; expectation values divide by ||f_xi||^2.
Complex coherent_wavefunction(const CoherentParams& p, double phi, double tol = kThetaTol);

/// Termwise expansion of the theta series: coefficients
/// c_j = exp(-j^2/2 + j*l - i*j*alpha) on the default mode window.
ModeState coherent_modes(const CoherentParams& p);

/// <f_xi, f_xi'> closed form: theta3((alpha-alpha')/(2*pi) - i(l+l')/(2*pi) | i/pi)
/// for bosons, theta2 of the same argument for fermions.
/// Throws std::invalid_argument on a lambda-case mismatch.
Complex overlap(const CoherentParams& p1, const CoherentParams& p2, double tol = kThetaTol);

/// <J> in the normalized coherent state, computed exactly in mode space.
double expectation_J(const CoherentParams& p);

/// <U> in the normalized coherent state, computed in mode space:
/// sum_j conj(c_{j+1}) c_j / sum_j |c_j|^2.
Complex expectation_U(const CoherentParams& p);

}  // namespace qcircle
