#pragma once

#include <complex>

namespace qcircle {

using Complex = std::complex<double>;

/// Arguments for the Jacobi theta functions theta(v | tau), nome
/// q = exp(i*pi*tau) with Im(tau) > 0 so that |q| < 1. The series is
/// truncated symmetrically with the discarded tail bounded below tol.
struct ThetaArgs {
    Complex v;
    Complex tau;
    double tol = 1e-12;
};

/// Smallest half-width N such that the conservative tail bound
///   sum_{|n|>N} |q|^((n-1/2)^2) * exp(2*pi*|n|*|Im v|) < tol
/// holds. The bound dominates the dropped terms of both theta2 and theta3.
/// Throws std::domain_error on Im(tau) <= 0, tol <= 0, non-finite input,
/// or when no N up to the iteration cap satisfies the bound (Im v too
/// large relative to Im tau).
int truncation_order(Complex tau, Complex v, double tol);

/// theta_3(v | tau) = sum_n q^(n^2) exp(2*pi*i*n*v), summed over n = -N..N.
Complex theta3(const ThetaArgs& args);

/// theta_2(v | tau) = sum_n q^((n-1/2)^2) exp(i*pi*v*(2n-1)), summed over
/// n = 1-N..N (the window symmetric about the n = 1/2 center of the lattice).
Complex theta2(const ThetaArgs& args);

}  // namespace qcircle
