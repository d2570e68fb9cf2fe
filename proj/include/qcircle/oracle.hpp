#pragma once

#include "qcircle/coherent.hpp"

namespace qcircle {

// Brute-force cross-validation engine. Every quantity is computed directly
// from truncated Fourier modes with coefficients recomputed inline; nothing
// here calls the theta module, so a defect in the closed forms cannot hide.

/// Default summation window: 41 modes, i.e. +/-20 around l, wide enough that
/// the oracle's truncation error dominates the main path's.
inline constexpr int kOracleModes = 41;

/// |sum_j c_j e^{-i j^2 t/2} e^{i j phi}|^2 / sum_j |c_j|^2 from the raw
/// double sum. Requires n_modes >= 25.
double oracle_density(const CoherentParams& p, double phi, double t,
                      int n_modes = kOracleModes);

/// sum_j conj(c_{j+1}) c_j e^{i(2j+1)t/2} / sum_j |c_j|^2.
Complex oracle_expectation_U(const CoherentParams& p, double t,
                             int n_modes = kOracleModes);

/// sum_j j |c_j|^2 / sum_j |c_j|^2.
double oracle_expectation_J(const CoherentParams& p, int n_modes = kOracleModes);

}  // namespace qcircle
