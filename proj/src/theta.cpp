#include "qcircle/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcircle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxOrder = 1024;

void validate(Complex tau, Complex v, double tol) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) ||
        !std::isfinite(tau.real()) || !std::isfinite(tau.imag()) ||
        !std::isfinite(tol)) {
        throw std::domain_error("theta: non-finite argument");
    }
    if (!(tau.imag() > 0.0)) {
        throw std::domain_error("theta: Im(tau) must be positive");
    }
    if (!(tol > 0.0)) {
        throw std::domain_error("theta: tol must be positive");
    }
}

}  // namespace

int truncation_order(Complex tau, Complex v, double tol) {
    validate(tau, v, tol);
    const double decay = kPi * tau.imag();  // |q| = exp(-decay)
    const double growth = 2.0 * kPi * std::abs(v.imag());
    for (int n = 1; n <= kMaxOrder; ++n) {
        // First discarded term, and a geometric bound on the ratio of
        // successive tail terms; the factor 2 covers both ends of the sum.
        const double half = n + 0.5;
        const double first = std::exp(-decay * half * half + growth * (n + 1));
        const double ratio = std::exp(-decay * 2.0 * (n + 1) + growth);
        if (ratio < 1.0 && 2.0 * first / (1.0 - ratio) < tol) {
            return n;
        }
    }
    throw std::domain_error(
        "theta: tail bound not met within the iteration cap (|Im v| too large "
        "relative to Im tau)");
}

// Both sums accumulate mirror pairs together, so parity (v -> -v) holds
// bit-exactly: the mirrored term values are identical and addition within a
// pair is commutative.

Complex theta3(const ThetaArgs& args) {
    const int n_max = truncation_order(args.tau, args.v, args.tol);
    const Complex i_pi(0.0, kPi);
    const auto term = [&](int n) {
        const double dn = n;
        return std::exp(i_pi * (args.tau * (dn * dn) + 2.0 * dn * args.v));
    };
    Complex acc = term(0);
    for (int n = 1; n <= n_max; ++n) {
        acc += term(n) + term(-n);
    }
    return acc;
}

Complex theta2(const ThetaArgs& args) {
    const int n_max = truncation_order(args.tau, args.v, args.tol);
    const Complex i_pi(0.0, kPi);
    const auto term = [&](int n) {
        const double half = n - 0.5;
        return std::exp(i_pi * (args.tau * (half * half) + (2.0 * n - 1.0) * args.v));
    };
    Complex acc(0.0, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        acc += term(n) + term(1 - n);
    }
    return acc;
}

}  // namespace qcircle
