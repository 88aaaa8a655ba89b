#pragma once

#include <cstddef>
#include <functional>
#include <vector>

// Riemann-Siegel evaluation of the Hardy Z function for large t and a
// Gram-block zero locator built on it. Used only to produce zero tables.

namespace zv::rs {

/// Stirling series for theta(t); accurate to ~1e-15 relative for t >= 50.
double theta_asymptotic(double t);

/// Z(t) from the main sum plus the C0..C4 remainder terms. Needs t >= 2 pi.
double hardy_Z_rs(double t);

/// Gram point g_n, the solution of theta(g) = n pi (n >= -1).
double gram_point(long n);

struct ZeroSearchStats {
    std::size_t gram_points = 0;
    std::size_t bad_gram_points = 0;
    std::size_t z_evaluations = 0;
    std::size_t refined_blocks = 0;
};

/// The first `count` zero ordinates, located by Gram blocks (Rosser's rule)
/// and polished to |dt| < tol. Z is taken from `low_z` for t < switch_t and
/// from hardy_Z_rs above it.
std::vector<double> first_zeros(std::size_t count, const std::function<double(double)>& low_z,
                                double switch_t, double tol, ZeroSearchStats* stats = nullptr);

}  // namespace zv::rs
