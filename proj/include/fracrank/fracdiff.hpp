#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

// Type-II fractional differencing and cumulation: the operator (1-L)^d
// truncated at the sample start, with pre-sample values treated as zero.
// Under this convention filtering by d and then by -d is an exact identity
// on any finite sample.

namespace fracrank {

/// Expansion coefficients of (1-L)^d.
struct FracCoeffs {
    double d = 0.0;
    std::vector<double> coeffs;  // pi_0 = 1, pi_k = pi_{k-1} (k-1-d)/k
};

/// First n coefficients of (1-L)^d via the stable recursion.
/// Cumulation coefficients psi_k of (1-L)^{-d} are obtained by calling with -d.
FracCoeffs frac_coeffs(double d, std::size_t n);

/// y_t = sum_{k=0}^{t-1} pi_k(d) x_{t-k}, t = 1..T.
/// d > 0 differences, d < 0 cumulates, d = 0 is the identity.
std::vector<double> frac_filter(std::span<const double> x, double d);

/// Column-wise filter with precomputed coefficients (coeffs.size() >= rows).
/// In-place; shared by the simulation engine and the estimators.
void frac_filter_columns_inplace(Eigen::Ref<Eigen::MatrixXd> x,
                                 std::span<const double> coeffs);

}  // namespace fracrank
