#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fracrank/panel.hpp"
#include "fracrank/spectral.hpp"

namespace fracrank {

/// Non-cointegration diagnostic for a p-variate band:
///   X* = (m^2 / sum_j v_j^2) s*^2 / { p^2 tr(R* A R* A) - p },
/// with s* = tr(G*^-1 H*), v_j = log j - mean log, A = diag(weights), and
/// G*, H* the band averages of the cross-periodogram re-weighted by
/// lambda_j^{d_i + d_k} at the column-wise local Whittle estimates. R* is the
/// correlation normalization D^-1/2 G* D^-1/2 (unit diagonal), which makes
/// the statistic invariant to rescaling any column. Under non-cointegration
/// (and memory parameters below 0.5) X* is asymptotically chi-squared_1.
struct XStarResult {
    double x_star = 0.0;
    double s_star = 0.0;
    double d_tilde = 0.0;            // pooled memory sum a_i d_i
    Eigen::MatrixXd G, H, R;
    Eigen::VectorXd D;               // diagonal of G
    Eigen::VectorXd weights;
    std::size_t m = 0;
    double p_value = 1.0;
    std::vector<double> d_hats;      // column-wise local Whittle estimates
    double discarded_imag = 0.0;     // max |imaginary| dropped taking real parts
    std::vector<std::string> warnings;
};

/// Band averages G = Re (1/m) sum_j I(lambda_j) lambda_j^{2d} and
/// H = Re (1/m) sum_j v_j I(lambda_j) lambda_j^{2d}, common exponent.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> gh_matrices(const PeriodogramSet& pgrams,
                                                        double d);

/// Same with per-column orders: element (i,k) is weighted by
/// lambda_j^{d[i] + d[k]}. The common-exponent form is the d_i == d special
/// case.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> gh_matrices(const PeriodogramSet& pgrams,
                                                        std::span<const double> d);

/// Full test on a panel: estimates each d_i by local Whittle at the same
/// bandwidth, then assembles the statistic. Default weights are 1/p.
XStarResult xstar(const Panel& panel, std::size_t m,
                  Eigen::VectorXd weights = Eigen::VectorXd());

/// As above with the memory estimates supplied by the caller (the sequential
/// rank procedure estimates them once and reuses them per tuple).
XStarResult xstar_given_memory(const Eigen::MatrixXd& values, std::size_t m,
                               std::span<const double> d_hats,
                               Eigen::VectorXd weights = Eigen::VectorXd());

}  // namespace fracrank
