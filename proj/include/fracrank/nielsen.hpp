#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

#include "fracrank/panel.hpp"

namespace fracrank {

enum class DetCase { None, Const, Trend };

std::string to_string(DetCase c);
DetCase det_case_from_string(const std::string& s);

/// Deterministic-term removal: none returns the input, const subtracts column
/// means, trend takes column-wise least-squares residuals on [1, t].
Panel remove_deterministics(const Panel& panel, DetCase det_case);
Eigen::MatrixXd detrend_columns(Eigen::MatrixXd values, DetCase det_case);

/// Eigenvalues of the symmetric pencil |theta B - A| = 0, computed through a
/// Cholesky square-root reduction of B; ascending. B must be positive
/// definite, A symmetric.
std::vector<double> generalized_eigenvalues(const Eigen::MatrixXd& A,
                                            const Eigen::MatrixXd& B);

struct NielsenResult {
    std::vector<double> eigenvalues;      // ascending variance ratios
    std::vector<double> lambda_by_r0;     // Lambda_{p,r0}(d1) for r0 = 0..p-1
    double d1 = 0.1;
    DetCase det_case = DetCase::None;
    double xi = 0.0;                      // significance level (rank estimation only)
    std::vector<double> critical_values;  // per tested r0
    std::vector<bool> reject;             // per tested r0
    std::size_t r_hat = 0;
    bool ceiling = false;                 // every r0 rejected; r_hat capped at p-1
    std::size_t T = 0, p = 0;
};

/// Variance-ratio statistic for one candidate rank:
///   Lambda_{p,r0}(d1) = T^{2 d1} * sum of the p - r0 smallest eigenvalues of
/// the pencil (A_T, B_T), A_T = sum Z_t Z_t', B_T = sum Ztilde_t Ztilde_t',
/// where Z is the panel after deterministic removal and Ztilde its type-II
/// fractional cumulation of order d1. Large values reject H0: r = r0.
double nielsen_lambda(const Panel& panel, std::size_t r0, double d1, DetCase det_case);

/// Eigenvalues and the full Lambda profile (no decisions).
NielsenResult nielsen_stats(const Panel& panel, double d1, DetCase det_case);

/// Lambda_{q,0}(d1) for every leading dimension q = 1..max_dim of the panel's
/// columns; the critical-value simulator drives this exact code path.
std::vector<double> lambda_leading_dims(const Eigen::MatrixXd& values, double d1,
                                        DetCase det_case, std::size_t max_dim);

class CriticalValueTable;  // critval.hpp

/// Sequential rank decision: tests r0 = 0, 1, ... upper-tail against
/// CV_{xi, p-r0}; the estimate is the first non-rejected r0 (or p-1 with the
/// ceiling flag when every candidate rejects).
NielsenResult estimate_rank_nielsen(const Panel& panel, double d1, DetCase det_case,
                                    const CriticalValueTable& cv_table, double xi);

}  // namespace fracrank
