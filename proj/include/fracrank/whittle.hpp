#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "fracrank/panel.hpp"

namespace fracrank {

enum class MemoryMethod { LocalWhittle, ExactLocalWhittle };

/// How the exact local Whittle objective treats an unknown level:
/// none leaves the series as-is, demean subtracts the sample mean,
/// first_obs subtracts the first observation.
enum class MeanHandling { None, Demean, FirstObs };

struct MemoryEstimate {
    double d_hat = 0.0;
    std::size_t m = 0;
    double std_err = 0.0;  // 1 / (2 sqrt(m))
    MemoryMethod method = MemoryMethod::LocalWhittle;
    std::pair<double, double> bounds{0.0, 0.0};
    bool at_boundary = false;  // warning: minimizer pinned to a search bound
};

inline constexpr std::pair<double, double> kLocalWhittleBounds{-0.5, 1.0};
inline constexpr std::pair<double, double> kExactLocalWhittleBounds{-0.5, 2.5};

/// Gaussian semiparametric (local Whittle) estimate over the first m Fourier
/// frequencies: minimizes
///   R(d) = log{(1/m) sum_j lambda_j^{2d} I(lambda_j)} - 2d (1/m) sum_j log lambda_j
/// by a 401-point grid scan plus golden-section refinement to 1e-6 in d.
/// The series is demeaned before transforming.
MemoryEstimate local_whittle(std::span<const double> x, std::size_t m,
                             std::pair<double, double> bounds = kLocalWhittleBounds);

/// Exact local Whittle: same objective with I replaced by the periodogram of
/// the type-II fractionally differenced series, valid for nonstationary d.
MemoryEstimate exact_local_whittle(std::span<const double> x, std::size_t m,
                                   std::pair<double, double> bounds = kExactLocalWhittleBounds,
                                   MeanHandling mean_handling = MeanHandling::Demean);

/// Column-wise estimation; output order matches column order.
std::vector<MemoryEstimate> panel_memory(const Panel& panel, std::size_t m,
                                         MemoryMethod method,
                                         MeanHandling mean_handling = MeanHandling::Demean);

/// Weighted pool d~ = sum a_i d_i; weights must sum to 1 within 1e-12.
double pooled_memory(std::span<const double> estimates, std::span<const double> weights);

namespace detail {
/// Local Whittle objective given the band periodogram ordinates; exposed for
/// grid-oracle tests.
double lw_objective(double d, std::span<const double> freqs,
                    std::span<const double> ordinates);

/// Grid scan (>= 2 points) plus golden-section refinement; on ties prefers
/// the smaller argument. Returns (argmin, hit_boundary).
std::pair<double, bool> minimize_scalar(const std::function<double(double)>& f,
                                        double lo, double hi, std::size_t grid_points,
                                        double tol);
}  // namespace detail

}  // namespace fracrank
