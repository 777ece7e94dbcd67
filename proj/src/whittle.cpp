#include "fracrank/whittle.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "fracrank/fracdiff.hpp"
#include "fracrank/spectral.hpp"

namespace fracrank {

namespace detail {

double lw_objective(double d, std::span<const double> freqs,
                    std::span<const double> ordinates) {
    const std::size_t m = freqs.size();
    double g = 0.0, mean_log_lam = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        g += std::pow(freqs[j], 2.0 * d) * ordinates[j];
        mean_log_lam += std::log(freqs[j]);
    }
    g /= static_cast<double>(m);
    mean_log_lam /= static_cast<double>(m);
    if (!(g > 0.0)) return std::numeric_limits<double>::infinity();
    return std::log(g) - 2.0 * d * mean_log_lam;
}

std::pair<double, bool> minimize_scalar(const std::function<double(double)>& f,
                                        double lo, double hi, std::size_t grid_points,
                                        double tol) {
    if (!(hi > lo)) throw std::invalid_argument("minimize_scalar: empty interval");
    if (grid_points < 2) grid_points = 2;

    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double d = lo + step * static_cast<double>(i);
        const double v = f(d);
        if (v < best) {  // strict: ties keep the smaller d
            best = v;
            best_i = i;
        }
    }
    double a = lo + step * static_cast<double>(best_i == 0 ? 0 : best_i - 1);
    double b = lo + step * static_cast<double>(
                       best_i + 1 >= grid_points ? grid_points - 1 : best_i + 1);

    // Golden-section refinement; equal values shrink toward the left.
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - ratio * (b - a);
    double e = a + ratio * (b - a);
    double fc = f(c), fe = f(e);
    while (b - a > tol) {
        if (fc <= fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + ratio * (b - a);
            fe = f(e);
        }
    }
    const double arg = fc <= fe ? c : e;
    const bool boundary = (arg - lo) <= 1e-5 || (hi - arg) <= 1e-5;
    return {arg, boundary};
}

}  // namespace detail

namespace {

constexpr std::size_t kGridPoints = 401;
constexpr double kTol = 1e-6;

void check_inputs(std::size_t T, std::size_t m, std::pair<double, double> bounds) {
    if (T < 4) throw std::invalid_argument("whittle: need T >= 4");
    if (m < 1 || 2 * m >= T)
        throw std::invalid_argument("whittle: bandwidth must satisfy 1 <= m < T/2");
    if (!(bounds.second > bounds.first))
        throw std::invalid_argument("whittle: invalid search interval");
}

MemoryEstimate make_estimate(double d_hat, bool boundary, std::size_t m,
                             MemoryMethod method, std::pair<double, double> bounds) {
    MemoryEstimate e;
    e.d_hat = d_hat;
    e.m = m;
    e.std_err = 1.0 / (2.0 * std::sqrt(static_cast<double>(m)));
    e.method = method;
    e.bounds = bounds;
    e.at_boundary = boundary;
    return e;
}

std::vector<double> band_ordinates(const Eigen::MatrixXcd& w, std::size_t col,
                                   std::size_t T) {
    const double scale = 1.0 / (2.0 * M_PI * static_cast<double>(T));
    std::vector<double> out(static_cast<std::size_t>(w.rows()));
    for (Eigen::Index j = 0; j < w.rows(); ++j)
        out[static_cast<std::size_t>(j)] =
            scale * std::norm(w(j, static_cast<Eigen::Index>(col)));
    return out;
}

MemoryEstimate local_whittle_from_ordinates(const std::vector<double>& freqs,
                                            const std::vector<double>& ordinates,
                                            std::size_t m,
                                            std::pair<double, double> bounds) {
    double max_ord = 0.0;
    for (double v : ordinates) max_ord = std::max(max_ord, v);
    if (max_ord == 0.0)
        throw std::invalid_argument(
            "local_whittle: zero periodogram over the whole band (constant series)");
    auto obj = [&](double d) { return detail::lw_objective(d, freqs, ordinates); };
    auto [d_hat, boundary] =
        detail::minimize_scalar(obj, bounds.first, bounds.second, kGridPoints, kTol);
    return make_estimate(d_hat, boundary, m, MemoryMethod::LocalWhittle, bounds);
}

}  // namespace

MemoryEstimate local_whittle(std::span<const double> x, std::size_t m,
                             std::pair<double, double> bounds) {
    check_inputs(x.size(), m, bounds);
    Eigen::MatrixXd col(static_cast<Eigen::Index>(x.size()), 1);
    for (std::size_t t = 0; t < x.size(); ++t)
        col(static_cast<Eigen::Index>(t), 0) = x[t];
    col.array() -= col.mean();
    const Eigen::MatrixXcd w = dft_band(col, m);
    const auto freqs = fourier_frequencies(x.size(), m);
    return local_whittle_from_ordinates(freqs, band_ordinates(w, 0, x.size()), m, bounds);
}

MemoryEstimate exact_local_whittle(std::span<const double> x, std::size_t m,
                                   std::pair<double, double> bounds,
                                   MeanHandling mean_handling) {
    const std::size_t T = x.size();
    check_inputs(T, m, bounds);

    Eigen::VectorXd base(static_cast<Eigen::Index>(T));
    for (std::size_t t = 0; t < T; ++t) base(static_cast<Eigen::Index>(t)) = x[t];
    switch (mean_handling) {
        case MeanHandling::None: break;
        case MeanHandling::Demean: base.array() -= base.mean(); break;
        case MeanHandling::FirstObs: base.array() -= base(0); break;
    }
    if (base.cwiseAbs().maxCoeff() == 0.0)
        throw std::invalid_argument(
            "exact_local_whittle: zero periodogram over the whole band (constant series)");

    const auto freqs = fourier_frequencies(T, m);
    double mean_log_lam = 0.0;
    for (double f : freqs) mean_log_lam += std::log(f);
    mean_log_lam /= static_cast<double>(m);

    const Eigen::MatrixXcd twiddle = dft_twiddle(T, m);
    const double scale = 1.0 / (2.0 * M_PI * static_cast<double>(T));
    Eigen::MatrixXd work(static_cast<Eigen::Index>(T), 1);

    auto obj = [&](double d) {
        work.col(0) = base;
        if (d != 0.0) {
            const auto pi = frac_coeffs(d, T);
            frac_filter_columns_inplace(work, pi.coeffs);
        }
        const Eigen::VectorXcd w = twiddle * work.col(0);
        const double g = scale * w.squaredNorm() / static_cast<double>(m);
        if (!(g > 0.0)) return std::numeric_limits<double>::infinity();
        return std::log(g) - 2.0 * d * mean_log_lam;
    };
    auto [d_hat, boundary] =
        detail::minimize_scalar(obj, bounds.first, bounds.second, kGridPoints, kTol);
    return make_estimate(d_hat, boundary, m, MemoryMethod::ExactLocalWhittle, bounds);
}

std::vector<MemoryEstimate> panel_memory(const Panel& panel, std::size_t m,
                                         MemoryMethod method,
                                         MeanHandling mean_handling) {
    const auto& v = panel.values();
    std::vector<MemoryEstimate> out;
    out.reserve(static_cast<std::size_t>(v.cols()));
    if (method == MemoryMethod::LocalWhittle) {
        const auto T = static_cast<std::size_t>(v.rows());
        check_inputs(T, m, kLocalWhittleBounds);
        Eigen::MatrixXd x = v;
        x.rowwise() -= x.colwise().mean();
        const Eigen::MatrixXcd w = dft_band(x, m);
        const auto freqs = fourier_frequencies(T, m);
        for (Eigen::Index c = 0; c < v.cols(); ++c)
            out.push_back(local_whittle_from_ordinates(
                freqs, band_ordinates(w, static_cast<std::size_t>(c), T), m,
                kLocalWhittleBounds));
    } else {
        for (Eigen::Index c = 0; c < v.cols(); ++c) {
            const Eigen::VectorXd col = v.col(c);
            out.push_back(exact_local_whittle(
                std::span<const double>(col.data(), static_cast<std::size_t>(col.size())),
                m, kExactLocalWhittleBounds, mean_handling));
        }
    }
    return out;
}

double pooled_memory(std::span<const double> estimates, std::span<const double> weights) {
    if (estimates.size() != weights.size())
        throw std::invalid_argument("pooled_memory: estimates and weights differ in length");
    if (estimates.empty()) throw std::invalid_argument("pooled_memory: empty input");
    double sum_w = 0.0, pooled = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        sum_w += weights[i];
        pooled += weights[i] * estimates[i];
    }
    if (std::abs(sum_w - 1.0) > 1e-12)
        throw std::invalid_argument("pooled_memory: weights must sum to 1");
    return pooled;
}

}  // namespace fracrank
