#include "fracrank/xstar.hpp"

#include <cmath>
#include <stdexcept>

#include "fracrank/chisq.hpp"
#include "fracrank/errors.hpp"
#include "fracrank/whittle.hpp"

namespace fracrank {

namespace {

std::vector<double> centered_log_weights(std::size_t m) {
    std::vector<double> v(m);
    double mean = 0.0;
    for (std::size_t j = 1; j <= m; ++j) {
        v[j - 1] = std::log(static_cast<double>(j));
        mean += v[j - 1];
    }
    mean /= static_cast<double>(m);
    for (auto& x : v) x -= mean;
    return v;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> gh_from_exponents(
    const PeriodogramSet& pgrams, const Eigen::VectorXd& d, double* discarded_imag) {
    const std::size_t m = pgrams.matrices.size();
    if (m == 0) throw std::invalid_argument("gh_matrices: empty periodogram set");
    const auto p = pgrams.matrices.front().rows();
    if (d.size() != p)
        throw std::invalid_argument("gh_matrices: one memory order per column required");

    const auto v = centered_log_weights(m);
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(p, p);
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(p, p);
    Eigen::VectorXd lam_d(p);
    for (std::size_t j = 0; j < m; ++j) {
        const double lam = pgrams.freqs[j];
        for (Eigen::Index i = 0; i < p; ++i) lam_d(i) = std::pow(lam, d(i));
        const Eigen::MatrixXcd w =
            lam_d.asDiagonal() * pgrams.matrices[j] * lam_d.asDiagonal();
        G += w;
        H += v[j] * w;
    }
    G /= static_cast<double>(m);
    H /= static_cast<double>(m);
    if (discarded_imag != nullptr)
        *discarded_imag = std::max(G.imag().cwiseAbs().maxCoeff(),
                                   H.imag().cwiseAbs().maxCoeff());
    return {G.real(), H.real()};
}

Eigen::VectorXd default_weights(Eigen::Index p) {
    return Eigen::VectorXd::Constant(p, 1.0 / static_cast<double>(p));
}

}  // namespace

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> gh_matrices(const PeriodogramSet& pgrams,
                                                        double d) {
    const auto p = pgrams.matrices.empty() ? 0 : pgrams.matrices.front().rows();
    return gh_from_exponents(pgrams, Eigen::VectorXd::Constant(p, d), nullptr);
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> gh_matrices(const PeriodogramSet& pgrams,
                                                        std::span<const double> d) {
    Eigen::VectorXd dv(static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) dv(static_cast<Eigen::Index>(i)) = d[i];
    return gh_from_exponents(pgrams, dv, nullptr);
}

XStarResult xstar_given_memory(const Eigen::MatrixXd& values, std::size_t m,
                               std::span<const double> d_hats,
                               Eigen::VectorXd weights) {
    const Eigen::Index p = values.cols();
    if (p < 2)
        throw std::invalid_argument(
            "xstar: statistic undefined for p = 1 (denominator vanishes)");
    if (d_hats.size() != static_cast<std::size_t>(p))
        throw std::invalid_argument("xstar: one memory estimate per column required");
    if (weights.size() == 0) weights = default_weights(p);
    if (weights.size() != p)
        throw std::invalid_argument("xstar: one weight per column required");
    if (std::abs(weights.sum() - 1.0) > 1e-12)
        throw std::invalid_argument("xstar: weights must sum to 1");

    XStarResult res;
    res.m = m;
    res.weights = weights;
    res.d_hats.assign(d_hats.begin(), d_hats.end());
    res.d_tilde = 0.0;
    for (Eigen::Index i = 0; i < p; ++i)
        res.d_tilde += weights(i) * d_hats[static_cast<std::size_t>(i)];
    for (Eigen::Index i = 0; i < p; ++i)
        if (d_hats[static_cast<std::size_t>(i)] >= 0.5)
            res.warnings.push_back(
                "memory estimate for column " + std::to_string(i) +
                " is >= 0.5; the X* null requires stationary series");

    const auto pgrams = cross_periodogram(values, m, /*demean=*/true);
    Eigen::VectorXd dv(p);
    for (Eigen::Index i = 0; i < p; ++i) dv(i) = d_hats[static_cast<std::size_t>(i)];
    auto [G, H] = gh_from_exponents(pgrams, dv, &res.discarded_imag);
    res.G = G;
    res.H = H;

    res.D = G.diagonal();
    if ((res.D.array() <= 0.0).any())
        throw singular_matrix_error("xstar: non-positive diagonal in G");
    const Eigen::VectorXd dinv_sqrt = res.D.cwiseSqrt().cwiseInverse();
    res.R = dinv_sqrt.asDiagonal() * G * dinv_sqrt.asDiagonal();

    // s* = tr(G^-1 H). H vanishes identically at m = 1 (v_1 = 0); skip the
    // solve there so the degenerate case yields exactly zero.
    if (H.cwiseAbs().maxCoeff() == 0.0) {
        res.s_star = 0.0;
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
        if (es.info() != Eigen::Success)
            throw numerical_error("xstar: eigendecomposition of G failed");
        const double emax = es.eigenvalues().maxCoeff();
        const double emin = es.eigenvalues().minCoeff();
        if (!(emax > 0.0) || emin <= 1e-12 * emax)
            throw singular_matrix_error(
                "xstar: G is numerically singular over the band "
                "(near-perfect collinearity)");
        const Eigen::MatrixXd Ginv_H =
            es.eigenvectors() *
            es.eigenvalues().cwiseInverse().asDiagonal() *
            es.eigenvectors().transpose() * H;
        res.s_star = Ginv_H.trace();
    }

    // Denominator p^2 tr(R A R A) - p with A = diag(weights).
    const Eigen::MatrixXd RA = res.R * weights.asDiagonal();
    const double denom =
        static_cast<double>(p) * static_cast<double>(p) * (RA * RA).trace() -
        static_cast<double>(p);
    if (denom < 1e-10)
        throw numerical_error(
            "xstar: denominator p^2 tr(RARA) - p is numerically zero");

    const auto v = centered_log_weights(m);
    double sum_v2 = 0.0;
    for (double x : v) sum_v2 += x * x;
    const double md = static_cast<double>(m);
    // Exact score variance sum v_j^2 = m kappa_m in place of its large-m
    // limit m; the two agree asymptotically.
    const double scale = sum_v2 > 0.0 ? md * md / sum_v2 : 0.0;
    res.x_star = scale * res.s_star * res.s_star / denom;
    res.p_value = chi2_1_upper_tail(res.x_star);
    return res;
}

XStarResult xstar(const Panel& panel, std::size_t m, Eigen::VectorXd weights) {
    const auto estimates = panel_memory(panel, m, MemoryMethod::LocalWhittle);
    std::vector<double> d_hats;
    d_hats.reserve(estimates.size());
    std::vector<std::string> boundary_notes;
    for (std::size_t i = 0; i < estimates.size(); ++i) {
        d_hats.push_back(estimates[i].d_hat);
        if (estimates[i].at_boundary)
            boundary_notes.push_back("memory estimate for '" + panel.labels()[i] +
                                     "' sits at a search bound");
    }
    auto res = xstar_given_memory(panel.values(), m, d_hats, std::move(weights));
    res.warnings.insert(res.warnings.end(), boundary_notes.begin(), boundary_notes.end());
    return res;
}

}  // namespace fracrank
