#include "fracrank/arfima.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "fracrank/fracdiff.hpp"
#include "fracrank/rng.hpp"

namespace fracrank {

namespace {

// Spectral radius of the lag-recursion companion matrix; the polynomial
// 1 - c_1 z - ... - c_k z^k has all roots outside the unit circle iff this
// radius is < 1.
double companion_radius(const std::vector<double>& c) {
    const auto k = static_cast<Eigen::Index>(c.size());
    if (k == 0) return 0.0;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index j = 0; j < k; ++j) comp(0, j) = c[static_cast<std::size_t>(j)];
    if (k > 1) comp.block(1, 0, k - 1, k - 1).setIdentity();
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

ArfimaSpec::ArfimaSpec(double d_, std::vector<double> ar_, std::vector<double> ma_,
                       double sigma_)
    : d(d_), ar(std::move(ar_)), ma(std::move(ma_)), sigma(sigma_) {
    if (!std::isfinite(d)) throw std::invalid_argument("ArfimaSpec: d must be finite");
    if (!(sigma > 0.0)) throw std::invalid_argument("ArfimaSpec: sigma must be positive");
    if (companion_radius(ar) >= 1.0)
        throw std::invalid_argument("ArfimaSpec: AR polynomial root on or inside the unit circle");
    // theta(z) = 1 + sum theta_j z^j, so negate for the companion form.
    std::vector<double> neg(ma.size());
    for (std::size_t i = 0; i < ma.size(); ++i) neg[i] = -ma[i];
    if (companion_radius(neg) >= 1.0)
        throw std::invalid_argument("ArfimaSpec: MA polynomial root on or inside the unit circle");
}

std::vector<double> simulate_arfima(std::size_t T, const ArfimaSpec& spec,
                                    std::uint64_t seed) {
    if (T == 0) throw std::invalid_argument("simulate_arfima: T must be >= 1");
    rng::GaussianSampler gauss(seed);
    std::vector<double> eps(T);
    for (auto& e : eps) e = spec.sigma * gauss.next();

    std::vector<double> u(T);
    for (std::size_t t = 0; t < T; ++t) {
        double acc = eps[t];
        for (std::size_t j = 0; j < spec.ma.size() && j < t; ++j)
            acc += spec.ma[j] * eps[t - 1 - j];
        for (std::size_t i = 0; i < spec.ar.size() && i < t; ++i)
            acc += spec.ar[i] * u[t - 1 - i];
        u[t] = acc;
    }
    if (spec.d == 0.0) return u;
    return frac_filter(u, -spec.d);
}

}  // namespace fracrank
