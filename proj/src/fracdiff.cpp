#include "fracrank/fracdiff.hpp"

#include <cmath>
#include <stdexcept>

namespace fracrank {

FracCoeffs frac_coeffs(double d, std::size_t n) {
    if (n == 0) throw std::invalid_argument("frac_coeffs: n must be >= 1");
    if (!std::isfinite(d)) throw std::invalid_argument("frac_coeffs: d must be finite");
    FracCoeffs out;
    out.d = d;
    out.coeffs.resize(n);
    out.coeffs[0] = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        out.coeffs[k] = out.coeffs[k - 1] * (kd - 1.0 - d) / kd;
    }
    return out;
}

std::vector<double> frac_filter(std::span<const double> x, double d) {
    if (x.empty()) throw std::invalid_argument("frac_filter: empty input");
    if (!std::isfinite(d)) throw std::invalid_argument("frac_filter: d must be finite");
    const std::size_t n = x.size();
    std::vector<double> y(x.begin(), x.end());
    if (d == 0.0) return y;
    const auto pi = frac_coeffs(d, n);
    Eigen::Map<Eigen::MatrixXd> m(y.data(), static_cast<Eigen::Index>(n), 1);
    // The k=0 term is already in place (pi_0 = 1), so start from k=1.
    for (std::size_t k = 1; k < n; ++k) {
        const double c = pi.coeffs[k];
        if (c == 0.0) continue;
        const auto len = static_cast<Eigen::Index>(n - k);
        m.col(0).tail(len).array() +=
            c * Eigen::Map<const Eigen::ArrayXd>(x.data(), len);
    }
    return y;
}

void frac_filter_columns_inplace(Eigen::Ref<Eigen::MatrixXd> x,
                                 std::span<const double> coeffs) {
    const Eigen::Index T = x.rows();
    if (coeffs.size() < static_cast<std::size_t>(T))
        throw std::invalid_argument("frac_filter_columns_inplace: too few coefficients");
    if (coeffs[0] != 1.0)
        throw std::invalid_argument("frac_filter_columns_inplace: coeffs[0] must be 1");
    Eigen::VectorXd scratch(T);
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        scratch = x.col(c);  // pristine input; the column accumulates the output
        for (Eigen::Index k = 1; k < T; ++k) {
            const double ck = coeffs[static_cast<std::size_t>(k)];
            if (ck == 0.0) continue;
            x.col(c).tail(T - k).array() += ck * scratch.head(T - k).array();
        }
    }
}

}  // namespace fracrank
