#include "fracrank/spectral.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace fracrank {

namespace {

void check_bandwidth(std::size_t T, std::size_t m) {
    if (m < 1) throw std::invalid_argument("bandwidth m must be >= 1");
    if (2 * m >= T)
        throw std::invalid_argument("bandwidth m must satisfy m < T/2 (got m=" +
                                    std::to_string(m) + ", T=" + std::to_string(T) + ")");
}

}  // namespace

std::vector<double> fourier_frequencies(std::size_t T, std::size_t m) {
    check_bandwidth(T, m);
    std::vector<double> out(m);
    for (std::size_t j = 1; j <= m; ++j)
        out[j - 1] = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(T);
    return out;
}

Eigen::MatrixXcd dft_twiddle(std::size_t T, std::size_t m) {
    Eigen::MatrixXcd e(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(T));
    for (std::size_t j = 1; j <= m; ++j) {
        const double lam = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(T);
        for (std::size_t t = 1; t <= T; ++t)
            e(static_cast<Eigen::Index>(j - 1), static_cast<Eigen::Index>(t - 1)) =
                std::polar(1.0, -lam * static_cast<double>(t));
    }
    return e;
}

Eigen::MatrixXcd dft_band(const Eigen::MatrixXd& values, std::size_t m) {
    const auto T = static_cast<std::size_t>(values.rows());
    check_bandwidth(T, m);
    return dft_twiddle(T, m) * values;
}

PeriodogramSet cross_periodogram(const Eigen::MatrixXd& values, std::size_t m,
                                 bool demean) {
    const auto T = static_cast<std::size_t>(values.rows());
    if (T < 4) throw std::invalid_argument("cross_periodogram: need T >= 4");
    check_bandwidth(T, m);

    Eigen::MatrixXd x = values;
    if (demean) x.rowwise() -= x.colwise().mean();

    const Eigen::MatrixXcd w = dft_band(x, m);
    const double scale = 1.0 / (2.0 * M_PI * static_cast<double>(T));

    PeriodogramSet out;
    out.T = T;
    out.freqs = fourier_frequencies(T, m);
    out.demeaned = demean;
    out.matrices.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Eigen::VectorXcd wj = w.row(static_cast<Eigen::Index>(j)).transpose();
        out.matrices.push_back(scale * (wj * wj.adjoint()));
    }
    return out;
}

PeriodogramSet cross_periodogram(const Panel& panel, std::size_t m, bool demean) {
    return cross_periodogram(panel.values(), m, demean);
}

}  // namespace fracrank
