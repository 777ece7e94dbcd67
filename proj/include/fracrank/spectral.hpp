#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "fracrank/panel.hpp"

namespace fracrank {

/// Cross-periodogram matrices at the first m Fourier frequencies.
struct PeriodogramSet {
    std::size_t T = 0;                         // sample size behind the transform
    std::vector<double> freqs;                 // lambda_j = 2 pi j / T, j = 1..m
    std::vector<Eigen::MatrixXcd> matrices;    // I_y(lambda_j), Hermitian PSD
    bool demeaned = true;
};

/// lambda_j = 2 pi j / T for j = 1..m; requires 1 <= m < T/2.
std::vector<double> fourier_frequencies(std::size_t T, std::size_t m);

/// I_y(lambda_j) = w(lambda_j) w(lambda_j)^H / (2 pi T) with
/// w(lambda) = sum_{t=1}^T y_t e^{-i lambda t}, computed by direct summation
/// after column demeaning (default on).
PeriodogramSet cross_periodogram(const Eigen::MatrixXd& values, std::size_t m,
                                 bool demean = true);
PeriodogramSet cross_periodogram(const Panel& panel, std::size_t m,
                                 bool demean = true);

/// DFT vectors w(lambda_j), j = 1..m, as an m x p matrix; building block for
/// the periodogram and for the Whittle objectives.
Eigen::MatrixXcd dft_band(const Eigen::MatrixXd& values, std::size_t m);

/// The m x T matrix of factors e^{-i lambda_j t}; w = twiddle * values.
/// Exposed so repeated transforms of same-length series (the exact local
/// Whittle objective) can reuse it.
Eigen::MatrixXcd dft_twiddle(std::size_t T, std::size_t m);

}  // namespace fracrank
