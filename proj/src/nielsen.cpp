#include "fracrank/nielsen.hpp"

#include <cmath>
#include <stdexcept>

#include "fracrank/critval.hpp"
#include "fracrank/errors.hpp"
#include "fracrank/fracdiff.hpp"

namespace fracrank {

std::string to_string(DetCase c) {
    switch (c) {
        case DetCase::None: return "none";
        case DetCase::Const: return "const";
        case DetCase::Trend: return "trend";
    }
    return "none";
}

DetCase det_case_from_string(const std::string& s) {
    if (s == "none") return DetCase::None;
    if (s == "const") return DetCase::Const;
    if (s == "trend") return DetCase::Trend;
    throw std::invalid_argument("unknown deterministic case '" + s + "'");
}

Eigen::MatrixXd detrend_columns(Eigen::MatrixXd x, DetCase det_case) {
    const Eigen::Index T = x.rows();
    switch (det_case) {
        case DetCase::None:
            return x;
        case DetCase::Const:
            x.rowwise() -= x.colwise().mean();
            return x;
        case DetCase::Trend: {
            if (T <= 2)
                throw std::invalid_argument(
                    "detrend_columns: trend case needs T > 2 (regression underdetermined)");
            Eigen::VectorXd t = Eigen::VectorXd::LinSpaced(T, 1.0, static_cast<double>(T));
            t.array() -= t.mean();
            const double stt = t.squaredNorm();
            const Eigen::RowVectorXd means = x.colwise().mean();
            x.rowwise() -= means;
            const Eigen::RowVectorXd slopes = (t.transpose() * x) / stt;
            x.noalias() -= t * slopes;
            return x;
        }
    }
    return x;
}

Panel remove_deterministics(const Panel& panel, DetCase det_case) {
    return Panel(detrend_columns(panel.values(), det_case), panel.labels(),
                 panel.time_index());
}

std::vector<double> generalized_eigenvalues(const Eigen::MatrixXd& A,
                                            const Eigen::MatrixXd& B) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw std::invalid_argument("generalized_eigenvalues: dimension mismatch");
    const double asym = (A - A.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * std::max(1.0, A.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("generalized_eigenvalues: A is not symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(B);
    if (llt.info() != Eigen::Success)
        throw numerical_error("generalized_eigenvalues: B is not positive definite");
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(A, B,
                                                                 Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw numerical_error("generalized_eigenvalues: pencil solve failed");
    const auto& ev = es.eigenvalues();  // ascending
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

namespace {

// Detrend, cumulate, and return the ascending pencil eigenvalues of the
// leading q columns; shared by the test and the critical-value simulator.
std::vector<double> pencil_eigenvalues(const Eigen::MatrixXd& values, double d1,
                                       DetCase det_case, Eigen::Index q) {
    const Eigen::MatrixXd z = detrend_columns(values.leftCols(q), det_case);
    Eigen::MatrixXd zt = z;
    const auto psi = frac_coeffs(-d1, static_cast<std::size_t>(z.rows()));
    frac_filter_columns_inplace(zt, psi.coeffs);
    const Eigen::MatrixXd A = z.transpose() * z;
    const Eigen::MatrixXd B = zt.transpose() * zt;
    return generalized_eigenvalues(A, B);
}

void check_d1(double d1) {
    if (!(d1 > 0.0)) throw std::invalid_argument("nielsen: d1 must be positive");
}

}  // namespace

double nielsen_lambda(const Panel& panel, std::size_t r0, double d1, DetCase det_case) {
    check_d1(d1);
    const auto p = static_cast<std::size_t>(panel.cols());
    if (r0 >= p) throw std::invalid_argument("nielsen_lambda: r0 must be in 0..p-1");
    const auto ev = pencil_eigenvalues(panel.values(), d1, det_case, panel.cols());
    const double tf = std::pow(static_cast<double>(panel.rows()), 2.0 * d1);
    double sum = 0.0;
    for (std::size_t j = 0; j < p - r0; ++j) sum += ev[j];
    return tf * sum;
}

NielsenResult nielsen_stats(const Panel& panel, double d1, DetCase det_case) {
    check_d1(d1);
    NielsenResult res;
    res.d1 = d1;
    res.det_case = det_case;
    res.T = static_cast<std::size_t>(panel.rows());
    res.p = static_cast<std::size_t>(panel.cols());
    res.eigenvalues = pencil_eigenvalues(panel.values(), d1, det_case, panel.cols());
    const double tf = std::pow(static_cast<double>(res.T), 2.0 * d1);
    res.lambda_by_r0.resize(res.p);
    for (std::size_t r0 = 0; r0 < res.p; ++r0) {
        double sum = 0.0;
        for (std::size_t j = 0; j < res.p - r0; ++j) sum += res.eigenvalues[j];
        res.lambda_by_r0[r0] = tf * sum;
    }
    return res;
}

std::vector<double> lambda_leading_dims(const Eigen::MatrixXd& values, double d1,
                                        DetCase det_case, std::size_t max_dim) {
    check_d1(d1);
    if (max_dim == 0 || max_dim > static_cast<std::size_t>(values.cols()))
        throw std::invalid_argument("lambda_leading_dims: bad max_dim");
    // Detrending and cumulation are column-wise, so do them once at full
    // width; the leading q-dimensional statistics are the leading blocks.
    const Eigen::MatrixXd z =
        detrend_columns(values.leftCols(static_cast<Eigen::Index>(max_dim)), det_case);
    Eigen::MatrixXd zt = z;
    const auto psi = frac_coeffs(-d1, static_cast<std::size_t>(z.rows()));
    frac_filter_columns_inplace(zt, psi.coeffs);
    const Eigen::MatrixXd A = z.transpose() * z;
    const Eigen::MatrixXd B = zt.transpose() * zt;
    const double tf = std::pow(static_cast<double>(values.rows()), 2.0 * d1);

    std::vector<double> out(max_dim);
    for (std::size_t q = 1; q <= max_dim; ++q) {
        const auto qi = static_cast<Eigen::Index>(q);
        const auto ev = generalized_eigenvalues(A.topLeftCorner(qi, qi),
                                                B.topLeftCorner(qi, qi));
        double sum = 0.0;
        for (double e : ev) sum += e;
        out[q - 1] = tf * sum;
    }
    return out;
}

NielsenResult estimate_rank_nielsen(const Panel& panel, double d1, DetCase det_case,
                                    const CriticalValueTable& cv_table, double xi) {
    NielsenResult res = nielsen_stats(panel, d1, det_case);
    res.xi = xi;
    res.r_hat = res.p - 1;
    res.ceiling = true;
    for (std::size_t r0 = 0; r0 < res.p; ++r0) {
        const double cv = cv_table.lookup(det_case, xi, res.p - r0);
        const bool rej = res.lambda_by_r0[r0] > cv;
        res.critical_values.push_back(cv);
        res.reject.push_back(rej);
        if (!rej) {
            res.r_hat = r0;
            res.ceiling = false;
            break;
        }
    }
    return res;
}

}  // namespace fracrank
