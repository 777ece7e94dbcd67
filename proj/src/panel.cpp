#include "fracrank/panel.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace fracrank {

Panel::Panel(Eigen::MatrixXd values, std::vector<std::string> labels,
             std::vector<std::string> time_index)
    : values_(std::move(values)),
      labels_(std::move(labels)),
      time_index_(std::move(time_index)) {
    if (values_.rows() < 2) throw std::invalid_argument("Panel: need at least 2 rows");
    if (values_.cols() < 1) throw std::invalid_argument("Panel: need at least 1 column");
    if (!values_.allFinite())
        throw std::invalid_argument("Panel: missing or non-finite entries are rejected");
    if (labels_.size() != static_cast<std::size_t>(values_.cols()))
        throw std::invalid_argument("Panel: one label per column required");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw std::invalid_argument("Panel: empty column label");
        if (!seen.insert(l).second)
            throw std::invalid_argument("Panel: duplicate column label '" + l + "'");
    }
    if (!time_index_.empty() &&
        time_index_.size() != static_cast<std::size_t>(values_.rows()))
        throw std::invalid_argument("Panel: time index length must equal row count");
}

Eigen::Index Panel::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<Eigen::Index>(i);
    throw std::invalid_argument("Panel: no column labelled '" + label + "'");
}

Panel Panel::select(const std::vector<Eigen::Index>& columns) const {
    Eigen::MatrixXd v(values_.rows(), static_cast<Eigen::Index>(columns.size()));
    std::vector<std::string> l;
    l.reserve(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        const Eigen::Index c = columns[i];
        if (c < 0 || c >= values_.cols())
            throw std::invalid_argument("Panel::select: column index out of range");
        v.col(static_cast<Eigen::Index>(i)) = values_.col(c);
        l.push_back(labels_[static_cast<std::size_t>(c)]);
    }
    return Panel(std::move(v), std::move(l), time_index_);
}

Panel log_panel(const Panel& panel) {
    const auto& x = panel.values();
    if ((x.array() <= 0.0).any())
        throw std::invalid_argument("log_panel: non-positive entry, cannot take logs");
    return Panel(x.array().log(), panel.labels(), panel.time_index());
}

Panel log_and_diff(const Panel& panel) {
    const auto& x = panel.values();
    if ((x.array() <= 0.0).any())
        throw std::invalid_argument("log_and_diff: non-positive entry, cannot take logs");
    Eigen::MatrixXd logs = x.array().log();
    Eigen::MatrixXd d = logs.bottomRows(logs.rows() - 1) - logs.topRows(logs.rows() - 1);
    std::vector<std::string> ti = panel.time_index();
    if (!ti.empty()) ti.erase(ti.begin());
    return Panel(std::move(d), panel.labels(), std::move(ti));
}

std::vector<double> sigma_dispersion(const Panel& panel) {
    const auto& x = panel.values();
    const Eigen::Index p = x.cols();
    if (p < 2) throw std::invalid_argument("sigma_dispersion: need at least 2 columns");
    std::vector<double> out(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index t = 0; t < x.rows(); ++t) {
        const double mean = x.row(t).mean();
        const double ss = (x.row(t).array() - mean).square().sum();
        out[static_cast<std::size_t>(t)] = std::sqrt(ss / static_cast<double>(p - 1));
    }
    return out;
}

}  // namespace fracrank
