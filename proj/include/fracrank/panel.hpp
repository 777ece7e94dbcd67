#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

namespace fracrank {

/// A T x p block of observations: rows are time, columns are series.
/// Entries are validated finite on construction; labels are unique and
/// non-empty; the optional time index, when present, has one entry per row.
class Panel {
  public:
    Panel(Eigen::MatrixXd values, std::vector<std::string> labels,
          std::vector<std::string> time_index = {});

    Eigen::Index rows() const { return values_.rows(); }
    Eigen::Index cols() const { return values_.cols(); }

    const Eigen::MatrixXd& values() const { return values_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::string>& time_index() const { return time_index_; }
    bool has_time_index() const { return !time_index_.empty(); }

    /// Column by position.
    Eigen::VectorXd col(Eigen::Index i) const { return values_.col(i); }

    /// Position of a label; throws std::invalid_argument if absent.
    Eigen::Index index_of(const std::string& label) const;

    /// Sub-panel with the given columns, in the given order.
    Panel select(const std::vector<Eigen::Index>& columns) const;

  private:
    Eigen::MatrixXd values_;
    std::vector<std::string> labels_;
    std::vector<std::string> time_index_;
};

/// Natural logs of all entries; rejects non-positive entries.
Panel log_panel(const Panel& panel);

/// First differences of natural logs; output has T-1 rows, labels preserved.
/// Rejects non-positive entries.
Panel log_and_diff(const Panel& panel);

/// Row-wise cross-sectional sample standard deviation (divisor p-1).
/// The input is expected to hold logs already; no implicit transform.
std::vector<double> sigma_dispersion(const Panel& panel);

}  // namespace fracrank
