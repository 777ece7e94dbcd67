#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fracrank/nielsen.hpp"

namespace fracrank {

/// Simulated finite-sample critical values CV_{xi, p-r} of the variance-ratio
/// statistic under the d = 1 null (independent Gaussian random walks), one
/// regime (T, d1) per table.
class CriticalValueTable {
  public:
    struct Cell {
        DetCase det_case = DetCase::None;
        double xi = 0.0;       // upper-tail level, e.g. 0.05
        std::size_t p_r = 0;   // number of common trends p - r
        double cv = 0.0;
    };

    double d1 = 0.1;
    std::size_t T = 0;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    std::vector<Cell> cells;

    /// Exact stored value; throws missing_critical_value when absent.
    double lookup(DetCase det_case, double xi, std::size_t p_r) const;
    bool has(DetCase det_case, double xi, std::size_t p_r) const;

    /// Human-readable descriptions of any violated monotonicity ordering
    /// (in xi, in p-r, and across deterministic cases). Empty means clean.
    std::vector<std::string> monotonicity_violations() const;
};

struct CvSimConfig {
    std::size_t T = 0;
    std::size_t max_dim = 0;  // largest p - r simulated
    double d1 = 0.1;
    std::vector<DetCase> cases{DetCase::None, DetCase::Const, DetCase::Trend};
    std::vector<double> levels{0.10, 0.05, 0.01};  // xi values
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

/// Simulates the table: replication r draws max_dim independent standard
/// Gaussian random walks from stream (seed, r), applies deterministic removal
/// per case, and evaluates Lambda_{q,0}(d1) for every q <= max_dim through
/// the same code path as the test itself. Results are bit-identical for any
/// worker count. Quantiles are type-7 (linear interpolation between order
/// statistics).
CriticalValueTable simulate_cv_table(const CvSimConfig& config);

/// Delimited text round-trip: header `case,T,d1,xi,p_r,cv,reps,seed`, one row
/// per cell, shortest exact decimal representation (bit-exact round trip).
void write_cv_table(const CriticalValueTable& table, std::ostream& out);
void write_cv_table(const CriticalValueTable& table, const std::string& path);
CriticalValueTable read_cv_table(std::istream& in);
CriticalValueTable read_cv_table(const std::string& path);

/// Type-7 empirical quantile of (a copy of) the sample, prob in [0, 1].
double quantile_type7(std::vector<double> sample, double prob);

}  // namespace fracrank
