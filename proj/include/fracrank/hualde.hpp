#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracrank/panel.hpp"

namespace fracrank {

/// One step of the sequential common-trend search. candidate_stats holds the
/// X* value for {CTs} + {candidate}, in original column order; a NaN entry
/// means the statistic could not be computed (recorded in failures and
/// treated as "not rejected").
struct StepRecord {
    std::size_t step_index = 0;                                // k = 1..p-1
    std::vector<std::string> ct_labels;                        // CTs fixed so far
    std::vector<std::pair<std::string, double>> candidate_stats;
    std::vector<std::string> failures;
    std::string min_stat_label;
    bool rejected = false;  // true iff every candidate statistic exceeds the cv
};

/// Full audit trail of the sequential procedure.
struct RankTrace {
    std::vector<StepRecord> steps;
    std::size_t r_hat = 0;
    double alpha = 0.05;
    double critical_value = 0.0;
    std::size_t m = 0;
    std::vector<double> d_hats;        // step-1 estimates, original column order
    std::vector<std::string> labels;
};

/// Sequential rank estimation: step 1 designates the column with the largest
/// local Whittle estimate as the first common trend and tests it pairwise
/// against every other column; step k tests the k fixed CTs plus each
/// remaining column. The first step whose statistics all exceed the
/// chi-squared_1 critical value stops the procedure with r = p - k; if no
/// step rejects, r = 0. Ties (equal maximal d, equal minimal X*) resolve to
/// the lowest original column index. A custom threshold may replace the
/// chi-squared_1 critical value.
RankTrace estimate_rank_hualde(const Panel& panel, std::size_t m, double alpha = 0.05,
                               std::optional<double> threshold = std::nullopt);

}  // namespace fracrank
