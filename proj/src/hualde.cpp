#include "fracrank/hualde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracrank/chisq.hpp"
#include "fracrank/errors.hpp"
#include "fracrank/whittle.hpp"
#include "fracrank/xstar.hpp"

namespace fracrank {

RankTrace estimate_rank_hualde(const Panel& panel, std::size_t m, double alpha,
                               std::optional<double> threshold) {
    const auto p = static_cast<std::size_t>(panel.cols());
    if (p < 2) throw std::invalid_argument("estimate_rank_hualde: need at least 2 columns");

    RankTrace trace;
    trace.alpha = alpha;
    trace.critical_value = threshold ? *threshold : chi2_1_critical_value(alpha);
    trace.m = m;
    trace.labels = panel.labels();

    // Memory parameters are estimated once, then reused for every tuple.
    const auto estimates = panel_memory(panel, m, MemoryMethod::LocalWhittle);
    trace.d_hats.reserve(p);
    for (const auto& e : estimates) trace.d_hats.push_back(e.d_hat);

    // First CT: largest estimated order, lowest index on ties.
    std::size_t first_ct = 0;
    for (std::size_t i = 1; i < p; ++i)
        if (trace.d_hats[i] > trace.d_hats[first_ct]) first_ct = i;

    std::vector<std::size_t> cts{first_ct};
    std::vector<std::size_t> remaining;
    for (std::size_t i = 0; i < p; ++i)
        if (i != first_ct) remaining.push_back(i);

    trace.r_hat = 0;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    for (std::size_t k = 1; k <= p - 1; ++k) {
        StepRecord step;
        step.step_index = k;
        for (std::size_t c : cts) step.ct_labels.push_back(panel.labels()[c]);

        bool all_reject = true;
        double min_stat = std::numeric_limits<double>::infinity();
        std::size_t min_col = remaining.front();

        for (std::size_t cand : remaining) {
            std::vector<Eigen::Index> cols;
            std::vector<double> d_sub;
            for (std::size_t c : cts) {
                cols.push_back(static_cast<Eigen::Index>(c));
                d_sub.push_back(trace.d_hats[c]);
            }
            cols.push_back(static_cast<Eigen::Index>(cand));
            d_sub.push_back(trace.d_hats[cand]);

            Eigen::MatrixXd sub(panel.rows(), static_cast<Eigen::Index>(cols.size()));
            for (std::size_t i = 0; i < cols.size(); ++i)
                sub.col(static_cast<Eigen::Index>(i)) = panel.values().col(cols[i]);

            double stat = nan;
            try {
                stat = xstar_given_memory(sub, m, d_sub).x_star;
            } catch (const numerical_error& err) {
                step.failures.push_back(panel.labels()[cand] + ": " + err.what());
            }
            step.candidate_stats.emplace_back(panel.labels()[cand], stat);

            if (std::isnan(stat)) {
                all_reject = false;  // a failed tuple cannot support rejection
            } else {
                if (!(stat > trace.critical_value)) all_reject = false;
                if (stat < min_stat) {
                    min_stat = stat;
                    min_col = cand;
                }
            }
        }

        step.rejected = all_reject;
        if (std::isfinite(min_stat))
            step.min_stat_label = panel.labels()[min_col];
        trace.steps.push_back(std::move(step));

        if (all_reject) {
            trace.r_hat = p - k;
            return trace;
        }
        // Next CT: smallest statistic (lowest index on ties via strict <);
        // if every candidate failed, fall back to the lowest remaining index.
        cts.push_back(min_col);
        remaining.erase(std::find(remaining.begin(), remaining.end(), min_col));
    }
    trace.r_hat = 0;
    return trace;
}

}  // namespace fracrank
