#ifndef GMOCSO_STATS_HPP
#define GMOCSO_STATS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gmocso/types.hpp"

namespace gmocso::stats {

/// Per-run values of one metric for one (algorithm, problem) pair.
struct MetricSample {
    std::string algorithm;
    std::string problem;
    std::string metric;  // one of rgd, spacing, spread, elapsed
    std::vector<Scalar> values;
};

struct SummaryStats {
    Scalar mean = 0;
    Scalar std_dev = 0;  // sample standard deviation (n-1); 0 when n == 1
};

/// Mean and sample standard deviation; throws on an empty sample.
SummaryStats summarize(const std::vector<Scalar>& values);

/// Row key: (problem, metric).
using RowKey = std::pair<std::string, std::string>;

/// Rank aggregation across algorithms: per-row ranks (1 = best = lowest
/// mean, ties averaged), per-metric subtotals and rankings, overall
/// totals. The Friedman chi-square statistic over all rows is reported
/// alongside for completeness.
struct RankTable {
    std::vector<std::string> algorithms;  // column order
    struct Row {
        std::string problem;
        std::string metric;
        std::vector<Scalar> ranks;  // aligned with `algorithms`
    };
    std::vector<Row> rows;
    std::map<std::string, std::vector<Scalar>> metric_subtotals;
    std::map<std::string, std::vector<Scalar>> metric_rankings;  // subtotal / rows
    std::vector<Scalar> totals;
    std::vector<Scalar> overall_ranking;  // total / number of rows
    Scalar friedman_chi_square = 0;
    Scalar friedman_p_value = 1;
};

/// Builds the rank table from per-row means. Lower mean is better for
/// every metric. Every row must cover the same algorithm set; throws
/// std::invalid_argument otherwise.
RankTable friedman_ranks(
    const std::map<RowKey, std::map<std::string, Scalar>>& averages);

/// Two-sided Wilcoxon rank-sum (Mann-Whitney) p-value. Uses the exact
/// rank-sum distribution when the pooled sample is small (<= 16) and
/// tie-free, otherwise a normal approximation with tie-corrected variance
/// and continuity correction. Two completely identical samples give 1.0.
Scalar wilcoxon_rank_sum(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

/// Exact branch: enumerates the tie-free rank-sum null distribution by
/// dynamic programming. Requires tie-free data.
Scalar wilcoxon_rank_sum_exact(const std::vector<Scalar>& a,
                               const std::vector<Scalar>& b);

/// Normal-approximation branch with tie correction and continuity
/// correction.
Scalar wilcoxon_rank_sum_normal(const std::vector<Scalar>& a,
                                const std::vector<Scalar>& b);

struct SignificanceEntry {
    std::string problem;
    std::string metric;
    std::string algorithm;  // compared against the baseline
    Scalar p_value = 1;
    bool significant = false;
};

struct SignificanceReport {
    std::string baseline;
    Scalar alpha = 0.05;
    std::vector<SignificanceEntry> entries;
    std::vector<std::string> warnings;  // pairs skipped for missing data
};

/// Baseline-vs-others Wilcoxon p-values for every (problem, metric) the
/// baseline covers; significant iff p < alpha (strict).
SignificanceReport significance_report(const std::vector<MetricSample>& samples,
                                       const std::string& baseline, Scalar alpha);

/// Regularized upper incomplete gamma Q(a, x); used for the chi-square
/// survival function.
Scalar gamma_q(Scalar a, Scalar x);

}  // namespace gmocso::stats

#endif  // GMOCSO_STATS_HPP
