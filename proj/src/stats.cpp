#include "gmocso/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gmocso::stats {

SummaryStats summarize(const std::vector<Scalar>& values) {
    if (values.empty()) throw std::invalid_argument("summarize: empty sample");
    const Scalar n = static_cast<Scalar>(values.size());
    const Scalar mean = std::accumulate(values.begin(), values.end(), Scalar{0}) / n;
    if (values.size() == 1) return {mean, 0};
    Scalar ss = 0;
    for (Scalar v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (n - 1))};
}

namespace {

// midranks of `values`: ties share the mean of their rank positions
std::vector<Scalar> midranks(const std::vector<Scalar>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<Scalar> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const Scalar shared = (static_cast<Scalar>(i + 1) + static_cast<Scalar>(j + 1)) / 2;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

bool has_ties(const std::vector<Scalar>& pooled) {
    std::set<Scalar> unique(pooled.begin(), pooled.end());
    return unique.size() != pooled.size();
}

Scalar normal_two_sided_p(Scalar z) {
    return std::erfc(std::abs(z) / std::sqrt(Scalar{2}));
}

}  // namespace

RankTable friedman_ranks(
    const std::map<RowKey, std::map<std::string, Scalar>>& averages) {
    if (averages.empty()) throw std::invalid_argument("friedman_ranks: no rows");

    RankTable table;
    for (const auto& [name, mean] : averages.begin()->second)
        table.algorithms.push_back(name);
    const std::size_t k = table.algorithms.size();
    if (k < 2) throw std::invalid_argument("friedman_ranks: need at least 2 algorithms");

    table.totals.assign(k, 0);
    std::map<std::string, std::size_t> rows_per_metric;

    for (const auto& [key, means] : averages) {
        if (means.size() != k)
            throw std::invalid_argument("friedman_ranks: inconsistent algorithm sets");
        std::vector<Scalar> row_means(k);
        for (std::size_t j = 0; j < k; ++j) {
            const auto it = means.find(table.algorithms[j]);
            if (it == means.end())
                throw std::invalid_argument("friedman_ranks: inconsistent algorithm sets");
            row_means[j] = it->second;
        }
        RankTable::Row row{key.first, key.second, midranks(row_means)};

        auto& subtotal = table.metric_subtotals[key.second];
        if (subtotal.empty()) subtotal.assign(k, 0);
        for (std::size_t j = 0; j < k; ++j) {
            subtotal[j] += row.ranks[j];
            table.totals[j] += row.ranks[j];
        }
        ++rows_per_metric[key.second];
        table.rows.push_back(std::move(row));
    }

    for (const auto& [metric, subtotal] : table.metric_subtotals) {
        std::vector<Scalar> ranking(k);
        for (std::size_t j = 0; j < k; ++j)
            ranking[j] = subtotal[j] / static_cast<Scalar>(rows_per_metric[metric]);
        table.metric_rankings[metric] = std::move(ranking);
    }

    const Scalar n_rows = static_cast<Scalar>(table.rows.size());
    table.overall_ranking.resize(k);
    for (std::size_t j = 0; j < k; ++j)
        table.overall_ranking[j] = table.totals[j] / n_rows;

    // Friedman statistic over all rows as blocks
    const Scalar kf = static_cast<Scalar>(k);
    Scalar chi = 0;
    for (std::size_t j = 0; j < k; ++j) {
        const Scalar centered = table.overall_ranking[j] - (kf + 1) / 2;
        chi += centered * centered;
    }
    chi *= 12 * n_rows / (kf * (kf + 1));
    table.friedman_chi_square = chi;
    table.friedman_p_value = gamma_q((kf - 1) / 2, chi / 2);
    return table;
}

Scalar wilcoxon_rank_sum_exact(const std::vector<Scalar>& a,
                               const std::vector<Scalar>& b) {
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = n1 + n2;

    std::vector<Scalar> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    if (has_ties(pooled))
        throw std::invalid_argument("wilcoxon_rank_sum_exact: data contain ties");

    const auto ranks = midranks(pooled);
    long long rank_sum = 0;
    for (std::size_t i = 0; i < n1; ++i)
        rank_sum += static_cast<long long>(ranks[i]);

    // counts[s] = number of n1-subsets of {1..n} with rank sum s
    const std::size_t max_sum = n * (n + 1) / 2;
    std::vector<std::vector<double>> counts(
        n1 + 1, std::vector<double>(max_sum + 1, 0.0));
    counts[0][0] = 1.0;
    for (std::size_t value = 1; value <= n; ++value)
        for (std::size_t chosen = std::min(value, n1); chosen >= 1; --chosen)
            for (std::size_t s = max_sum; s >= value; --s)
                counts[chosen][s] += counts[chosen - 1][s - value];

    double below = 0, above = 0, total = 0;
    for (std::size_t s = 0; s <= max_sum; ++s) {
        const double c = counts[n1][s];
        total += c;
        if (s <= static_cast<std::size_t>(rank_sum)) below += c;
        if (s >= static_cast<std::size_t>(rank_sum)) above += c;
    }
    const double tail = std::min(below, above);
    return std::min(1.0, 2.0 * tail / total);
}

Scalar wilcoxon_rank_sum_normal(const std::vector<Scalar>& a,
                                const std::vector<Scalar>& b) {
    const Scalar n1 = static_cast<Scalar>(a.size());
    const Scalar n2 = static_cast<Scalar>(b.size());
    const Scalar n = n1 + n2;

    std::vector<Scalar> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto ranks = midranks(pooled);

    Scalar rank_sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) rank_sum += ranks[i];
    const Scalar u1 = rank_sum - n1 * (n1 + 1) / 2;
    const Scalar mu = n1 * n2 / 2;

    // tie correction: sum of t^3 - t over tie groups
    std::vector<Scalar> sorted(pooled);
    std::sort(sorted.begin(), sorted.end());
    Scalar tie_term = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const Scalar t = static_cast<Scalar>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }

    const Scalar variance = n1 * n2 / 12 * ((n + 1) - tie_term / (n * (n - 1)));
    if (variance <= Scalar{0}) return 1.0;  // all values identical
    const Scalar shift = std::max(Scalar{0}, std::abs(u1 - mu) - Scalar{0.5});
    return std::min(Scalar{1}, normal_two_sided_p(shift / std::sqrt(variance)));
}

Scalar wilcoxon_rank_sum(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("wilcoxon_rank_sum: empty sample");

    std::vector<Scalar> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    if (std::all_of(pooled.begin(), pooled.end(),
                    [&](Scalar v) { return v == pooled.front(); }))
        return 1.0;

    if (a.size() + b.size() <= 16 && !has_ties(pooled))
        return wilcoxon_rank_sum_exact(a, b);
    return wilcoxon_rank_sum_normal(a, b);
}

SignificanceReport significance_report(const std::vector<MetricSample>& samples,
                                       const std::string& baseline, Scalar alpha) {
    SignificanceReport report;
    report.baseline = baseline;
    report.alpha = alpha;

    bool baseline_present = false;
    for (const MetricSample& s : samples)
        if (s.algorithm == baseline) baseline_present = true;
    if (!baseline_present)
        throw std::invalid_argument("significance_report: baseline '" + baseline +
                                    "' not present in samples");

    const auto find_sample = [&](const std::string& algorithm, const std::string& problem,
                                 const std::string& metric) -> const MetricSample* {
        for (const MetricSample& s : samples)
            if (s.algorithm == algorithm && s.problem == problem && s.metric == metric)
                return &s;
        return nullptr;
    };

    std::set<std::string> others;
    std::set<RowKey> keys;
    for (const MetricSample& s : samples) {
        if (s.algorithm != baseline) others.insert(s.algorithm);
        keys.insert({s.problem, s.metric});
    }

    for (const auto& [problem, metric] : keys) {
        const MetricSample* base = find_sample(baseline, problem, metric);
        for (const std::string& other : others) {
            const MetricSample* sample = find_sample(other, problem, metric);
            if (base == nullptr || sample == nullptr) {
                report.warnings.push_back("missing pair for " + problem + "/" + metric +
                                          ": " + baseline + " vs " + other);
                continue;
            }
            const Scalar p = wilcoxon_rank_sum(base->values, sample->values);
            report.entries.push_back({problem, metric, other, p, p < alpha});
        }
    }
    return report;
}

Scalar gamma_q(Scalar a, Scalar x) {
    if (x < 0 || a <= 0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0) return 1;
    if (x < a + 1) {
        // series for P(a,x), return 1 - P
        Scalar ap = a;
        Scalar sum = 1 / a;
        Scalar term = sum;
        for (int it = 0; it < 500; ++it) {
            ap += 1;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-15) break;
        }
        return 1 - sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    // continued fraction for Q(a,x) (modified Lentz)
    const Scalar tiny = 1e-300;
    Scalar b = x + 1 - a;
    Scalar c = 1 / tiny;
    Scalar d = 1 / b;
    Scalar h = d;
    for (int it = 1; it <= 500; ++it) {
        const Scalar an = -static_cast<Scalar>(it) * (static_cast<Scalar>(it) - a);
        b += 2;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1 / d;
        const Scalar delta = d * c;
        h *= delta;
        if (std::abs(delta - 1) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace gmocso::stats
