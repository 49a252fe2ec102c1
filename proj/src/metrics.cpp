#include "gmocso/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gmocso {

namespace {

void check_finite(const std::vector<ObjectiveVector>& front, const char* what) {
    for (const ObjectiveVector& p : front)
        if (!p.allFinite())
            throw std::invalid_argument(std::string(what) + ": non-finite objective value");
}

void check_pair(const std::vector<ObjectiveVector>& reference,
                const std::vector<ObjectiveVector>& approximate, const char* what) {
    if (reference.empty() || approximate.empty())
        throw std::invalid_argument(std::string(what) + ": empty front");
    if (reference.front().size() != approximate.front().size())
        throw std::invalid_argument(std::string(what) + ": objective dimension mismatch");
    check_finite(reference, what);
    check_finite(approximate, what);
}

Scalar nearest_distance(const ObjectiveVector& p, const std::vector<ObjectiveVector>& set) {
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (const ObjectiveVector& q : set) best = std::min(best, (p - q).norm());
    return best;
}

std::vector<ObjectiveVector> sorted_by_f1(std::vector<ObjectiveVector> front) {
    std::sort(front.begin(), front.end(),
              [](const ObjectiveVector& a, const ObjectiveVector& b) {
                  return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
              });
    return front;
}

}  // namespace

Scalar rgd(const std::vector<ObjectiveVector>& reference,
           const std::vector<ObjectiveVector>& approximate) {
    check_pair(reference, approximate, "rgd");
    Scalar sum = 0;
    for (const ObjectiveVector& p : reference) sum += nearest_distance(p, approximate);
    return sum / static_cast<Scalar>(reference.size());
}

Scalar spacing(const std::vector<ObjectiveVector>& approximate) {
    const std::size_t n = approximate.size();
    if (n < 2) throw std::invalid_argument("spacing undefined on fronts of fewer than 2 points");
    check_finite(approximate, "spacing");

    std::vector<Scalar> nn(n, std::numeric_limits<Scalar>::infinity());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Scalar d = (approximate[i] - approximate[j]).norm();
            nn[i] = std::min(nn[i], d);
            nn[j] = std::min(nn[j], d);
        }

    Scalar mean = 0;
    for (Scalar d : nn) mean += d;
    mean /= static_cast<Scalar>(n);
    Scalar var = 0;
    for (Scalar d : nn) var += (d - mean) * (d - mean);
    return std::sqrt(var / static_cast<Scalar>(n));
}

Scalar spread(const std::vector<ObjectiveVector>& reference,
              const std::vector<ObjectiveVector>& approximate) {
    check_pair(reference, approximate, "spread");
    const auto ref = sorted_by_f1(reference);
    const auto approx = sorted_by_f1(approximate);

    const Scalar d_first = (ref.front() - approx.front()).norm();
    const Scalar d_last = (ref.back() - approx.back()).norm();

    std::vector<Scalar> dist(approx.size());
    for (std::size_t i = 0; i < approx.size(); ++i)
        dist[i] = nearest_distance(approx[i], ref);
    Scalar mean = 0;
    for (Scalar d : dist) mean += d;
    mean /= static_cast<Scalar>(dist.size());

    Scalar deviation = 0;
    for (Scalar d : dist) deviation += std::abs(d - mean);

    const Scalar denominator =
        d_first + d_last + static_cast<Scalar>(approx.size() - 1) * mean;
    if (denominator == Scalar{0}) return 0;
    return (d_first + d_last + deviation) / denominator;
}

}  // namespace gmocso
