#include "gmocso/dominance.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmocso {

DominanceRelation dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: objective vectors differ in length");
    if (!a.allFinite() || !b.allFinite())
        throw std::invalid_argument("dominates: non-finite objective value");

    bool a_better = false;
    bool b_better = false;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] < b[i])
            a_better = true;
        else if (b[i] < a[i])
            b_better = true;
    }
    if (a_better && !b_better) return DominanceRelation::FirstDominates;
    if (b_better && !a_better) return DominanceRelation::SecondDominates;
    if (!a_better && !b_better) return DominanceRelation::Equal;
    return DominanceRelation::Incomparable;
}

bool strictly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return dominates(a, b) == DominanceRelation::FirstDominates;
}

namespace {

// Incremental sweep: a point enters the survivor set unless a survivor
// dominates it, and evicts the survivors it dominates. Equal points
// never evict each other, so duplicates all survive.
template <typename GetObjectives>
std::vector<std::size_t> filter_indices(std::size_t count, GetObjectives&& obj) {
    std::vector<std::size_t> survivors;
    survivors.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const bool rejected =
            std::any_of(survivors.begin(), survivors.end(), [&](std::size_t s) {
                return dominates(obj(s), obj(i)) == DominanceRelation::FirstDominates;
            });
        if (rejected) continue;
        std::erase_if(survivors,
                      [&](std::size_t s) { return strictly_dominates(obj(i), obj(s)); });
        survivors.push_back(i);
    }
    return survivors;
}

}  // namespace

std::vector<std::size_t> non_dominated_indices(
    const std::vector<ObjectiveVector>& points) {
    return filter_indices(points.size(),
                          [&](std::size_t i) -> const ObjectiveVector& { return points[i]; });
}

std::vector<ObjectiveVector> non_dominated_filter(
    const std::vector<ObjectiveVector>& points) {
    std::vector<ObjectiveVector> out;
    for (std::size_t i : non_dominated_indices(points)) out.push_back(points[i]);
    return out;
}

std::vector<Solution> non_dominated_filter(const std::vector<Solution>& points) {
    const auto idx = filter_indices(
        points.size(),
        [&](std::size_t i) -> const ObjectiveVector& { return points[i].objectives; });
    std::vector<Solution> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(points[i]);
    return out;
}

}  // namespace gmocso
