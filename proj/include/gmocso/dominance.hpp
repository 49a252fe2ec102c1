#ifndef GMOCSO_DOMINANCE_HPP
#define GMOCSO_DOMINANCE_HPP

#include <cstddef>
#include <vector>

#include "gmocso/types.hpp"

namespace gmocso {

/// Pareto-compares two objective vectors (minimization in every
/// component). Throws std::invalid_argument on length mismatch or
/// non-finite entries.
DominanceRelation dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// True iff a dominates b.
bool strictly_dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Indices of the points not dominated by any other point, in input
/// order. Equal duplicates are all kept.
std::vector<std::size_t> non_dominated_indices(
    const std::vector<ObjectiveVector>& points);

/// Non-dominated subset of a set of objective vectors, input order kept.
std::vector<ObjectiveVector> non_dominated_filter(
    const std::vector<ObjectiveVector>& points);

/// Non-dominated subset of a population, compared by their objectives.
std::vector<Solution> non_dominated_filter(const std::vector<Solution>& points);

}  // namespace gmocso

#endif  // GMOCSO_DOMINANCE_HPP
