#ifndef GMOCSO_METRICS_HPP
#define GMOCSO_METRICS_HPP

#include <vector>

#include "gmocso/types.hpp"

namespace gmocso {

/// Reversed generational distance: mean Euclidean distance from each
/// reference-front point to its nearest approximate-front point. Zero iff
/// every reference point coincides with an approximate point. Note this
/// is the formula more commonly known as IGD.
Scalar rgd(const std::vector<ObjectiveVector>& reference,
           const std::vector<ObjectiveVector>& approximate);

/// Spacing: population standard deviation of each front member's
/// nearest-neighbour distance (self excluded). Needs at least two points.
Scalar spacing(const std::vector<ObjectiveVector>& approximate);

/// Spread (Delta): combines the extreme-point gaps between the two fronts
/// (after sorting both by f1) with the deviation of each approximate
/// point's distance to its nearest reference point. A perfectly
/// coincident front yields 0 (degenerate-denominator convention).
Scalar spread(const std::vector<ObjectiveVector>& reference,
              const std::vector<ObjectiveVector>& approximate);

}  // namespace gmocso

#endif  // GMOCSO_METRICS_HPP
