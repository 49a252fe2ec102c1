#ifndef GMOCSO_GRID_HPP
#define GMOCSO_GRID_HPP

#include <map>
#include <vector>

#include "gmocso/types.hpp"

namespace gmocso {

struct Archive;

/// Coordinates of one hyper-box, one bin index per objective.
using BoxIndex = std::vector<int>;

/// Equal-width partition of the archive's objective-space bounding box.
/// Bounds are the exact per-objective min/max of the members; occupancy
/// holds a positive count for every non-empty box.
struct Grid {
    ObjectiveVector lower;
    ObjectiveVector upper;
    int bins_per_dim = 0;
    std::map<BoxIndex, int> occupancy;
};

/// Builds the grid over a non-empty archive. Throws std::invalid_argument
/// on an empty archive ("grid undefined on empty archive").
Grid grid_build(const Archive& archive, int n_grid);

/// Box containing p. Per dimension: floor((p - lower) / width) clamped to
/// [0, bins-1]; a degenerate dimension (lower == upper) maps to bin 0 and
/// points exactly on the upper bound map to the last bin.
BoxIndex grid_locate(const Grid& grid, const ObjectiveVector& p);

}  // namespace gmocso

#endif  // GMOCSO_GRID_HPP
