#include "gmocso/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "gmocso/archive.hpp"

namespace gmocso {

Grid grid_build(const Archive& archive, int n_grid) {
    if (archive.members.empty())
        throw std::invalid_argument("grid undefined on empty archive");
    if (n_grid < 1)
        throw std::invalid_argument("grid_build: n_grid must be positive");

    Grid grid;
    grid.bins_per_dim = n_grid;
    grid.lower = archive.members.front().objectives;
    grid.upper = grid.lower;
    for (const Solution& s : archive.members) {
        grid.lower = grid.lower.cwiseMin(s.objectives);
        grid.upper = grid.upper.cwiseMax(s.objectives);
    }
    for (const Solution& s : archive.members)
        ++grid.occupancy[grid_locate(grid, s.objectives)];
    return grid;
}

BoxIndex grid_locate(const Grid& grid, const ObjectiveVector& p) {
    const Eigen::Index dims = grid.lower.size();
    BoxIndex box(static_cast<std::size_t>(dims));
    for (Eigen::Index j = 0; j < dims; ++j) {
        const Scalar range = grid.upper[j] - grid.lower[j];
        if (range <= Scalar{0}) {
            box[static_cast<std::size_t>(j)] = 0;
            continue;
        }
        const Scalar width = range / grid.bins_per_dim;
        int idx = static_cast<int>(std::floor((p[j] - grid.lower[j]) / width));
        idx = std::max(0, std::min(grid.bins_per_dim - 1, idx));
        box[static_cast<std::size_t>(j)] = idx;
    }
    return box;
}

}  // namespace gmocso
