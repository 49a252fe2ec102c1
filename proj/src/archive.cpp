#include "gmocso/archive.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmocso/dominance.hpp"

namespace gmocso {

InsertOutcome archive_insert(Archive& archive, const Solution& candidate) {
    for (const Solution& member : archive.members) {
        const DominanceRelation rel = dominates(member.objectives, candidate.objectives);
        if (rel == DominanceRelation::FirstDominates || rel == DominanceRelation::Equal)
            return InsertOutcome::Rejected;
    }
    std::erase_if(archive.members, [&](const Solution& member) {
        return strictly_dominates(candidate.objectives, member.objectives);
    });
    archive.members.push_back(candidate);
    return InsertOutcome::Accepted;
}

namespace {

std::vector<std::size_t> members_in_box(const Archive& archive, const Grid& grid,
                                        const BoxIndex& box) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < archive.members.size(); ++i)
        if (grid_locate(grid, archive.members[i].objectives) == box) indices.push_back(i);
    return indices;
}

// Boxes whose occupancy is extremal; `pred` selects min or max.
template <typename Compare>
std::vector<BoxIndex> extremal_boxes(const Grid& grid, Compare better) {
    std::vector<BoxIndex> boxes;
    int best = 0;
    for (const auto& [box, count] : grid.occupancy) {
        if (boxes.empty() || better(count, best)) {
            best = count;
            boxes.clear();
        }
        if (count == best) boxes.push_back(box);
    }
    return boxes;
}

}  // namespace

void archive_truncate(Archive& archive, int n_grid, Rng& rng) {
    while (archive.members.size() > archive.capacity) {
        const Grid grid = grid_build(archive, n_grid);
        const auto crowded =
            extremal_boxes(grid, [](int count, int best) { return count > best; });
        const BoxIndex& box = crowded[rng.uniform_index(crowded.size())];
        const auto indices = members_in_box(archive, grid, box);
        const std::size_t victim = indices[rng.uniform_index(indices.size())];
        archive.members.erase(archive.members.begin() +
                              static_cast<std::ptrdiff_t>(victim));
    }
}

Solution select_leader(const Archive& archive, const Grid& grid, Rng& rng) {
    if (archive.members.empty())
        throw std::invalid_argument("select_leader: empty archive");
    const auto sparse =
        extremal_boxes(grid, [](int count, int best) { return count < best; });
    const BoxIndex& box = sparse[rng.uniform_index(sparse.size())];
    const auto indices = members_in_box(archive, grid, box);
    return archive.members[indices[rng.uniform_index(indices.size())]];
}

}  // namespace gmocso
