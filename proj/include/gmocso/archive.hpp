#ifndef GMOCSO_ARCHIVE_HPP
#define GMOCSO_ARCHIVE_HPP

#include <cstddef>
#include <vector>

#include "gmocso/grid.hpp"
#include "gmocso/rng.hpp"
#include "gmocso/types.hpp"

namespace gmocso {

enum class InsertOutcome { Accepted, Rejected };

/// External population: a bounded set of mutually non-dominated
/// solutions. Inserts keep the non-domination invariant; capacity is
/// enforced separately by archive_truncate.
struct Archive {
    std::vector<Solution> members;
    std::size_t capacity = 0;
};

/// Inserts a candidate unless a member dominates or equals it; on accept,
/// members the candidate dominates are removed first. Capacity is not
/// checked here (see archive_truncate).
InsertOutcome archive_insert(Archive& archive, const Solution& candidate);

/// Removes members one at a time until size <= capacity. Each removal
/// rebuilds the grid, picks a maximally-occupied box (ties uniform at
/// random) and evicts one of its members uniformly at random.
void archive_truncate(Archive& archive, int n_grid, Rng& rng);

/// Copy of a uniformly random member of a least-occupied box; box ties
/// and the member within the box are both resolved uniformly at random.
/// The grid must have been built from this archive.
Solution select_leader(const Archive& archive, const Grid& grid, Rng& rng);

}  // namespace gmocso

#endif  // GMOCSO_ARCHIVE_HPP
