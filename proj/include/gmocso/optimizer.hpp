#ifndef GMOCSO_OPTIMIZER_HPP
#define GMOCSO_OPTIMIZER_HPP

#include <cstdint>
#include <vector>

#include "gmocso/archive.hpp"
#include "gmocso/grid.hpp"
#include "gmocso/problems.hpp"
#include "gmocso/rng.hpp"
#include "gmocso/types.hpp"

namespace gmocso {

/// Tuning knobs of the optimizer. Defaults are the reference settings
/// used throughout the bundled experiments.
struct GmocsoConfig {
    int population_size = 100;
    int max_iterations = 100;
    Scalar c1 = 1.0;               ///< attraction constant of the velocity update
    Scalar inertia_weight = 1.0;   ///< multiplier on the previous velocity
    int smp = 2;                   ///< seeking memory pool: candidates per cat
    int cdc = 1;                   ///< counts of dimension to change per candidate
    Scalar srd = 1.0;              ///< seeking range of the selected dimension
    int n_grid = 10;               ///< bins per objective in the density grid
    int archive_capacity = 100;
    std::uint64_t seed = 0;
    /// Draw the velocity-update random factor per dimension instead of
    /// once per cat.
    bool rand_per_dimension = false;
};

/// Validates config against a problem; throws std::invalid_argument
/// listing every violated constraint.
void validate(const GmocsoConfig& config, const ProblemSpec& problem);

/// Internal population, external archive, density grid, and the run's
/// random source.
struct OptimizerState {
    std::vector<Solution> population;
    Archive archive;
    Grid grid;
    int iteration = 0;
    Rng rng;
};

/// Final front plus everything needed to reproduce or audit the run.
struct RunResult {
    std::vector<ObjectiveVector> final_front;
    std::vector<Vector> final_positions;
    std::uint64_t seed = 0;
    double elapsed_seconds = 0;
    int iterations_completed = 0;
};

/// Uniformly random positions in bounds (discrete dimensions snapped),
/// zero velocities, all cats evaluated, archive seeded with the
/// non-dominated cats and truncated to capacity, grid built.
OptimizerState initialize(const GmocsoConfig& config, const ProblemSpec& problem);

/// Velocity/position update for every cat, pulled toward the leader:
/// v = w*v + c1*r*(leader - x), x = x + v, then clamp, snap, re-evaluate.
/// r is one fresh uniform [0,1) draw per cat (per dimension when
/// config.rand_per_dimension is set), drawn in population order.
void tracing_step(OptimizerState& state, const GmocsoConfig& config,
                  const ProblemSpec& problem, const Solution& leader);

/// Greedy local search for every cat: the current position plus smp-1
/// mutated copies form the candidate set; each copy perturbs cdc distinct
/// random dimensions by x_d += (2r-1)*srd*x_d (a bounds-scaled fallback
/// kicks in when x_d is numerically zero). The cat moves to a uniformly
/// random member of the candidate set's non-dominated subset.
void seeking_step(OptimizerState& state, const GmocsoConfig& config,
                  const ProblemSpec& problem);

/// Index of the new position among evaluated candidates: keeps the
/// non-dominated subset and draws uniformly among the survivors.
std::size_t greedy_candidate_choice(const std::vector<ObjectiveVector>& candidates,
                                    Rng& rng);

/// One full loop body: archive the population, truncate to capacity,
/// rebuild the grid, select a leader from a least-crowded box, then run
/// tracing and seeking for all cats.
void iterate(OptimizerState& state, const GmocsoConfig& config,
             const ProblemSpec& problem);

/// Full optimization: initialize, iterate max_iterations times, collect
/// the archive front. Deterministic given config.seed (elapsed_seconds
/// excluded). The returned front/position rows are sorted by objectives.
RunResult run(const GmocsoConfig& config, const ProblemSpec& problem);

}  // namespace gmocso

#endif  // GMOCSO_OPTIMIZER_HPP
