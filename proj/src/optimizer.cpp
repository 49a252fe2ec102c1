#include "gmocso/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gmocso/dominance.hpp"

namespace gmocso {

namespace {

constexpr Scalar kZeroPositionEps = 1e-12;

void reposition(Solution& cat, Vector new_position, const ProblemSpec& problem) {
    cat.position = snap_discrete(problem, clamp_to_bounds(problem, std::move(new_position)));
    cat.objectives = evaluate(problem, cat.position);
}

}  // namespace

void validate(const GmocsoConfig& config, const ProblemSpec& problem) {
    std::string violations;
    const auto require = [&](bool ok, const char* constraint) {
        if (!ok) {
            if (!violations.empty()) violations += "; ";
            violations += constraint;
        }
    };
    require(config.population_size >= 1, "population_size >= 1");
    require(config.max_iterations >= 0, "max_iterations >= 0");
    require(config.smp >= 1, "smp >= 1");
    require(config.cdc >= 1, "cdc >= 1");
    require(config.cdc <= problem.n_vars, "cdc <= problem n_vars");
    require(config.srd >= 0, "srd >= 0");
    require(config.n_grid >= 1, "n_grid >= 1");
    require(config.archive_capacity >= 1, "archive_capacity >= 1");
    if (!violations.empty())
        throw std::invalid_argument("invalid optimizer config: " + violations);
}

OptimizerState initialize(const GmocsoConfig& config, const ProblemSpec& problem) {
    validate(config, problem);
    OptimizerState state{{},
                         Archive{{}, static_cast<std::size_t>(config.archive_capacity)},
                         Grid{},
                         0,
                         Rng(config.seed)};

    state.population.reserve(static_cast<std::size_t>(config.population_size));
    for (int k = 0; k < config.population_size; ++k) {
        Solution cat;
        cat.position.resize(problem.n_vars);
        for (int d = 0; d < problem.n_vars; ++d)
            cat.position[d] =
                state.rng.uniform(problem.lower_bounds[d], problem.upper_bounds[d]);
        cat.position = snap_discrete(problem, std::move(cat.position));
        cat.velocity = Vector::Zero(problem.n_vars);
        cat.objectives = evaluate(problem, cat.position);
        state.population.push_back(std::move(cat));
    }

    for (const Solution& cat : state.population) archive_insert(state.archive, cat);
    archive_truncate(state.archive, config.n_grid, state.rng);
    state.grid = grid_build(state.archive, config.n_grid);
    return state;
}

void tracing_step(OptimizerState& state, const GmocsoConfig& config,
                  const ProblemSpec& problem, const Solution& leader) {
    for (Solution& cat : state.population) {
        if (config.rand_per_dimension) {
            for (int d = 0; d < problem.n_vars; ++d)
                cat.velocity[d] = config.inertia_weight * cat.velocity[d] +
                                  config.c1 * state.rng.uniform() *
                                      (leader.position[d] - cat.position[d]);
        } else {
            const Scalar r = state.rng.uniform();
            cat.velocity = config.inertia_weight * cat.velocity +
                           (config.c1 * r) * (leader.position - cat.position);
        }
        reposition(cat, cat.position + cat.velocity, problem);
    }
}

std::size_t greedy_candidate_choice(const std::vector<ObjectiveVector>& candidates,
                                    Rng& rng) {
    const auto survivors = non_dominated_indices(candidates);
    return survivors[rng.uniform_index(survivors.size())];
}

void seeking_step(OptimizerState& state, const GmocsoConfig& config,
                  const ProblemSpec& problem) {
    const std::size_t n_vars = static_cast<std::size_t>(problem.n_vars);
    std::vector<Vector> positions;
    std::vector<ObjectiveVector> objectives;
    for (Solution& cat : state.population) {
        positions.clear();
        objectives.clear();
        positions.push_back(cat.position);
        objectives.push_back(cat.objectives);
        for (int j = 1; j < config.smp; ++j) {
            Vector pos = cat.position;
            for (std::size_t d :
                 state.rng.distinct_indices(static_cast<std::size_t>(config.cdc), n_vars)) {
                const Scalar r = state.rng.uniform();
                const Scalar swing = (2.0 * r - 1.0) * config.srd;
                const Eigen::Index dim = static_cast<Eigen::Index>(d);
                if (std::abs(pos[dim]) <= kZeroPositionEps)
                    // multiplicative mutation stalls at zero; nudge by a
                    // fraction of the variable's range instead
                    pos[dim] += swing * 0.1 *
                                (problem.upper_bounds[dim] - problem.lower_bounds[dim]);
                else
                    pos[dim] += swing * pos[dim];
            }
            pos = snap_discrete(problem, clamp_to_bounds(problem, std::move(pos)));
            objectives.push_back(evaluate(problem, pos));
            positions.push_back(std::move(pos));
        }
        const std::size_t pick = greedy_candidate_choice(objectives, state.rng);
        if (pick != 0) {
            cat.position = positions[pick];
            cat.objectives = objectives[pick];
        }
    }
}

void iterate(OptimizerState& state, const GmocsoConfig& config,
             const ProblemSpec& problem) {
    for (const Solution& cat : state.population) archive_insert(state.archive, cat);
    archive_truncate(state.archive, config.n_grid, state.rng);
    state.grid = grid_build(state.archive, config.n_grid);
    const Solution leader = select_leader(state.archive, state.grid, state.rng);
    tracing_step(state, config, problem, leader);
    seeking_step(state, config, problem);
    ++state.iteration;
}

RunResult run(const GmocsoConfig& config, const ProblemSpec& problem) {
    const auto start = std::chrono::steady_clock::now();
    OptimizerState state = initialize(config, problem);
    for (int it = 0; it < config.max_iterations; ++it) iterate(state, config, problem);
    const auto stop = std::chrono::steady_clock::now();

    // canonical row order: sort archive rows by objectives
    std::vector<std::size_t> order(state.archive.members.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const ObjectiveVector& fa = state.archive.members[a].objectives;
        const ObjectiveVector& fb = state.archive.members[b].objectives;
        return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
    });

    RunResult result;
    result.seed = config.seed;
    result.iterations_completed = state.iteration;
    result.elapsed_seconds =
        std::chrono::duration<double>(stop - start).count();
    result.final_front.reserve(order.size());
    result.final_positions.reserve(order.size());
    for (std::size_t i : order) {
        result.final_front.push_back(state.archive.members[i].objectives);
        result.final_positions.push_back(state.archive.members[i].position);
    }
    return result;
}

}  // namespace gmocso
