#include <doctest.h>

#include <set>
#include <utility>

#include "gmocso/dominance.hpp"
#include "gmocso/metrics.hpp"
#include "gmocso/optimizer.hpp"
#include "oracles.hpp"

using gmocso::Archive;
using gmocso::GmocsoConfig;
using gmocso::ObjectiveVector;
using gmocso::OptimizerState;
using gmocso::ProblemId;
using gmocso::ProblemSpec;
using gmocso::Rng;
using gmocso::RunResult;
using gmocso::Solution;
using gmocso::Vector;

namespace {

GmocsoConfig small_config(std::uint64_t seed, int population = 10, int iterations = 5) {
    GmocsoConfig c;
    c.population_size = population;
    c.max_iterations = iterations;
    c.seed = seed;
    return c;
}

std::set<std::pair<double, double>> objective_set(const std::vector<Solution>& members) {
    std::set<std::pair<double, double>> out;
    for (const Solution& s : members) out.insert({s.objectives[0], s.objectives[1]});
    return out;
}

bool mutually_non_dominated(const std::vector<Solution>& members) {
    for (const Solution& a : members)
        for (const Solution& b : members)
            if (&a != &b && oracles::dominates_raw(a.objectives, b.objectives))
                return false;
    return true;
}

bool within_bounds(const Vector& x, const ProblemSpec& problem) {
    return (x.array() >= problem.lower_bounds.array()).all() &&
           (x.array() <= problem.upper_bounds.array()).all();
}

OptimizerState manual_state(std::vector<Solution> population, const ProblemSpec& problem,
                            std::uint64_t seed) {
    for (Solution& s : population) s.objectives = evaluate(problem, s.position);
    OptimizerState state{std::move(population), Archive{{}, 100}, gmocso::Grid{}, 0,
                         Rng(seed)};
    for (const Solution& s : state.population) archive_insert(state.archive, s);
    state.grid = grid_build(state.archive, 10);
    return state;
}

Solution cat_at(std::initializer_list<double> position) {
    Solution s;
    s.position.resize(static_cast<Eigen::Index>(position.size()));
    Eigen::Index i = 0;
    for (double v : position) s.position[i++] = v;
    s.velocity = Vector::Zero(s.position.size());
    return s;
}

}  // namespace

TEST_CASE("validate: constraint list in error message") {
    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1);
    GmocsoConfig bad;
    bad.population_size = 0;
    bad.smp = 0;
    bad.cdc = 40;  // > 30 vars
    CHECK_THROWS_AS(validate(bad, zdt1), std::invalid_argument);
    try {
        validate(bad, zdt1);
    } catch (const std::invalid_argument& e) {
        const std::string message = e.what();
        CHECK(message.find("population_size") != std::string::npos);
        CHECK(message.find("smp") != std::string::npos);
        CHECK(message.find("cdc") != std::string::npos);
    }
    CHECK_NOTHROW(validate(GmocsoConfig{}, zdt1));
}

TEST_CASE("initialize: determinism, archive seeding, bounds") {
    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1);

    auto a = initialize(small_config(77), zdt1);
    auto b = initialize(small_config(77), zdt1);
    REQUIRE(a.population.size() == b.population.size());
    for (std::size_t i = 0; i < a.population.size(); ++i) {
        CHECK((a.population[i].position.array() == b.population[i].position.array()).all());
        CHECK((a.population[i].objectives.array() == b.population[i].objectives.array()).all());
        CHECK((a.population[i].velocity.array() == 0.0).all());
    }
    CHECK(objective_set(a.archive.members) == objective_set(b.archive.members));

    auto solo = initialize(small_config(5, 1), zdt1);
    CHECK(solo.archive.members.size() == 1);

    auto full = initialize(small_config(3, 100), zdt1);
    CHECK(full.archive.members.size() >= 1);
    CHECK(full.archive.members.size() <= 100);
    CHECK(mutually_non_dominated(full.archive.members));
    for (const Solution& s : full.population) CHECK(within_bounds(s.position, zdt1));
}

TEST_CASE("tracing_step: fixed point, drift, clamping") {
    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1, 2);

    // cat exactly at the leader with zero velocity stays put
    auto state = manual_state({cat_at({0.3, 0.4})}, zdt1, 1);
    const Solution leader = state.population[0];
    GmocsoConfig config;
    tracing_step(state, config, zdt1, leader);
    CHECK(state.population[0].position[0] == 0.3);
    CHECK(state.population[0].position[1] == 0.4);
    CHECK((state.population[0].velocity.array() == 0.0).all());

    // c1 = 0: pure drift by the previous velocity
    state = manual_state({cat_at({0.5, 0.0})}, zdt1, 1);
    state.population[0].velocity[0] = 0.2;
    config.c1 = 0.0;
    tracing_step(state, config, zdt1, leader);
    CHECK(state.population[0].position[0] == doctest::Approx(0.7).epsilon(1e-15));

    // overshoot clamps to the upper bound
    state = manual_state({cat_at({0.9, 0.0})}, zdt1, 1);
    state.population[0].velocity[0] = 0.5;
    tracing_step(state, config, zdt1, state.population[0]);
    CHECK(state.population[0].position[0] == 1.0);

    // objectives always re-evaluated
    CHECK((state.population[0].objectives.array() ==
           evaluate(zdt1, state.population[0].position).array())
              .all());
}

TEST_CASE("seeking_step: smp=1 is a no-op") {
    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1, 4);
    auto state = manual_state({cat_at({0.5, 0.2, 0.8, 0.1})}, zdt1, 9);
    GmocsoConfig config;
    config.smp = 1;
    const Vector before = state.population[0].position;
    seeking_step(state, config, zdt1);
    CHECK((state.population[0].position.array() == before.array()).all());
}

TEST_CASE("greedy_candidate_choice: dominated candidates never chosen") {
    Rng rng(3);
    ObjectiveVector good(2), bad(2);
    good << 0, 0;
    bad << 1, 1;
    for (int i = 0; i < 50; ++i)
        CHECK(gmocso::greedy_candidate_choice({bad, good}, rng) == 1);
}

TEST_CASE("greedy_candidate_choice: incomparable candidates picked uniformly") {
    Rng rng(8);
    ObjectiveVector left(2), right(2);
    left << 0, 1;
    right << 1, 0;
    int chose_left = 0;
    const int draws = 4000;
    for (int i = 0; i < draws; ++i)
        if (gmocso::greedy_candidate_choice({left, right}, rng) == 0) ++chose_left;
    const double share = static_cast<double>(chose_left) / draws;
    CHECK(share > 0.45);
    CHECK(share < 0.55);
}

TEST_CASE("seeking_step: only improves or diversifies, stays in bounds") {
    const auto zdt4 = gmocso::make_problem(ProblemId::Zdt4);
    auto state = initialize(small_config(13, 20), zdt4);
    GmocsoConfig config = small_config(13, 20);
    for (int i = 0; i < 5; ++i) {
        seeking_step(state, config, zdt4);
        for (const Solution& s : state.population) {
            CHECK(within_bounds(s.position, zdt4));
            CHECK((s.objectives.array() == evaluate(zdt4, s.position).array()).all());
        }
    }
}

TEST_CASE("iterate: population constant, archive bounded and non-dominated") {
    for (ProblemId id : {ProblemId::Zdt1, ProblemId::PressureVessel}) {
        const auto problem = gmocso::make_problem(id);
        GmocsoConfig config = small_config(21, 8);
        config.archive_capacity = 6;
        auto state = initialize(config, problem);
        for (int it = 0; it < 10; ++it) {
            iterate(state, config, problem);
            CHECK(state.population.size() == 8);
            CHECK(state.archive.members.size() <= 6);
            CHECK(mutually_non_dominated(state.archive.members));
            for (const Solution& s : state.archive.members) {
                CHECK(within_bounds(s.position, problem));
                CHECK((s.objectives.array() == evaluate(problem, s.position).array()).all());
            }
        }
        CHECK(state.iteration == 10);
    }
}

TEST_CASE("iterate with unbounded archive replays the non-dominated set of all inserts") {
    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1);
    GmocsoConfig config = small_config(2025, 5, 10);
    config.archive_capacity = 1000000000;

    auto state = initialize(config, zdt1);
    std::vector<ObjectiveVector> inserted;
    // initialize() already inserted the initial population; each iterate()
    // then inserts the population as it stands on entry
    for (const Solution& s : state.population) inserted.push_back(s.objectives);
    for (int it = 0; it < 10; ++it) {
        if (it > 0)
            for (const Solution& s : state.population) inserted.push_back(s.objectives);
        iterate(state, config, zdt1);
    }

    std::set<std::pair<double, double>> expected;
    for (const ObjectiveVector& p : oracles::non_dominated(inserted))
        expected.insert({p[0], p[1]});
    CHECK(objective_set(state.archive.members) == expected);
}

TEST_CASE("run: determinism and seed sensitivity") {
    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1);
    const GmocsoConfig config = small_config(404, 15, 8);

    const RunResult a = run(config, zdt1);
    const RunResult b = run(config, zdt1);
    REQUIRE(a.final_front.size() == b.final_front.size());
    for (std::size_t i = 0; i < a.final_front.size(); ++i) {
        CHECK((a.final_front[i].array() == b.final_front[i].array()).all());
        CHECK((a.final_positions[i].array() == b.final_positions[i].array()).all());
    }
    CHECK(a.iterations_completed == 8);
    CHECK(a.seed == 404);

    GmocsoConfig other = config;
    other.seed = 405;
    const RunResult c = run(other, zdt1);
    bool differs = a.final_front.size() != c.final_front.size();
    for (std::size_t i = 0; !differs && i < a.final_front.size(); ++i)
        differs = !(a.final_front[i].array() == c.final_front[i].array()).all();
    CHECK(differs);
}

TEST_CASE("run: zero iterations returns the initial archive") {
    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1);
    GmocsoConfig config = small_config(812, 20, 0);
    const RunResult result = run(config, zdt1);

    auto state = initialize(config, zdt1);
    std::set<std::pair<double, double>> expected = objective_set(state.archive.members);
    std::set<std::pair<double, double>> got;
    for (const ObjectiveVector& p : result.final_front) got.insert({p[0], p[1]});
    CHECK(got == expected);
    CHECK(result.iterations_completed == 0);
}

TEST_CASE("run: front quality improves with iteration budget on ZDT1") {
    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1);
    const auto reference = reference_front(zdt1, 1000).points;

    double early = 0, late = 0;
    const int seeds = 12;
    for (int s = 0; s < seeds; ++s) {
        GmocsoConfig config = small_config(1000 + static_cast<std::uint64_t>(s), 50, 1);
        early += gmocso::rgd(reference, run(config, zdt1).final_front);
        config.max_iterations = 50;
        late += gmocso::rgd(reference, run(config, zdt1).final_front);
    }
    CHECK(late / seeds < early / seeds);
}

TEST_CASE("per-dimension rand flag changes the trajectory but not the contracts") {
    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1);
    GmocsoConfig config = small_config(55, 10, 5);
    config.rand_per_dimension = true;
    const RunResult result = run(config, zdt1);
    CHECK(!result.final_front.empty());
    for (const Vector& x : result.final_positions) CHECK(within_bounds(x, zdt1));
}
