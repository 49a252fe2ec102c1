#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gmocso/problems.hpp"
#include "oracles.hpp"

using gmocso::ObjectiveVector;
using gmocso::ProblemId;
using gmocso::ProblemSpec;
using gmocso::Vector;

namespace {

Vector zeros(int n) { return Vector::Zero(n); }

double front_f2(ProblemId id, double f1) {
    switch (id) {
        case ProblemId::Zdt1:
        case ProblemId::Zdt4: return 1.0 - std::sqrt(f1);
        case ProblemId::Zdt2:
        case ProblemId::Zdt6: return 1.0 - f1 * f1;
        case ProblemId::Zdt3:
            return 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * std::numbers::pi * f1);
        default: return 0;
    }
}

}  // namespace

TEST_CASE("evaluate: ZDT anchor points") {
    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1);
    auto f = evaluate(zdt1, zeros(30));
    CHECK(f[0] == doctest::Approx(0.0));
    CHECK(f[1] == doctest::Approx(1.0));

    f = evaluate(zdt1, Vector::Ones(30));
    CHECK(f[0] == doctest::Approx(1.0));
    CHECK(f[1] == doctest::Approx(6.8377223398316205).epsilon(1e-12));

    const auto zdt2 = gmocso::make_problem(ProblemId::Zdt2);
    Vector x = zeros(30);
    x[0] = 0.5;
    f = evaluate(zdt2, x);
    CHECK(f[0] == doctest::Approx(0.5));
    CHECK(f[1] == doctest::Approx(0.75));

    const auto zdt3 = gmocso::make_problem(ProblemId::Zdt3);
    f = evaluate(zdt3, zeros(30));
    CHECK(f[0] == doctest::Approx(0.0));
    CHECK(f[1] == doctest::Approx(1.0));

    const auto zdt4 = gmocso::make_problem(ProblemId::Zdt4);
    f = evaluate(zdt4, zeros(10));
    CHECK(f[0] == doctest::Approx(0.0));
    CHECK(f[1] == doctest::Approx(1.0));

    const auto zdt6 = gmocso::make_problem(ProblemId::Zdt6);
    f = evaluate(zdt6, zeros(10));
    CHECK(f[0] == doctest::Approx(1.0));
    CHECK(f[1] == doctest::Approx(0.0));
}

TEST_CASE("evaluate: pressure vessel hand-derived point") {
    const auto vessel = gmocso::make_problem(ProblemId::PressureVessel);
    Vector x(4);
    x << 1.0, 1.0, 10.0, 10.0;
    const auto f = evaluate(vessel, x);
    CHECK(f[0] == doctest::Approx(470.111).epsilon(1e-9));
    const double g3 = std::numbers::pi * 100.0 * 10.0 +
                      (4.0 / 3.0) * std::numbers::pi * 1000.0 - 1296000.0;
    CHECK(f[1] == doctest::Approx(-g3).epsilon(1e-12));
}

TEST_CASE("evaluate: vessel violation is zero iff feasible") {
    const auto vessel = gmocso::make_problem(ProblemId::PressureVessel);
    // a comfortably feasible design: thick walls, big volume
    Vector feasible(4);
    feasible << 6.0, 6.0, 60.0, 200.0;
    CHECK(evaluate(vessel, feasible)[1] == 0.0);

    std::mt19937 gen(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        Vector x(4);
        for (int d = 0; d < 4; ++d) {
            const double lo = vessel.lower_bounds[d];
            const double hi = vessel.upper_bounds[d];
            x[d] = lo + u(gen) * (hi - lo);
        }
        x = snap_discrete(vessel, x);
        const auto f = evaluate(vessel, x);
        CHECK(f[1] >= 0.0);
        const double g1 = x[0] - 0.0193 * x[2];
        const double g2 = x[1] - 0.00954 * x[2];
        const double g3 = std::numbers::pi * x[2] * x[2] * x[3] +
                          (4.0 / 3.0) * std::numbers::pi * x[2] * x[2] * x[2] - 1296000.0;
        const bool all_ok = g1 >= 0 && g2 >= 0 && g3 >= 0;
        CHECK((f[1] == 0.0) == all_ok);
    }
}

TEST_CASE("evaluate: contract violations") {
    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1);
    Vector out_of_bounds = zeros(30);
    out_of_bounds[3] = 1.5;
    CHECK_THROWS_AS(evaluate(zdt1, out_of_bounds), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(zdt1, zeros(7)), std::invalid_argument);
}

TEST_CASE("evaluate: pure, finite, and on-front when tail is zero") {
    std::mt19937 gen(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (ProblemId id : {ProblemId::Zdt1, ProblemId::Zdt2, ProblemId::Zdt3,
                         ProblemId::Zdt4, ProblemId::Zdt6}) {
        const auto problem = gmocso::make_problem(id);
        for (int trial = 0; trial < 100; ++trial) {
            Vector x(problem.n_vars);
            for (int d = 0; d < problem.n_vars; ++d)
                x[d] = problem.lower_bounds[d] +
                       u(gen) * (problem.upper_bounds[d] - problem.lower_bounds[d]);
            const auto once = evaluate(problem, x);
            const auto twice = evaluate(problem, x);
            CHECK(once.allFinite());
            CHECK((once.array() == twice.array()).all());
        }

        // x_2..x_n = 0 puts the point on the analytic front
        for (int trial = 0; trial < 50; ++trial) {
            Vector x = zeros(problem.n_vars);
            x[0] = u(gen);
            const auto f = evaluate(problem, x);
            CHECK(std::abs(f[1] - front_f2(id, f[0])) < 1e-12);
        }
    }
}

TEST_CASE("snap_discrete: rounding, clamping, idempotence, identity") {
    const auto vessel = gmocso::make_problem(ProblemId::PressureVessel);
    Vector x(4);
    x << 0.8130, 1.0, 50.0, 50.0;
    Vector snapped = snap_discrete(vessel, x);
    CHECK(snapped[0] == doctest::Approx(0.8125).epsilon(1e-15));

    x[0] = 0.01;
    snapped = snap_discrete(vessel, x);
    CHECK(snapped[0] == doctest::Approx(0.0625).epsilon(1e-15));

    const Vector again = snap_discrete(vessel, snapped);
    CHECK((again.array() == snapped.array()).all());

    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1);
    Vector y = Vector::Constant(30, 0.123456);
    CHECK((snap_discrete(zdt1, y).array() == y.array()).all());
}

TEST_CASE("clamp_to_bounds: both branches and interior identity") {
    const auto zdt1 = gmocso::make_problem(ProblemId::Zdt1);
    Vector x = zeros(30);
    x[0] = -0.3;
    x[1] = 1.7;
    x[2] = 0.4;
    const Vector clamped = clamp_to_bounds(zdt1, x);
    CHECK(clamped[0] == 0.0);
    CHECK(clamped[1] == 1.0);
    CHECK(clamped[2] == 0.4);
}

TEST_CASE("reference_front: ZDT1 three-point sample") {
    const auto front = reference_front(gmocso::make_problem(ProblemId::Zdt1), 3);
    REQUIRE(front.points.size() == 3);
    CHECK(front.points[0][0] == doctest::Approx(0.0));
    CHECK(front.points[0][1] == doctest::Approx(1.0));
    CHECK(front.points[1][0] == doctest::Approx(0.5));
    CHECK(front.points[1][1] == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-12));
    CHECK(front.points[2][0] == doctest::Approx(1.0));
    CHECK(front.points[2][1] == doctest::Approx(0.0));
}

TEST_CASE("reference_front: sorted, non-dominated, correct extremes") {
    for (ProblemId id : {ProblemId::Zdt1, ProblemId::Zdt2, ProblemId::Zdt3,
                         ProblemId::Zdt4, ProblemId::Zdt6}) {
        const auto front = reference_front(gmocso::make_problem(id), 500);
        REQUIRE(!front.points.empty());
        for (std::size_t i = 1; i < front.points.size(); ++i)
            CHECK(front.points[i - 1][0] < front.points[i][0]);
        const auto survivors = oracles::non_dominated(front.points);
        CHECK(survivors.size() == front.points.size());

        if (id == ProblemId::Zdt1 || id == ProblemId::Zdt2 || id == ProblemId::Zdt4) {
            CHECK(std::abs(front.points.front()[0] - 0.0) < 1e-9);
            CHECK(std::abs(front.points.front()[1] - 1.0) < 1e-9);
            CHECK(std::abs(front.points.back()[0] - 1.0) < 1e-9);
            CHECK(std::abs(front.points.back()[1] - 0.0) < 1e-9);
        }
        if (id == ProblemId::Zdt2) {
            bool has_left = false, has_right = false;
            for (const ObjectiveVector& p : front.points) {
                if (std::abs(p[0]) < 1e-12 && std::abs(p[1] - 1.0) < 1e-12) has_left = true;
                if (std::abs(p[0] - 1.0) < 1e-12 && std::abs(p[1]) < 1e-12) has_right = true;
            }
            CHECK(has_left);
            CHECK(has_right);
        }
    }
}

TEST_CASE("reference_front: single point is degenerate but valid") {
    const auto front = reference_front(gmocso::make_problem(ProblemId::Zdt1), 1);
    CHECK(front.points.size() == 1);
}

TEST_CASE("reference_front: pressure vessel has none") {
    CHECK_THROWS_AS(reference_front(gmocso::make_problem(ProblemId::PressureVessel), 10),
                    gmocso::MissingReferenceError);
}

TEST_CASE("problem ids round-trip through names") {
    for (ProblemId id : {ProblemId::Zdt1, ProblemId::Zdt2, ProblemId::Zdt3,
                         ProblemId::Zdt4, ProblemId::Zdt6, ProblemId::PressureVessel})
        CHECK(gmocso::parse_problem_id(gmocso::problem_name(id)) == id);
    CHECK(!gmocso::parse_problem_id("ZDT5").has_value());
}
