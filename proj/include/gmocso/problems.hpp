#ifndef GMOCSO_PROBLEMS_HPP
#define GMOCSO_PROBLEMS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gmocso/types.hpp"

namespace gmocso {

enum class ProblemId { Zdt1, Zdt2, Zdt3, Zdt4, Zdt6, PressureVessel };

/// Dimension constrained to integer multiples of a step size.
struct DiscreteDim {
    int index;
    Scalar step;
};

/// Static description of a bi-objective benchmark problem.
struct ProblemSpec {
    ProblemId id;
    int n_vars = 0;
    int n_objectives = 2;
    Vector lower_bounds;
    Vector upper_bounds;
    std::vector<DiscreteDim> discrete_dims;
};

/// Analytic trade-off curve, sorted ascending by the first objective.
struct ReferenceFront {
    std::vector<ObjectiveVector> points;
};

/// Thrown when a reference front is requested for a problem that has no
/// analytic one (the pressure vessel case); callers fall back to a
/// file-based or pooled front.
struct MissingReferenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Problem with its conventional dimension (ZDT1-3: 30 vars, ZDT4/6: 10,
/// pressure vessel: 4).
ProblemSpec make_problem(ProblemId id);

/// Same problem with a custom decision-space dimension (ZDT only; the
/// pressure vessel is fixed at 4 variables). ZDT needs n_vars >= 2.
ProblemSpec make_problem(ProblemId id, int n_vars);

std::optional<ProblemId> parse_problem_id(std::string_view name);
std::string problem_name(ProblemId id);
bool has_analytic_front(ProblemId id);

/// Objective costs (f1, f2) at x. Throws std::invalid_argument when x is
/// outside the bounds or has the wrong length; callers clamp first.
ObjectiveVector evaluate(const ProblemSpec& problem, const Vector& x);

/// Rounds every discrete dimension to the nearest step multiple, then
/// clamps it into bounds. Continuous dimensions pass through.
Vector snap_discrete(const ProblemSpec& problem, Vector x);

/// Componentwise clamp into [lower_bounds, upper_bounds].
Vector clamp_to_bounds(const ProblemSpec& problem, Vector x);

/// n_points samples of the true front, sorted strictly ascending by f1
/// and mutually non-dominated. Throws MissingReferenceError for the
/// pressure vessel.
ReferenceFront reference_front(const ProblemSpec& problem, int n_points);

}  // namespace gmocso

#endif  // GMOCSO_PROBLEMS_HPP
