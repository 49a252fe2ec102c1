#include "gmocso/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gmocso/dominance.hpp"

namespace gmocso {

namespace {

constexpr Scalar kPi = std::numbers::pi_v<Scalar>;
constexpr Scalar kVesselStep = 0.0625;

ProblemSpec uniform_box(ProblemId id, int n_vars, Scalar lo, Scalar hi) {
    ProblemSpec p;
    p.id = id;
    p.n_vars = n_vars;
    p.lower_bounds = Vector::Constant(n_vars, lo);
    p.upper_bounds = Vector::Constant(n_vars, hi);
    return p;
}

ProblemSpec make_pressure_vessel() {
    ProblemSpec p;
    p.id = ProblemId::PressureVessel;
    p.n_vars = 4;
    p.lower_bounds.resize(4);
    p.upper_bounds.resize(4);
    // shell/head thicknesses run over 100 levels of 0.0625
    p.lower_bounds << kVesselStep, kVesselStep, 10.0, 10.0;
    p.upper_bounds << 100 * kVesselStep, 100 * kVesselStep, 200.0, 240.0;
    p.discrete_dims = {{0, kVesselStep}, {1, kVesselStep}};
    return p;
}

int default_dimension(ProblemId id) {
    switch (id) {
        case ProblemId::Zdt1:
        case ProblemId::Zdt2:
        case ProblemId::Zdt3: return 30;
        case ProblemId::Zdt4:
        case ProblemId::Zdt6: return 10;
        case ProblemId::PressureVessel: return 4;
    }
    throw std::invalid_argument("unknown problem id");
}

Scalar zdt_linear_g(const Vector& x) {
    const Eigen::Index n = x.size();
    return 1.0 + 9.0 * x.tail(n - 1).sum() / static_cast<Scalar>(n - 1);
}

ObjectiveVector pressure_vessel_costs(const Vector& x) {
    const Scalar t_shell = x[0], t_head = x[1], radius = x[2], length = x[3];
    const Scalar material_cost = 0.6224 * t_shell * radius * length +
                                 1.7781 * t_head * radius * radius +
                                 3.1661 * t_shell * t_shell * length +
                                 19.84 * t_shell * t_shell * radius;
    const Scalar g1 = t_shell - 0.0193 * radius;
    const Scalar g2 = t_head - 0.00954 * radius;
    const Scalar g3 = kPi * radius * radius * length +
                      (4.0 / 3.0) * kPi * radius * radius * radius - 1296000.0;
    // feasibility requires g_i >= 0, so the violation of g_i is max(-g_i, 0)
    const Scalar violation = std::max(-g1, Scalar{0}) + std::max(-g2, Scalar{0}) +
                             std::max(-g3, Scalar{0});
    ObjectiveVector f(2);
    f << material_cost, violation;
    return f;
}

}  // namespace

ProblemSpec make_problem(ProblemId id) { return make_problem(id, default_dimension(id)); }

ProblemSpec make_problem(ProblemId id, int n_vars) {
    switch (id) {
        case ProblemId::Zdt1:
        case ProblemId::Zdt2:
        case ProblemId::Zdt3:
            if (n_vars < 2) throw std::invalid_argument("ZDT needs n_vars >= 2");
            return uniform_box(id, n_vars, 0.0, 1.0);
        case ProblemId::Zdt4: {
            if (n_vars < 2) throw std::invalid_argument("ZDT needs n_vars >= 2");
            ProblemSpec p = uniform_box(id, n_vars, -5.0, 5.0);
            p.lower_bounds[0] = 0.0;
            p.upper_bounds[0] = 1.0;
            return p;
        }
        case ProblemId::Zdt6:
            if (n_vars < 2) throw std::invalid_argument("ZDT needs n_vars >= 2");
            return uniform_box(id, n_vars, 0.0, 1.0);
        case ProblemId::PressureVessel:
            if (n_vars != 4)
                throw std::invalid_argument("pressure vessel is fixed at 4 variables");
            return make_pressure_vessel();
    }
    throw std::invalid_argument("unknown problem id");
}

std::optional<ProblemId> parse_problem_id(std::string_view name) {
    if (name == "ZDT1") return ProblemId::Zdt1;
    if (name == "ZDT2") return ProblemId::Zdt2;
    if (name == "ZDT3") return ProblemId::Zdt3;
    if (name == "ZDT4") return ProblemId::Zdt4;
    if (name == "ZDT6") return ProblemId::Zdt6;
    if (name == "PressureVessel") return ProblemId::PressureVessel;
    return std::nullopt;
}

std::string problem_name(ProblemId id) {
    switch (id) {
        case ProblemId::Zdt1: return "ZDT1";
        case ProblemId::Zdt2: return "ZDT2";
        case ProblemId::Zdt3: return "ZDT3";
        case ProblemId::Zdt4: return "ZDT4";
        case ProblemId::Zdt6: return "ZDT6";
        case ProblemId::PressureVessel: return "PressureVessel";
    }
    throw std::invalid_argument("unknown problem id");
}

bool has_analytic_front(ProblemId id) { return id != ProblemId::PressureVessel; }

ObjectiveVector evaluate(const ProblemSpec& problem, const Vector& x) {
    if (x.size() != problem.n_vars)
        throw std::invalid_argument("evaluate: wrong decision vector length");
    if ((x.array() < problem.lower_bounds.array()).any() ||
        (x.array() > problem.upper_bounds.array()).any())
        throw std::invalid_argument("evaluate: decision vector out of bounds");

    if (problem.id == ProblemId::PressureVessel) return pressure_vessel_costs(x);

    const Eigen::Index n = x.size();
    ObjectiveVector f(2);
    switch (problem.id) {
        case ProblemId::Zdt1: {
            const Scalar g = zdt_linear_g(x);
            f << x[0], g * (1.0 - std::sqrt(x[0] / g));
            break;
        }
        case ProblemId::Zdt2: {
            const Scalar g = zdt_linear_g(x);
            const Scalar ratio = x[0] / g;
            f << x[0], g * (1.0 - ratio * ratio);
            break;
        }
        case ProblemId::Zdt3: {
            const Scalar g = zdt_linear_g(x);
            const Scalar ratio = x[0] / g;
            f << x[0],
                g * (1.0 - std::sqrt(ratio) - ratio * std::sin(10.0 * kPi * x[0]));
            break;
        }
        case ProblemId::Zdt4: {
            const Scalar g =
                1.0 + 10.0 * static_cast<Scalar>(n - 1) +
                (x.tail(n - 1).array().square() -
                 10.0 * (4.0 * kPi * x.tail(n - 1).array()).cos())
                    .sum();
            f << x[0], g * (1.0 - std::sqrt(x[0] / g));
            break;
        }
        case ProblemId::Zdt6: {
            const Scalar s = std::sin(6.0 * kPi * x[0]);
            const Scalar f1 = 1.0 - std::exp(-4.0 * x[0]) * std::pow(s, 6);
            const Scalar g =
                1.0 + 9.0 * std::pow(x.tail(n - 1).sum() / static_cast<Scalar>(n - 1),
                                     0.25);
            const Scalar ratio = f1 / g;
            f << f1, g * (1.0 - ratio * ratio);
            break;
        }
        default: throw std::invalid_argument("unknown problem id");
    }
    return f;
}

Vector snap_discrete(const ProblemSpec& problem, Vector x) {
    for (const DiscreteDim& dim : problem.discrete_dims) {
        const Scalar snapped = std::round(x[dim.index] / dim.step) * dim.step;
        x[dim.index] = std::clamp(snapped, problem.lower_bounds[dim.index],
                                  problem.upper_bounds[dim.index]);
    }
    return x;
}

Vector clamp_to_bounds(const ProblemSpec& problem, Vector x) {
    return x.cwiseMax(problem.lower_bounds).cwiseMin(problem.upper_bounds);
}

ReferenceFront reference_front(const ProblemSpec& problem, int n_points) {
    if (!has_analytic_front(problem.id))
        throw MissingReferenceError(
            "no analytic reference front for " + problem_name(problem.id) +
            "; supply one via file or use a pooled front");
    if (n_points < 1)
        throw std::invalid_argument("reference_front: n_points must be positive");

    const auto sample01 = [&](int i) {
        return n_points == 1 ? Scalar{0}
                             : static_cast<Scalar>(i) / static_cast<Scalar>(n_points - 1);
    };

    std::vector<ObjectiveVector> pts;
    pts.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const Scalar t = sample01(i);
        ObjectiveVector p(2);
        switch (problem.id) {
            case ProblemId::Zdt1:
            case ProblemId::Zdt4: p << t, 1.0 - std::sqrt(t); break;
            case ProblemId::Zdt2: p << t, 1.0 - t * t; break;
            case ProblemId::Zdt3:
                p << t, 1.0 - std::sqrt(t) - t * std::sin(10.0 * kPi * t);
                break;
            case ProblemId::Zdt6: {
                // sample the reachable f1 range through x1
                const Scalar s = std::sin(6.0 * kPi * t);
                const Scalar f1 = 1.0 - std::exp(-4.0 * t) * std::pow(s, 6);
                p << f1, 1.0 - f1 * f1;
                break;
            }
            default: throw std::invalid_argument("unknown problem id");
        }
        pts.push_back(std::move(p));
    }

    std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
        return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });
    std::vector<ObjectiveVector> kept = non_dominated_filter(pts);
    // drop bitwise duplicates so f1 stays strictly increasing
    kept.erase(std::unique(kept.begin(), kept.end(),
                           [](const ObjectiveVector& a, const ObjectiveVector& b) {
                               return (a.array() == b.array()).all();
                           }),
               kept.end());
    return ReferenceFront{std::move(kept)};
}

}  // namespace gmocso
