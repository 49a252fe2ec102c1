#ifndef GMOCSO_TYPES_HPP
#define GMOCSO_TYPES_HPP

#include <Eigen/Dense>

namespace gmocso {

using Scalar = double;

/// Decision-space vector (length = problem dimension).
using Vector = Eigen::VectorXd;

/// Point in objective space; all entries are minimized costs.
using ObjectiveVector = Eigen::VectorXd;

/// One search agent: position, velocity, and the objectives evaluated
/// at the current position.
struct Solution {
    Vector position;
    Vector velocity;
    ObjectiveVector objectives;
};

/// Outcome of comparing two objective vectors under Pareto dominance.
enum class DominanceRelation {
    FirstDominates,
    SecondDominates,
    Incomparable,
    Equal,
};

}  // namespace gmocso

#endif  // GMOCSO_TYPES_HPP
