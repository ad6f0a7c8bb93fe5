#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "persuade/core/beliefs.hpp"
#include "persuade/core/value_table.hpp"
#include "persuade/densities/shape.hpp"

namespace persuade {

enum class SolveMethod { Oracle, ClosedFormPeaked, ClosedFormDipped };

std::string_view to_string(SolveMethod method);

/// Which uninformative policy represents "reveal nothing": always send the
/// good message (1,1) or always send the bad one (0,0).
enum class NoInformationConvention { GoodMessage, BadMessage };

/// Optimal two-posterior split of the sender's prior.
struct PersuasionSolution {
    double mu_lo;
    double mu_hi;
    double weight_hi;  // probability of the high posterior
    Policy policy;
    double value;
    std::optional<double> threshold;  // tangency posterior of the closed forms
    ShapeClass shape;
    SolveMethod method;
};

/// Posteriors, weight and value induced by a policy at the sender's prior.
/// A message the policy never sends takes the off-path posterior (1 for the
/// good message, 0 for the bad one) and carries zero weight.
PersuasionSolution solution_from_policy(const ValueTable& vt, Prior p_s, const Policy& policy,
                                        SolveMethod method, ShapeClass shape,
                                        std::optional<double> threshold = {});

/// General solver: splits p_s between the endpoints of the envelope segment
/// above it. When the envelope touches v at p_s no information is revealed,
/// represented according to `convention`.
PersuasionSolution solve_oracle(const ValueTable& vt, Prior p_s,
                                NoInformationConvention convention =
                                    NoInformationConvention::GoodMessage);

/// h(mu) * mu - v(mu) at every node: the intercept gap of the tangent line at
/// mu, evaluated at mu = 0.
std::vector<double> tangency_gap_peaked(const ValueTable& vt);

/// h(mu) * (1 - mu) - (1 - v(mu)) at every node: the gap of the tangent line
/// at mu, evaluated at mu = 1.
std::vector<double> tangency_gap_dipped(const ValueTable& vt);

inline constexpr double kTangencyTolerance = 1e-8;

/// Right end of the set where the peaked tangency gap is nonnegative; 1 when
/// the gap never turns negative (including a flat h). Throws
/// PreconditionViolation unless h is weakly single-peaked.
double peaked_threshold(const ValueTable& vt);

/// Right end of the set where the dipped tangency gap is nonnegative; 0 when
/// the gap is never positive (including a flat h). Throws
/// PreconditionViolation unless h is weakly single-dipped.
double dipped_threshold(const ValueTable& vt);

/// The bad message reveals the bad state and the good message leaves the
/// representative receiver at the threshold; no information when
/// p_s >= threshold. Throws DegenerateInputError for threshold 0.
Policy peaked_policy(double threshold, Prior p_s);

/// The good message reveals the good state and the bad message leaves the
/// representative receiver at the threshold; no information when
/// p_s <= threshold.
Policy dipped_policy(double threshold, Prior p_s);

struct SolveOptions {
    double policy_tolerance = 2e-3;
    double value_tolerance = 1e-4;
};

/// Classifies h and applies the matching closed form (the envelope solver
/// when h is neither peaked nor dipped). The closed form is always checked
/// against the envelope solver; a disagreement beyond the tolerances throws
/// ConsistencyError. For a flat h only values are compared, since every
/// policy is optimal.
PersuasionSolution solve(const ValueTable& vt, Prior p_s, const SolveOptions& options = {});

}  // namespace persuade
