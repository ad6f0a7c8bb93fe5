#pragma once

#include <string_view>

#include "persuade/core/beliefs.hpp"
#include "persuade/densities/grid_density.hpp"

namespace persuade {

enum class ConditionKind { Peakedness, Dippedness };

std::string_view to_string(ConditionKind kind);

/// Sufficient condition on the density of priors, for a population with a
/// common cost, under which the virtual density is single-peaked (or
/// single-dipped). `lhs` is the sup (peakedness) or inf (dippedness) of the
/// second derivative of log f_p over the interior grid.
struct ConditionReport {
    ConditionKind kind;
    double gamma;
    double lhs;
    double rhs;
    bool satisfied;
};

/// Strict inequalities must hold by at least this margin, so that rounding in
/// gamma near 1 or in the curvature stencil cannot decide them.
inline constexpr double kConditionMargin = 1e-7;

/// sup (log f_p)'' < 2 (gamma - 1)^2 min(1, 1/gamma^2).
/// Throws DomainError when f_p vanishes at an interior node.
ConditionReport check_peakedness_condition(const GridDensity1D& priors, double c, Prior p_s);

/// inf (log f_p)'' > 2 (gamma - 1)^2 max(1, 1/gamma^2).
ConditionReport check_dippedness_condition(const GridDensity1D& priors, double c, Prior p_s);

}  // namespace persuade
