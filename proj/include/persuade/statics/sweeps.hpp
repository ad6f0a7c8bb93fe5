#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "persuade/concav/solver.hpp"
#include "persuade/core/beliefs.hpp"
#include "persuade/densities/grid_density.hpp"
#include "persuade/densities/shape.hpp"

namespace persuade {

/// Media bias: the probability of sending the good message in the bad state.
/// Throws NotApplicableError for solutions outside the single-peaked case.
double bias_of(const PersuasionSolution& sol);

struct SweepRecord {
    double param;  // member index, or alpha for the polarization sweep
    std::optional<double> threshold;
    Policy policy;
    double value;
    ShapeClass shape;
};

/// Records in parameter order. `violations` lists every index k whose record
/// breaks the expected direction relative to record k-1.
struct SweepResult {
    std::vector<SweepRecord> records;
    std::vector<std::size_t> violations;
    std::vector<std::string> warnings;

    bool monotone() const { return violations.empty(); }
};

/// Ties within this slack count as weakly monotone.
inline constexpr double kSweepTieSlack = 1e-9;

/// Virtual densities ascending in the reversed hazard rate order, each weakly
/// single-peaked; bias is expected to be nonincreasing along the chain.
/// Throws PreconditionViolation when a member is not single-peaked or two
/// neighbours are not ordered.
SweepResult popularity_sweep(const std::vector<GridDensity1D>& virtual_densities, Prior p_s);

/// Densities of priors ascending in the hazard rate order, every receiver with
/// cost c; bias is expected to be nondecreasing along the chain. A member that
/// fails the peakedness condition only adds a warning.
SweepResult prior_shift_sweep(const std::vector<GridDensity1D>& priors, double c, Prior p_s);

/// Powers of a single-peaked virtual density for ascending alphas (larger
/// alpha is less polarized); the threshold is expected to be nonincreasing and
/// bias nondecreasing in alpha.
SweepResult polarization_sweep(const GridDensity1D& base, const std::vector<double>& alphas,
                               Prior p_s);

}  // namespace persuade
