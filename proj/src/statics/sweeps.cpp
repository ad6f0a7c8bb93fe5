#include "persuade/statics/sweeps.hpp"

#include <algorithm>
#include <exception>
#include <fmt/format.h>

#include "persuade/core/value_table.hpp"
#include "persuade/densities/orders.hpp"
#include "persuade/densities/polarization.hpp"
#include "persuade/error.hpp"
#include "persuade/statics/conditions.hpp"

namespace persuade {

namespace {

SweepRecord record_of(double param, const PersuasionSolution& sol) {
    return {param, sol.threshold, sol.policy, sol.value, sol.shape};
}

// Solves every member in parallel; the first failure (in member order) is
// rethrown after all members finish.
template <class Solve>
std::vector<SweepRecord> solve_members(std::size_t count, Solve&& solve_one) {
    std::vector<SweepRecord> records(count);
    std::vector<std::exception_ptr> failures(count);
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            records[k] = solve_one(k);
        } catch (...) {
            failures[k] = std::current_exception();
        }
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    return records;
}

// direction +1: bias must not decrease along the records; -1: must not increase.
std::vector<std::size_t> bias_violations(const std::vector<SweepRecord>& records, int direction) {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k < records.size(); ++k) {
        const double step = records[k].policy.good_if_bad - records[k - 1].policy.good_if_bad;
        if (direction * step < -kSweepTieSlack) out.push_back(k);
    }
    return out;
}

void require_peaked(const GridDensity1D& h, std::size_t k, const char* what) {
    const ShapeTag tag = classify_shape(h).tag;
    if (!weakly_single_peaked(tag))
        throw PreconditionViolation(fmt::format("{} member {} is {}, not single-peaked", what, k,
                                                to_string(tag)));
}

void require_ascending(OrderVerdict v, std::size_t k, const char* order) {
    if (v != OrderVerdict::D2Larger && v != OrderVerdict::Equal)
        throw PreconditionViolation(fmt::format(
            "members {} and {} are not ascending in the {} order ({})", k - 1, k, order,
            to_string(v)));
}

}  // namespace

double bias_of(const PersuasionSolution& sol) {
    if (sol.method == SolveMethod::ClosedFormDipped || !weakly_single_peaked(sol.shape.tag))
        throw NotApplicableError("bias is defined for single-peaked virtual densities only");
    return sol.policy.good_if_bad;
}

SweepResult popularity_sweep(const std::vector<GridDensity1D>& virtual_densities, Prior p_s) {
    std::vector<GridDensity1D> chain;
    chain.reserve(virtual_densities.size());
    for (const auto& d : virtual_densities) chain.push_back(normalize(d));
    for (std::size_t k = 0; k < chain.size(); ++k) {
        require_peaked(chain[k], k, "virtual density");
        if (k > 0)
            require_ascending(reversed_hazard_compare(chain[k - 1], chain[k]), k,
                              "reversed hazard rate");
    }
    SweepResult result;
    result.records = solve_members(chain.size(), [&](std::size_t k) {
        return record_of(static_cast<double>(k),
                         solve(value_table_from_virtual_density(chain[k]), p_s));
    });
    result.violations = bias_violations(result.records, -1);
    return result;
}

SweepResult prior_shift_sweep(const std::vector<GridDensity1D>& priors, double c, Prior p_s) {
    SweepResult result;
    for (std::size_t k = 0; k < priors.size(); ++k) {
        if (k > 0) require_ascending(hazard_compare(priors[k - 1], priors[k]), k, "hazard rate");
        const ConditionReport report = check_peakedness_condition(priors[k], c, p_s);
        if (!report.satisfied)
            result.warnings.push_back(fmt::format(
                "member {}: peakedness condition fails (sup {:.6g} vs bound {:.6g})", k,
                report.lhs, report.rhs));
    }
    result.records = solve_members(priors.size(), [&](std::size_t k) {
        const GridDensity1D h = virtual_density_common_cost(priors[k], c, p_s);
        return record_of(static_cast<double>(k), solve(value_table_from_virtual_density(h), p_s));
    });
    result.violations = bias_violations(result.records, +1);
    return result;
}

SweepResult polarization_sweep(const GridDensity1D& base, const std::vector<double>& alphas,
                               Prior p_s) {
    for (std::size_t k = 1; k < alphas.size(); ++k)
        if (!(alphas[k] > alphas[k - 1]))
            throw PreconditionViolation("polarization exponents must be strictly ascending");
    for (double a : alphas)
        if (!(a > 0.0)) throw DomainError("polarization exponents must be positive");
    require_peaked(base, 0, "base density");

    std::vector<GridDensity1D> members;
    members.reserve(alphas.size());
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        members.push_back(polarize(base, alphas[k]));
        require_peaked(members.back(), k, "polarized density");
    }
    SweepResult result;
    result.records = solve_members(members.size(), [&](std::size_t k) {
        return record_of(alphas[k], solve(value_table_from_virtual_density(members[k]), p_s));
    });
    result.violations = bias_violations(result.records, +1);
    for (std::size_t k = 1; k < result.records.size(); ++k) {
        const double rise = result.records[k].threshold.value_or(1.0) -
                            result.records[k - 1].threshold.value_or(1.0);
        if (rise > kSweepTieSlack &&
            (result.violations.empty() || result.violations.back() != k))
            result.violations.push_back(k);
    }
    std::sort(result.violations.begin(), result.violations.end());
    result.violations.erase(std::unique(result.violations.begin(), result.violations.end()),
                            result.violations.end());
    return result;
}

}  // namespace persuade
