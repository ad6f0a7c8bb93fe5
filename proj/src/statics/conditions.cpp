#include "persuade/statics/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "persuade/error.hpp"

namespace persuade {

namespace {

// Second central difference of log f at nodes 2..n-3; the nodes next to the
// boundary are excluded from the stencil centres.
std::vector<double> log_curvature(const GridDensity1D& d) {
    const std::size_t n = d.size();
    if (n < 5) throw DomainError("log-curvature needs at least 5 nodes");
    std::vector<double> logs(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(d.value(i) > 0.0))
            throw DomainError("density of priors vanishes at an interior node; log is undefined");
        logs[i] = std::log(d.value(i));
    }
    const double inv_h2 = 1.0 / (d.spacing() * d.spacing());
    std::vector<double> out;
    out.reserve(n - 4);
    for (std::size_t i = 2; i + 2 < n; ++i)
        out.push_back((logs[i + 1] - 2.0 * logs[i] + logs[i - 1]) * inv_h2);
    return out;
}

}  // namespace

std::string_view to_string(ConditionKind kind) {
    return kind == ConditionKind::Peakedness ? "peakedness" : "dippedness";
}

ConditionReport check_peakedness_condition(const GridDensity1D& priors, double c, Prior p_s) {
    const double gamma = odds_ratio(c, p_s);
    const auto curv = log_curvature(priors);
    const double sup = *std::max_element(curv.begin(), curv.end());
    const double rhs = 2.0 * (gamma - 1.0) * (gamma - 1.0) * std::min(1.0, 1.0 / (gamma * gamma));
    return {ConditionKind::Peakedness, gamma, sup, rhs, sup < rhs - kConditionMargin};
}

ConditionReport check_dippedness_condition(const GridDensity1D& priors, double c, Prior p_s) {
    const double gamma = odds_ratio(c, p_s);
    const auto curv = log_curvature(priors);
    const double inf = *std::min_element(curv.begin(), curv.end());
    const double rhs = 2.0 * (gamma - 1.0) * (gamma - 1.0) * std::max(1.0, 1.0 / (gamma * gamma));
    return {ConditionKind::Dippedness, gamma, inf, rhs, inf > rhs + kConditionMargin};
}

}  // namespace persuade
