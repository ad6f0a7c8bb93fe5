#include "persuade/core/value_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "persuade/error.hpp"
#include "persuade/kernels/value_kernel.hpp"

namespace persuade {

namespace {

double interpolate(std::span<const double> y, double x) {
    const std::size_t n = y.size();
    const double t = std::clamp(x, 0.0, 1.0) * static_cast<double>(n - 1);
    const std::size_t i = std::min(static_cast<std::size_t>(t), n - 2);
    const double w = t - static_cast<double>(i);
    return (1.0 - w) * y[i] + w * y[i + 1];
}

}  // namespace

ValueTable::ValueTable(std::vector<double> v, std::vector<double> h)
    : v_(std::move(v)), h_(std::move(h)) {
    if (v_.size() != h_.size()) throw DomainError("value table columns differ in length");
    if (v_.size() < 5) throw DomainError("value table needs at least 5 nodes");
}

double ValueTable::value_at(double mu) const { return interpolate(v_, mu); }
double ValueTable::density_at(double mu) const { return interpolate(h_, mu); }

ValueTableDiagnostics diagnose(const ValueTable& vt) {
    const auto v = vt.v();
    const auto h = vt.h();
    const std::size_t n = vt.size();
    const double step = 1.0 / static_cast<double>(n - 1);
    ValueTableDiagnostics d{v.front(), v.back(), *std::min_element(h.begin(), h.end()), 0.0, 0.0,
                            0.0};
    for (std::size_t i = 1; i < n; ++i) {
        d.h_integral += 0.5 * step * (h[i - 1] + h[i]);
        d.max_v_decrease = std::max(d.max_v_decrease, v[i - 1] - v[i]);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double slope = (v[i + 1] - v[i - 1]) / (2.0 * step);
        d.max_slope_gap = std::max(d.max_slope_gap, std::abs(h[i] - slope));
    }
    return d;
}

ValueTable build_value_table(const JointDensityCP& f, Prior p_s, std::size_t n) {
    if (n < kMinValueGrid)
        throw DomainError("value grid needs at least " + std::to_string(kMinValueGrid) +
                          " nodes, got " + std::to_string(n));
    auto cols = kernels::value_function_parallel(f, p_s, n);
    return ValueTable(std::move(cols.v), std::move(cols.h));
}

ValueTable value_table_from_virtual_density(const GridDensity1D& h) {
    const GridDensity1D density = normalize(h);
    const auto cum = density.cumulative();
    std::vector<double> v(cum.begin(), cum.end());
    v.back() = 1.0;
    return ValueTable(std::move(v),
                      std::vector<double>(density.values().begin(), density.values().end()));
}

GridDensity1D virtual_density_common_prior(const GridDensity1D& costs) { return costs; }

GridDensity1D virtual_density_common_cost(const GridDensity1D& priors, double c, Prior p_s) {
    const double gamma = odds_ratio(c, p_s);
    return GridDensity1D::tabulate(
        [&](double mu) {
            const double p = cutoff_p(mu, c, p_s);
            const double stretch = 1.0 + (gamma - 1.0) * p;
            return priors(p) * stretch * stretch / gamma;
        },
        priors.size());
}

}  // namespace persuade
