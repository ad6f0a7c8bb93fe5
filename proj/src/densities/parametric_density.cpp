#include "persuade/densities/parametric_density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "persuade/error.hpp"

namespace persuade {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double piecewise_value(const std::vector<Knot>& knots, double x) {
    auto it = std::upper_bound(knots.begin(), knots.end(), x,
                               [](double v, const Knot& k) { return v < k.x; });
    if (it == knots.begin()) return knots.front().y;
    if (it == knots.end()) return knots.back().y;
    const Knot& hi = *it;
    const Knot& lo = *(it - 1);
    const double width = hi.x - lo.x;
    if (width <= 0.0) return hi.y;
    const double t = (x - lo.x) / width;
    return (1.0 - t) * lo.y + t * hi.y;
}

}  // namespace

ParametricDensity1D ParametricDensity1D::beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("Beta parameters must be positive and finite");
    const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    return ParametricDensity1D(BetaFamily{a, b}, std::exp(-log_beta));
}

ParametricDensity1D ParametricDensity1D::truncated_normal(double mean, double variance) {
    if (!(variance > 0.0) || !std::isfinite(variance) || !std::isfinite(mean))
        throw DomainError("truncated normal needs a positive finite variance");
    const double sd = std::sqrt(variance);
    const double mass = standard_normal_cdf((1.0 - mean) / sd) - standard_normal_cdf(-mean / sd);
    if (!(mass > 0.0))
        throw DegenerateInputError("truncated normal has no mass on [0,1]");
    return ParametricDensity1D(TruncatedNormalFamily{mean, variance},
                               1.0 / (sd * std::sqrt(2.0 * std::numbers::pi) * mass));
}

ParametricDensity1D ParametricDensity1D::uniform() {
    return ParametricDensity1D(UniformFamily{}, 1.0);
}

ParametricDensity1D ParametricDensity1D::piecewise_linear(std::vector<Knot> knots) {
    if (knots.size() < 2) throw DomainError("piecewise-linear density needs at least 2 knots");
    if (knots.front().x != 0.0 || knots.back().x != 1.0)
        throw DomainError("piecewise-linear knots must start at 0 and end at 1");
    double mass = 0.0;
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!(knots[i].y >= 0.0) || !std::isfinite(knots[i].y))
            throw DomainError("piecewise-linear knot values must be nonnegative");
        if (i > 0) {
            if (knots[i].x < knots[i - 1].x) throw DomainError("piecewise-linear knots unsorted");
            mass += 0.5 * (knots[i].x - knots[i - 1].x) * (knots[i].y + knots[i - 1].y);
        }
    }
    if (!(mass > 0.0)) throw DegenerateInputError("piecewise-linear density has zero mass");
    return ParametricDensity1D(PiecewiseLinearFamily{std::move(knots)}, 1.0 / mass);
}

double ParametricDensity1D::operator()(double x) const {
    return std::visit(
        Overloaded{
            [&](const BetaFamily& f) {
                return scale_ * std::pow(x, f.a - 1.0) * std::pow(1.0 - x, f.b - 1.0);
            },
            [&](const TruncatedNormalFamily& f) {
                const double z = (x - f.mean);
                return scale_ * std::exp(-0.5 * z * z / f.variance);
            },
            [&](const UniformFamily&) { return 1.0; },
            [&](const PiecewiseLinearFamily& f) { return scale_ * piecewise_value(f.knots, x); },
        },
        family_);
}

GridDensity1D ParametricDensity1D::tabulate(std::size_t n) const {
    double lo = 0.0;
    double hi = 1.0;
    if (const auto* b = std::get_if<BetaFamily>(&family_)) {
        if (b->a < 1.0) lo = kBetaEndpointClip;
        if (b->b < 1.0) hi = 1.0 - kBetaEndpointClip;
    }
    auto grid = GridDensity1D::tabulate(
        [&](double x) { return (*this)(std::clamp(x, lo, hi)); }, n);
    return normalize(grid);
}

double eval_density(const ParametricDensity1D& d, double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("density evaluated outside [0,1]");
    return d(x);
}

}  // namespace persuade
