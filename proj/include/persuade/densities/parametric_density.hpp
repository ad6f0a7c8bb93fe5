#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "persuade/densities/grid_density.hpp"

namespace persuade {

struct BetaFamily {
    double a;
    double b;
};

/// Normal(mean, variance) truncated to [0,1].
struct TruncatedNormalFamily {
    double mean;
    double variance;
};

struct UniformFamily {};

struct Knot {
    double x;
    double y;
};

/// Piecewise-linear density through the knots, rescaled to unit mass.
/// Knots are sorted by x, start at 0 and end at 1.
struct PiecewiseLinearFamily {
    std::vector<Knot> knots;
};

using DensityFamily =
    std::variant<BetaFamily, TruncatedNormalFamily, UniformFamily, PiecewiseLinearFamily>;

/// Half-width of the endpoint clip used when tabulating Beta densities that
/// diverge at 0 or 1.
inline constexpr double kBetaEndpointClip = 1e-6;

class ParametricDensity1D {
public:
    static ParametricDensity1D beta(double a, double b);
    static ParametricDensity1D truncated_normal(double mean, double variance);
    static ParametricDensity1D uniform();
    static ParametricDensity1D piecewise_linear(std::vector<Knot> knots);

    const DensityFamily& family() const { return family_; }

    /// Exact density at x in [0,1]; +inf at an endpoint where a Beta diverges.
    double operator()(double x) const;

    /// Tabulates on n nodes and renormalizes with the trapezoid rule. Beta
    /// densities with a < 1 (b < 1) are evaluated at kBetaEndpointClip
    /// (1 - kBetaEndpointClip) instead of the divergent endpoint.
    GridDensity1D tabulate(std::size_t n = kDefaultGridNodes) const;

private:
    explicit ParametricDensity1D(DensityFamily family, double scale)
        : family_(std::move(family)), scale_(scale) {}

    DensityFamily family_;
    double scale_;  // multiplicative normalizer
};

/// Throws DomainError for x outside [0,1].
double eval_density(const ParametricDensity1D& d, double x);

}  // namespace persuade
