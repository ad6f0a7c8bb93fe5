#include "persuade/densities/polarization.hpp"

#include <cmath>

#include "persuade/error.hpp"

namespace persuade {

GridDensity1D polarize(const GridDensity1D& d, double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw DomainError("polarization exponent must be a finite value >= 0");
    if (alpha == 0.0) return GridDensity1D::uniform(d.size());
    std::vector<double> values(d.values().begin(), d.values().end());
    if (alpha != 1.0)
        for (double& v : values) v = std::pow(v, alpha);
    return normalize(GridDensity1D(std::move(values)));
}

ParametricDensity1D beta_polarization_pair(double a1, double b1, double alpha) {
    if (!(a1 > 1.0) || !(b1 > 1.0))
        throw DomainError("polarization pair needs a single-peaked Beta (a, b > 1)");
    if (!(alpha >= 0.0)) throw DomainError("polarization exponent must be >= 0");
    const double a2 = 1.0 + alpha * (a1 - 1.0);
    const double b2 = 1.0 + alpha * (b1 - 1.0);
    if (!(a2 > 0.0) || !(b2 > 0.0)) throw DomainError("polarized Beta parameters not positive");
    return ParametricDensity1D::beta(a2, b2);
}

}  // namespace persuade
