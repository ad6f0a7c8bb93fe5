#pragma once

#include "persuade/densities/grid_density.hpp"
#include "persuade/densities/parametric_density.hpp"

namespace persuade {

/// Pointwise power d(x)^alpha followed by renormalization. alpha < 1 flattens
/// the density (more polarized), alpha > 1 sharpens it (less polarized).
/// alpha == 0 yields the uniform density; zero values stay zero for alpha > 0.
GridDensity1D polarize(const GridDensity1D& d, double alpha);

/// For a single-peaked Beta(a1, b1) (a1, b1 > 1), the member of the Beta
/// family obtained by the power transform: Beta(1 + alpha(a1-1), 1 + alpha(b1-1)).
ParametricDensity1D beta_polarization_pair(double a1, double b1, double alpha);

}  // namespace persuade
