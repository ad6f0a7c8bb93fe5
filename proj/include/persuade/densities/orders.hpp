#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "persuade/densities/grid_density.hpp"

namespace persuade {

enum class OrderVerdict { D1Larger, D2Larger, Equal, Incomparable };

std::string_view to_string(OrderVerdict v);

inline constexpr double kOrderTolerance = 1e-9;
// Nodes whose rate denominator falls below this are skipped.
inline constexpr double kOrderDenominatorFloor = 1e-12;

/// f/F at each node, nullopt where F < kOrderDenominatorFloor.
std::vector<std::optional<double>> reversed_hazard_rate(const GridDensity1D& d);

/// f/(1-F) at each node, nullopt where 1-F < kOrderDenominatorFloor.
std::vector<std::optional<double>> hazard_rate(const GridDensity1D& d);

/// The larger distribution has the larger reversed hazard rate f/F everywhere.
/// Both densities must be normalized and share a grid.
OrderVerdict reversed_hazard_compare(const GridDensity1D& d1, const GridDensity1D& d2,
                                     double tol = kOrderTolerance);

/// The larger distribution has the smaller hazard rate f/(1-F) everywhere.
OrderVerdict hazard_compare(const GridDensity1D& d1, const GridDensity1D& d2,
                            double tol = kOrderTolerance);

}  // namespace persuade
