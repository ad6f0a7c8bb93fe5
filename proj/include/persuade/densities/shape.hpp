#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "persuade/densities/grid_density.hpp"

namespace persuade {

enum class ShapeTag {
    SinglePeaked,
    SingleDipped,
    MonotoneIncreasing,
    MonotoneDecreasing,
    Flat,
    Neither,
};

struct ShapeClass {
    ShapeTag tag = ShapeTag::Neither;
    std::optional<double> location;  // peak or dip node, when there is one
};

std::string_view to_string(ShapeTag tag);
std::optional<ShapeTag> shape_from_string(std::string_view name);

// Monotone and flat densities count as weakly peaked and weakly dipped.
bool weakly_single_peaked(ShapeTag tag);
bool weakly_single_dipped(ShapeTag tag);

/// Relative derivative tolerance used when none is given: tol = 1e-7 * max value.
inline constexpr double kShapeRelativeTolerance = 1e-7;

/// Classifies tabulated values on the uniform grid over [0,1] from the signs of
/// central differences at interior nodes; |derivative| <= tol counts as zero.
/// Needs at least 5 nodes.
ShapeClass classify_shape(std::span<const double> values, std::optional<double> tol = {});
ShapeClass classify_shape(const GridDensity1D& d, std::optional<double> tol = {});

}  // namespace persuade
