#include "persuade/densities/shape.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "persuade/error.hpp"

namespace persuade {

namespace {

constexpr std::array<std::pair<ShapeTag, std::string_view>, 6> kNames{{
    {ShapeTag::SinglePeaked, "SinglePeaked"},
    {ShapeTag::SingleDipped, "SingleDipped"},
    {ShapeTag::MonotoneIncreasing, "MonotoneIncreasing"},
    {ShapeTag::MonotoneDecreasing, "MonotoneDecreasing"},
    {ShapeTag::Flat, "Flat"},
    {ShapeTag::Neither, "Neither"},
}};

}  // namespace

std::string_view to_string(ShapeTag tag) {
    for (const auto& [t, name] : kNames)
        if (t == tag) return name;
    return "Neither";
}

std::optional<ShapeTag> shape_from_string(std::string_view name) {
    for (const auto& [t, n] : kNames)
        if (n == name) return t;
    return std::nullopt;
}

bool weakly_single_peaked(ShapeTag tag) {
    return tag != ShapeTag::SingleDipped && tag != ShapeTag::Neither;
}

bool weakly_single_dipped(ShapeTag tag) {
    return tag != ShapeTag::SinglePeaked && tag != ShapeTag::Neither;
}

ShapeClass classify_shape(std::span<const double> values, std::optional<double> tol) {
    const std::size_t n = values.size();
    if (n < 5)
        throw PreconditionViolation("shape classification needs at least 5 nodes, got " +
                                    std::to_string(n));
    const double vmax = *std::max_element(values.begin(), values.end());
    const double zero_band = tol.value_or(kShapeRelativeTolerance * vmax);
    const double inv_two_h = 0.5 * static_cast<double>(n - 1);

    // Run-length encode the nonzero derivative signs.
    int first_sign = 0;
    int changes = 0;
    int last_sign = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double d = (values[i + 1] - values[i - 1]) * inv_two_h;
        int s = 0;
        if (d > zero_band) s = 1;
        else if (d < -zero_band) s = -1;
        if (s == 0) continue;
        if (last_sign == 0) first_sign = s;
        else if (s != last_sign) ++changes;
        last_sign = s;
    }

    auto node = [n](std::size_t i) { return GridDensity1D::node_of(i, n); };
    if (first_sign == 0) return {ShapeTag::Flat, std::nullopt};
    if (changes == 0) {
        return first_sign > 0 ? ShapeClass{ShapeTag::MonotoneIncreasing, 1.0}
                              : ShapeClass{ShapeTag::MonotoneDecreasing, 0.0};
    }
    if (changes == 1) {
        if (first_sign > 0) {
            auto it = std::max_element(values.begin(), values.end());
            return {ShapeTag::SinglePeaked, node(static_cast<std::size_t>(it - values.begin()))};
        }
        auto it = std::min_element(values.begin(), values.end());
        return {ShapeTag::SingleDipped, node(static_cast<std::size_t>(it - values.begin()))};
    }
    return {ShapeTag::Neither, std::nullopt};
}

ShapeClass classify_shape(const GridDensity1D& d, std::optional<double> tol) {
    return classify_shape(d.values(), tol);
}

}  // namespace persuade
