#pragma once

#include <cstddef>

#include "json.hpp"

#include "persuade/core/joint_density.hpp"
#include "persuade/densities/grid_density.hpp"

namespace persuade::io {

/// Builds a normalized density on n nodes from a JSON spec:
///   {"family": "beta", "a": 2, "b": 2}
///   {"family": "truncnormal", "mean": 0.5, "var": 0.04}   ("variance" also accepted)
///   {"family": "uniform"}
///   {"family": "piecewise", "knots": [[0, 1], [0.5, 2], [1, 1]]}
///   {"family": "grid", "values": [...]}      (resampled linearly onto n nodes)
///   {"family": "mixture", "components": [{"weight": 0.3, ...spec}, ...]}
///   {"family": "polarized", "base": spec, "alpha": 2}
/// Throws ValidationError for malformed specs.
GridDensity1D density_from_json(const nlohmann::json& spec, std::size_t n);

/// A density spec or {"family": "point", "at": x}.
Marginal marginal_from_json(const nlohmann::json& spec, std::size_t n);

/// {"type": "product", "cost": spec, "prior": spec} or
/// {"type": "grid", "n": m, "values": [m*m values, rows indexed by prior],
///  "normalize": false}.
JointDensityCP joint_from_json(const nlohmann::json& spec, std::size_t n);

}  // namespace persuade::io
