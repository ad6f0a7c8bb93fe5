#pragma once

#include <cstddef>
#include <vector>

#include "persuade/core/value_table.hpp"

namespace persuade {

struct HullVertex {
    std::size_t index;  // grid node of the vertex
    double mu;
    double value;
};

/// Upper concave envelope of the tabulated value function.
class ConcaveEnvelope {
public:
    ConcaveEnvelope(std::vector<HullVertex> vertices, std::vector<bool> coincident);

    const std::vector<HullVertex>& vertices() const { return vertices_; }
    /// Per grid node: true where the envelope touches the value function.
    const std::vector<bool>& coincident() const { return coincident_; }

    /// Envelope value at mu in [0,1].
    double operator()(double mu) const;

    /// Index k of the hull segment [vertices[k], vertices[k+1]] containing mu.
    std::size_t segment_of(double mu) const;

private:
    std::vector<HullVertex> vertices_;
    std::vector<bool> coincident_;
};

/// Gap below which a grid node counts as touching the envelope.
inline constexpr double kCoincidenceTolerance = 1e-9;

/// Monotone-chain upper hull over the (already sorted) grid, O(n).
ConcaveEnvelope concave_envelope(const ValueTable& vt);

}  // namespace persuade
