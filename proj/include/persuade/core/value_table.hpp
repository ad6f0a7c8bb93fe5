#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "persuade/core/beliefs.hpp"
#include "persuade/core/joint_density.hpp"
#include "persuade/densities/grid_density.hpp"

namespace persuade {

/// Sender value v(mu) (mass of supporting receivers) and virtual density
/// h(mu) = v'(mu), tabulated on the uniform posterior grid over [0,1].
class ValueTable {
public:
    /// Throws DomainError unless both columns have the same length >= 5.
    ValueTable(std::vector<double> v, std::vector<double> h);

    std::size_t size() const { return v_.size(); }
    double posterior(std::size_t i) const { return GridDensity1D::node_of(i, v_.size()); }
    std::span<const double> v() const { return v_; }
    std::span<const double> h() const { return h_; }

    /// Linear interpolation of v and h at a posterior in [0,1].
    double value_at(double mu) const;
    double density_at(double mu) const;

private:
    std::vector<double> v_;
    std::vector<double> h_;
};

/// Numerical health of a value table, compared against the invariants a
/// well-formed table satisfies.
struct ValueTableDiagnostics {
    double v_first;            // v(0)
    double v_last;             // v(1)
    double min_h;
    double h_integral;         // trapezoid integral of h
    double max_slope_gap;      // max |h - central difference of v| at interior nodes
    double max_v_decrease;     // largest drop of v between neighbours (0 if monotone)
};

ValueTableDiagnostics diagnose(const ValueTable& vt);

inline constexpr std::size_t kMinValueGrid = 201;

/// Tabulates v by nested quadrature over the joint density and h from the
/// analytic derivative of the support cutoff. n >= 201. Throws
/// ValidationError for a non-normalized joint density and
/// DegenerateInputError when both marginals are point masses.
ValueTable build_value_table(const JointDensityCP& f, Prior p_s,
                             std::size_t n = kDefaultGridNodes);

/// Treats h directly as the virtual density: h is renormalized and v is its
/// cumulative trapezoid integral, so v(1) = 1.
ValueTable value_table_from_virtual_density(const GridDensity1D& h);

/// With every receiver holding the sender's prior, the virtual density is the
/// cost density itself.
GridDensity1D virtual_density_common_prior(const GridDensity1D& costs);

/// Closed-form virtual density when every receiver has cost c, expressed
/// through the prior cutoff p(mu, c). Tabulated on the prior density's grid.
GridDensity1D virtual_density_common_cost(const GridDensity1D& priors, double c, Prior p_s);

}  // namespace persuade
