#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace persuade {

inline constexpr std::size_t kDefaultGridNodes = 2001;

/// Nonnegative density tabulated on the uniform grid x_i = i/(n-1) over [0,1].
///
/// Between nodes the density is the linear interpolant of the node values, and
/// every integral (total mass, CDF) is the exact integral of that interpolant,
/// which coincides with the trapezoid rule at the nodes. Values need not
/// integrate to one; use normalize() to obtain a probability density.
class GridDensity1D {
public:
    /// Throws DomainError when n < 3 or any value is negative or non-finite.
    explicit GridDensity1D(std::vector<double> values);

    static GridDensity1D uniform(std::size_t n = kDefaultGridNodes);

    /// Samples `f` at every node; the result is not normalized.
    template <class F>
    static GridDensity1D tabulate(F&& f, std::size_t n = kDefaultGridNodes) {
        std::vector<double> values(n);
        for (std::size_t i = 0; i < n; ++i)
            values[i] = f(node_of(i, n));
        return GridDensity1D(std::move(values));
    }

    static double node_of(std::size_t i, std::size_t n) {
        return i + 1 == n ? 1.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    }

    std::size_t size() const { return values_.size(); }
    double spacing() const { return 1.0 / static_cast<double>(values_.size() - 1); }
    double node(std::size_t i) const { return node_of(i, values_.size()); }
    std::span<const double> values() const { return values_; }
    double value(std::size_t i) const { return values_[i]; }

    /// Linear interpolation; x is clamped into [0,1].
    double operator()(double x) const;

    /// Trapezoid integral over [0,1].
    double integral() const { return cumulative_.back(); }

    /// Cumulative trapezoid integral at each node (first entry 0).
    std::span<const double> cumulative() const { return cumulative_; }

    /// Tail mass from each node to 1, accumulated right to left so that it
    /// stays accurate where the CDF is close to the total.
    std::vector<double> tail() const;

    /// Exact integral of the interpolant over [0, x].
    double cdf_at(double x) const;

    /// Inverse of cdf_at for a fraction u in [0,1] of the total mass.
    double quantile(double u) const;

    bool is_normalized(double tol = 1e-9) const;

private:
    std::vector<double> values_;
    std::vector<double> cumulative_;
};

/// Density value at x; throws DomainError for x outside [0,1].
double eval_density(const GridDensity1D& d, double x);

/// Rescales to unit trapezoid mass. Throws DegenerateInputError when the
/// total mass is zero.
GridDensity1D normalize(const GridDensity1D& d);

}  // namespace persuade
