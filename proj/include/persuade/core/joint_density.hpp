#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "persuade/densities/grid_density.hpp"

namespace persuade {

/// Degenerate marginal: every receiver shares this cost (or prior).
struct PointMass {
    double at;
};

using Marginal = std::variant<GridDensity1D, PointMass>;

/// One prior level of the population together with the (unnormalized) density
/// of costs at that level and its quadrature weight. A product density yields
/// rows that share the cost marginal; a full-grid density yields one row per
/// grid line.
struct PriorRow {
    double prior;
    double weight;
    const GridDensity1D* costs;
};

/// Joint density f(c, p) of receiver costs and priors.
class JointDensityCP {
public:
    /// Product of two marginals; grid marginals must be normalized
    /// (ValidationError otherwise). Point masses must lie in [0,1].
    static JointDensityCP product(Marginal cost, Marginal prior);

    /// Full tabulation on an n x n grid; values[j * n + i] = f(c_i, p_j).
    /// Bilinear interpolation between nodes. Not normalized automatically.
    static JointDensityCP grid(std::size_t n, std::vector<double> values);

    bool is_product() const { return std::holds_alternative<Product>(repr_); }

    /// Only valid for product densities.
    const Marginal& cost_marginal() const;
    const Marginal& prior_marginal() const;

    /// Density value at (c, p); throws DegenerateInputError when a marginal is
    /// a point mass (no finite density exists).
    double operator()(double c, double p) const;

    /// Double trapezoid integral over the unit square (point masses count 1).
    double total_mass() const;
    bool is_normalized(double tol = 1e-8) const;

    /// Rows over the prior axis; empty when the cost marginal is a point mass.
    /// The rows point into this object and are invalidated when it is moved
    /// or destroyed.
    std::vector<PriorRow> prior_rows() const;

    /// Marginal density of priors on the full grid (full-grid densities only).
    const GridDensity1D& prior_row_masses() const;

    /// Cost density along prior grid line j (full-grid densities only).
    const GridDensity1D& grid_row(std::size_t j) const;

    /// Grid resolution of a full-grid density.
    std::size_t grid_size() const;

private:
    struct Product {
        Marginal cost;
        Marginal prior;
    };
    struct Full {
        std::size_t n;
        std::vector<GridDensity1D> rows;
        GridDensity1D row_mass;
    };

    explicit JointDensityCP(std::variant<Product, Full> repr) : repr_(std::move(repr)) {}

    std::variant<Product, Full> repr_;
};

/// Trapezoid weights on the uniform grid with n nodes.
std::vector<double> trapezoid_weights(std::size_t n);

}  // namespace persuade
