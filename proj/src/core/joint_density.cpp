#include "persuade/core/joint_density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "persuade/error.hpp"

namespace persuade {

namespace {

void check_marginal(const Marginal& m, const char* axis) {
    if (const auto* g = std::get_if<GridDensity1D>(&m)) {
        if (!g->is_normalized(1e-8))
            throw ValidationError(std::string(axis) + " marginal is not normalized");
    } else {
        const double at = std::get<PointMass>(m).at;
        if (!(at >= 0.0 && at <= 1.0))
            throw DomainError(std::string(axis) + " point mass must lie in [0,1]");
    }
}

double marginal_mass(const Marginal& m) {
    if (const auto* g = std::get_if<GridDensity1D>(&m)) return g->integral();
    return 1.0;
}

}  // namespace

std::vector<double> trapezoid_weights(std::size_t n) {
    const double h = 1.0 / static_cast<double>(n - 1);
    std::vector<double> w(n, h);
    w.front() = w.back() = 0.5 * h;
    return w;
}

JointDensityCP JointDensityCP::product(Marginal cost, Marginal prior) {
    check_marginal(cost, "cost");
    check_marginal(prior, "prior");
    return JointDensityCP(Product{std::move(cost), std::move(prior)});
}

JointDensityCP JointDensityCP::grid(std::size_t n, std::vector<double> values) {
    if (n < 3) throw DomainError("joint grid needs at least 3 nodes per axis");
    if (values.size() != n * n)
        throw ValidationError("joint grid expects " + std::to_string(n * n) + " values, got " +
                              std::to_string(values.size()));
    std::vector<GridDensity1D> rows;
    rows.reserve(n);
    std::vector<double> masses(n);
    for (std::size_t j = 0; j < n; ++j) {
        rows.emplace_back(std::vector<double>(values.begin() + j * n, values.begin() + (j + 1) * n));
        masses[j] = rows.back().integral();
    }
    GridDensity1D row_mass(std::move(masses));
    return JointDensityCP(Full{n, std::move(rows), std::move(row_mass)});
}

const Marginal& JointDensityCP::cost_marginal() const {
    if (!is_product()) throw PreconditionViolation("full-grid joint density has no cost marginal");
    return std::get<Product>(repr_).cost;
}

const Marginal& JointDensityCP::prior_marginal() const {
    if (!is_product()) throw PreconditionViolation("full-grid joint density has no prior marginal");
    return std::get<Product>(repr_).prior;
}

double JointDensityCP::operator()(double c, double p) const {
    if (const auto* prod = std::get_if<Product>(&repr_)) {
        const auto* fc = std::get_if<GridDensity1D>(&prod->cost);
        const auto* fp = std::get_if<GridDensity1D>(&prod->prior);
        if (!fc || !fp) throw DegenerateInputError("point-mass marginal has no finite density");
        return (*fc)(c) * (*fp)(p);
    }
    const auto& full = std::get<Full>(repr_);
    const double tp = std::clamp(p, 0.0, 1.0) * static_cast<double>(full.n - 1);
    std::size_t j = std::min(static_cast<std::size_t>(tp), full.n - 2);
    const double w = tp - static_cast<double>(j);
    return (1.0 - w) * full.rows[j](c) + w * full.rows[j + 1](c);
}

double JointDensityCP::total_mass() const {
    if (const auto* prod = std::get_if<Product>(&repr_))
        return marginal_mass(prod->cost) * marginal_mass(prod->prior);
    return std::get<Full>(repr_).row_mass.integral();
}

bool JointDensityCP::is_normalized(double tol) const {
    return std::abs(total_mass() - 1.0) <= tol;
}

std::vector<PriorRow> JointDensityCP::prior_rows() const {
    std::vector<PriorRow> rows;
    if (const auto* prod = std::get_if<Product>(&repr_)) {
        const auto* costs = std::get_if<GridDensity1D>(&prod->cost);
        if (!costs) return rows;
        if (const auto* pm = std::get_if<PointMass>(&prod->prior)) {
            rows.push_back({pm->at, 1.0, costs});
            return rows;
        }
        const auto& priors = std::get<GridDensity1D>(prod->prior);
        const auto w = trapezoid_weights(priors.size());
        for (std::size_t j = 0; j < priors.size(); ++j) {
            const double weight = w[j] * priors.value(j);
            if (weight > 0.0) rows.push_back({priors.node(j), weight, costs});
        }
        return rows;
    }
    const auto& full = std::get<Full>(repr_);
    const auto w = trapezoid_weights(full.n);
    for (std::size_t j = 0; j < full.n; ++j)
        if (full.row_mass.value(j) > 0.0)
            rows.push_back({GridDensity1D::node_of(j, full.n), w[j], &full.rows[j]});
    return rows;
}

const GridDensity1D& JointDensityCP::prior_row_masses() const {
    if (is_product()) throw PreconditionViolation("product density has no row-mass table");
    return std::get<Full>(repr_).row_mass;
}

const GridDensity1D& JointDensityCP::grid_row(std::size_t j) const {
    if (is_product()) throw PreconditionViolation("product density has no joint grid");
    return std::get<Full>(repr_).rows.at(j);
}

std::size_t JointDensityCP::grid_size() const {
    if (is_product()) throw PreconditionViolation("product density has no joint grid");
    return std::get<Full>(repr_).n;
}

}  // namespace persuade
