#include "persuade/densities/grid_density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "persuade/error.hpp"

namespace persuade {

namespace {

struct Cell {
    std::size_t index;
    double frac;
};

Cell locate(double x, std::size_t n) {
    x = std::clamp(x, 0.0, 1.0);
    const double t = x * static_cast<double>(n - 1);
    auto i = static_cast<std::size_t>(t);
    if (i >= n - 1) return {n - 2, 1.0};
    return {i, t - static_cast<double>(i)};
}

}  // namespace

GridDensity1D::GridDensity1D(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 3)
        throw DomainError("grid density needs at least 3 nodes, got " +
                          std::to_string(values_.size()));
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]) || values_[i] < 0.0)
            throw DomainError("grid density value at node " + std::to_string(i) +
                              " is negative or non-finite");
    }
    cumulative_.resize(values_.size());
    cumulative_[0] = 0.0;
    const double half = 0.5 * spacing();
    for (std::size_t i = 1; i < values_.size(); ++i)
        cumulative_[i] = cumulative_[i - 1] + half * (values_[i - 1] + values_[i]);
}

GridDensity1D GridDensity1D::uniform(std::size_t n) {
    return GridDensity1D(std::vector<double>(n, 1.0));
}

double GridDensity1D::operator()(double x) const {
    const auto [i, t] = locate(x, values_.size());
    return (1.0 - t) * values_[i] + t * values_[i + 1];
}

std::vector<double> GridDensity1D::tail() const {
    const std::size_t n = values_.size();
    std::vector<double> out(n);
    out[n - 1] = 0.0;
    const double half = 0.5 * spacing();
    for (std::size_t i = n - 1; i-- > 0;)
        out[i] = out[i + 1] + half * (values_[i] + values_[i + 1]);
    return out;
}

double GridDensity1D::cdf_at(double x) const {
    const auto [i, t] = locate(x, values_.size());
    const double a = values_[i];
    const double b = values_[i + 1];
    return cumulative_[i] + spacing() * t * (a + 0.5 * t * (b - a));
}

double GridDensity1D::quantile(double u) const {
    const double total = integral();
    if (!(total > 0.0)) throw DegenerateInputError("quantile of a zero-mass density");
    const double target = std::clamp(u, 0.0, 1.0) * total;
    // first cell whose right cumulative value reaches the target
    auto it = std::lower_bound(cumulative_.begin() + 1, cumulative_.end(), target);
    if (it == cumulative_.end()) return 1.0;
    const auto i = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    const double h = spacing();
    const double a = values_[i];
    const double b = values_[i + 1];
    const double r = target - cumulative_[i];
    // solve h*(a t + (b-a) t^2 / 2) = r for t in [0,1]
    const double qa = 0.5 * h * (b - a);
    const double qb = h * a;
    double t;
    if (std::abs(qa) < 1e-300) {
        t = qb > 0.0 ? r / qb : 0.0;
    } else {
        const double disc = std::max(0.0, qb * qb + 4.0 * qa * r);
        const double denom = qb + std::sqrt(disc);
        t = denom > 0.0 ? 2.0 * r / denom : 0.0;
    }
    t = std::clamp(t, 0.0, 1.0);
    return std::min(1.0, node(i) + t * h);
}

bool GridDensity1D::is_normalized(double tol) const {
    return std::abs(integral() - 1.0) <= tol;
}

double eval_density(const GridDensity1D& d, double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("density evaluated outside [0,1]");
    return d(x);
}

GridDensity1D normalize(const GridDensity1D& d) {
    const double total = d.integral();
    if (!(total > 0.0)) throw DegenerateInputError("cannot normalize a zero-mass density");
    std::vector<double> values(d.values().begin(), d.values().end());
    for (double& v : values) v /= total;
    return GridDensity1D(std::move(values));
}

}  // namespace persuade
