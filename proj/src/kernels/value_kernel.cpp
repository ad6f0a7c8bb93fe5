#include "persuade/kernels/value_kernel.hpp"

#include <variant>

#include "persuade/error.hpp"

namespace persuade::kernels {

namespace {

struct Model {
    double p_s;
    std::vector<PriorRow> rows;
    // Common-cost population: every receiver has the same cost.
    const GridDensity1D* priors = nullptr;
    double gamma = 0.0;
};

Model prepare(const JointDensityCP& f, Prior p_s, std::size_t n) {
    if (n < 3) throw DomainError("value grid needs at least 3 nodes");
    if (!f.is_normalized()) throw ValidationError("joint density is not normalized");
    Model m{p_s.value(), {}, nullptr, 0.0};
    if (f.is_product()) {
        const auto* cost_mass = std::get_if<PointMass>(&f.cost_marginal());
        if (cost_mass) {
            const auto* priors = std::get_if<GridDensity1D>(&f.prior_marginal());
            if (!priors)
                throw DegenerateInputError(
                    "cost and prior are both point masses; the value function is a step");
            m.priors = priors;
            m.gamma = odds_ratio(cost_mass->at, p_s);
            return m;
        }
    }
    m.rows = f.prior_rows();
    return m;
}

inline double support_cutoff(double mu, double p, double p_s) {
    if (mu == 0.0 || mu == 1.0) return mu;
    const double up = mu * (p / p_s);
    const double down = (1.0 - mu) * ((1.0 - p) / (1.0 - p_s));
    return up / (up + down);
}

inline double support_cutoff_slope(double mu, double p, double p_s) {
    const double r = p / p_s;
    const double q = (1.0 - p) / (1.0 - p_s);
    const double den = mu * r + (1.0 - mu) * q;
    return den == 0.0 ? 0.0 : r * q / (den * den);
}

inline void evaluate(const Model& m, double mu, double& v, double& h) {
    if (m.priors) {
        const double scale = 1.0 + (m.gamma - 1.0) * mu;
        const double p_cut = (1.0 - mu) / scale;
        v = m.priors->integral() - m.priors->cdf_at(p_cut);
        h = (*m.priors)(p_cut) * m.gamma / (scale * scale);
        return;
    }
    double acc_v = 0.0;
    double acc_h = 0.0;
    for (const PriorRow& row : m.rows) {
        const double c = support_cutoff(mu, row.prior, m.p_s);
        acc_v += row.weight * row.costs->cdf_at(c);
        acc_h += row.weight * (*row.costs)(c) * support_cutoff_slope(mu, row.prior, m.p_s);
    }
    v = acc_v;
    h = acc_h;
}

}  // namespace

ValueColumns value_function_serial(const JointDensityCP& f, Prior p_s, std::size_t n) {
    const Model model = prepare(f, p_s, n);
    ValueColumns out{std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i)
        evaluate(model, GridDensity1D::node_of(i, n), out.v[i], out.h[i]);
    return out;
}

ValueColumns value_function_parallel(const JointDensityCP& f, Prior p_s, std::size_t n) {
    const Model model = prepare(f, p_s, n);
    ValueColumns out{std::vector<double>(n), std::vector<double>(n)};
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        evaluate(model, GridDensity1D::node_of(k, n), out.v[k], out.h[k]);
    }
    return out;
}

}  // namespace persuade::kernels
