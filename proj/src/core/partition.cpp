#include "persuade/core/partition.hpp"

#include <variant>

#include "persuade/error.hpp"

namespace persuade {

namespace {

void require_cost(double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw DomainError("cost must lie in [0,1]");
}

// Cost cutoffs of a receiver with prior p: supports after the good message iff
// c <= good, after the bad message iff c <= bad.
struct CostCutoffs {
    double good;
    double bad;
};

CostCutoffs cost_cutoffs(const Policy& policy, double p) {
    const auto post = message_posteriors(policy, p);
    return {post.after_good, post.after_bad};
}

}  // namespace

double lower_threshold(const Policy& policy, double c) {
    require_cost(c);
    const double num = c * policy.good_if_bad;
    const double den = num + (1.0 - c) * policy.good_if_good;
    return den > 0.0 ? num / den : 0.0;
}

double upper_threshold(const Policy& policy, double c) {
    require_cost(c);
    const double num = c * (1.0 - policy.good_if_bad);
    const double den = num + (1.0 - c) * (1.0 - policy.good_if_good);
    return den > 0.0 ? num / den : 1.0;
}

ReceiverPartition partition(const Policy& policy, std::size_t n) {
    if (n < 2) throw DomainError("partition grid needs at least 2 nodes");
    const Policy checked = Policy::make(policy.good_if_bad, policy.good_if_good);
    ReceiverPartition part{checked, std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const double c = GridDensity1D::node_of(i, n);
        part.lower[i] = lower_threshold(checked, c);
        part.upper[i] = upper_threshold(checked, c);
    }
    return part;
}

PartitionMeasures partition_measures(const ReceiverPartition& part, const JointDensityCP& f) {
    const Policy& policy = part.policy;
    if (f.is_product()) {
        if (const auto* cost = std::get_if<PointMass>(&f.cost_marginal())) {
            const double lo = lower_threshold(policy, cost->at);
            const double hi = upper_threshold(policy, cost->at);
            if (const auto* prior = std::get_if<PointMass>(&f.prior_marginal())) {
                const double p = prior->at;
                return {p < lo ? 1.0 : 0.0, (p >= lo && p < hi) ? 1.0 : 0.0, p >= hi ? 1.0 : 0.0};
            }
            const auto& priors = std::get<GridDensity1D>(f.prior_marginal());
            const double below_lo = priors.cdf_at(lo);
            const double below_hi = priors.cdf_at(hi);
            return {below_lo, below_hi - below_lo, priors.integral() - below_hi};
        }
    }
    PartitionMeasures m{0.0, 0.0, 0.0};
    for (const PriorRow& row : f.prior_rows()) {
        const CostCutoffs cut = cost_cutoffs(policy, row.prior);
        const double always = row.costs->cdf_at(cut.bad);
        const double any = row.costs->cdf_at(cut.good);
        m.always += row.weight * always;
        m.compliers += row.weight * (any - always);
        m.never += row.weight * (row.costs->integral() - any);
    }
    return m;
}

double sender_payoff(const Policy& policy, const JointDensityCP& f, Prior p_s) {
    const PartitionMeasures m = partition_measures(partition(policy, 2), f);
    return m.compliers * policy.good_message_probability(p_s.value()) + m.always;
}

}  // namespace persuade
