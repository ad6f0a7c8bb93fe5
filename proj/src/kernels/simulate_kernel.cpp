#include <algorithm>
#include <cmath>
#include <random>
#include <variant>

#include "persuade/core/simulate.hpp"
#include "persuade/error.hpp"

namespace persuade {

namespace {

constexpr std::size_t kBlockSize = 4096;

class TypeSampler {
public:
    explicit TypeSampler(const JointDensityCP& f) : f_(f) {
        if (!f.is_normalized()) throw ValidationError("cannot sample a non-normalized joint density");
        if (f.is_product()) {
            cost_ = &f.cost_marginal();
            prior_ = &f.prior_marginal();
        }
    }

    // Returns (cost, prior) from three independent uniforms.
    std::pair<double, double> draw(double u_prior, double u_pick, double u_cost) const {
        if (cost_) return {draw_marginal(*cost_, u_cost), draw_marginal(*prior_, u_prior)};
        const GridDensity1D& masses = f_.prior_row_masses();
        const double p = masses.quantile(u_prior);
        const std::size_t n = masses.size();
        const double t = p * static_cast<double>(n - 1);
        const std::size_t j = std::min(static_cast<std::size_t>(t), n - 2);
        const double w = t - static_cast<double>(j);
        const double lower = (1.0 - w) * masses.value(j);
        const double upper = w * masses.value(j + 1);
        const std::size_t row = u_pick * (lower + upper) < lower || upper == 0.0 ? j : j + 1;
        return {f_.grid_row(row).quantile(u_cost), p};
    }

private:
    static double draw_marginal(const Marginal& m, double u) {
        if (const auto* pm = std::get_if<PointMass>(&m)) return pm->at;
        return std::get<GridDensity1D>(m).quantile(u);
    }

    const JointDensityCP& f_;
    const Marginal* cost_ = nullptr;
    const Marginal* prior_ = nullptr;
};

std::uint64_t simulate_block(const TypeSampler& sampler, const Policy& policy, double p_s,
                             std::size_t begin, std::size_t end, std::uint64_t seed,
                             std::uint64_t block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uint64_t supporters = 0;
    for (std::size_t i = begin; i < end; ++i) {
        const double u_prior = unit(rng);
        const double u_pick = unit(rng);
        const double u_cost = unit(rng);
        const auto [c, p] = sampler.draw(u_prior, u_pick, u_cost);
        const bool good_state = unit(rng) < p_s;
        const double send_good = good_state ? policy.good_if_good : policy.good_if_bad;
        const bool good_message = unit(rng) < send_good;
        const auto post = message_posteriors(policy, p);
        const double belief = good_message ? post.after_good : post.after_bad;
        if (belief >= c) ++supporters;
    }
    return supporters;
}

SimulationResult summarize(std::size_t n, std::uint64_t supporters) {
    const double mean = static_cast<double>(supporters) / static_cast<double>(n);
    return {n, supporters, mean, std::sqrt(mean * (1.0 - mean) / static_cast<double>(n))};
}

void check_count(std::size_t n_agents) {
    if (n_agents < kMinSimulatedAgents)
        throw DomainError("simulation needs at least 1000 agents");
}

}  // namespace

SimulationResult simulate_population(const JointDensityCP& f, const Policy& policy, Prior p_s,
                                     std::size_t n_agents, std::uint64_t seed) {
    check_count(n_agents);
    const Policy checked = Policy::make(policy.good_if_bad, policy.good_if_good);
    const TypeSampler sampler(f);
    const auto blocks = static_cast<long long>((n_agents + kBlockSize - 1) / kBlockSize);
    std::uint64_t supporters = 0;
#pragma omp parallel for schedule(static) reduction(+ : supporters)
    for (long long b = 0; b < blocks; ++b) {
        const auto block = static_cast<std::size_t>(b);
        const std::size_t begin = block * kBlockSize;
        const std::size_t end = std::min(n_agents, begin + kBlockSize);
        supporters += simulate_block(sampler, checked, p_s.value(), begin, end, seed, block);
    }
    return summarize(n_agents, supporters);
}

namespace kernels {

SimulationResult simulate_population_serial(const JointDensityCP& f, const Policy& policy,
                                            Prior p_s, std::size_t n_agents, std::uint64_t seed) {
    check_count(n_agents);
    const Policy checked = Policy::make(policy.good_if_bad, policy.good_if_good);
    const TypeSampler sampler(f);
    std::uint64_t supporters = 0;
    for (std::size_t begin = 0, block = 0; begin < n_agents; begin += kBlockSize, ++block)
        supporters += simulate_block(sampler, checked, p_s.value(), begin,
                                     std::min(n_agents, begin + kBlockSize), seed, block);
    return summarize(n_agents, supporters);
}

}  // namespace kernels

}  // namespace persuade
