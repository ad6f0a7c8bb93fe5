#pragma once

#include <cstddef>
#include <cstdint>

#include "persuade/core/beliefs.hpp"
#include "persuade/core/joint_density.hpp"

namespace persuade {

inline constexpr std::size_t kMinSimulatedAgents = 1000;

struct SimulationResult {
    std::size_t n_agents;
    std::uint64_t supporters;
    double mean_action;
    double standard_error;
};

/// Monte Carlo population: each agent draws (c, p) from f, the state from the
/// sender's prior and a message from the policy, then supports iff the
/// posterior after that message is at least c. Agents are drawn in fixed-size
/// blocks, each with its own generator seeded from (seed, block index), so the
/// result depends on the seed only and not on the thread count.
///
/// Throws DomainError for fewer than 1000 agents and ValidationError for a
/// non-normalized f.
SimulationResult simulate_population(const JointDensityCP& f, const Policy& policy, Prior p_s,
                                     std::size_t n_agents, std::uint64_t seed);

namespace kernels {

/// Single-threaded reference for simulate_population.
SimulationResult simulate_population_serial(const JointDensityCP& f, const Policy& policy,
                                            Prior p_s, std::size_t n_agents, std::uint64_t seed);

}  // namespace kernels

}  // namespace persuade
