#pragma once

#include <cstddef>
#include <vector>

#include "persuade/core/beliefs.hpp"
#include "persuade/core/joint_density.hpp"
#include "persuade/densities/grid_density.hpp"

namespace persuade {

/// Lowest prior at which a receiver with cost c supports after the good
/// message. Equals c for an uninformative policy with 0 < sigma < 1; at
/// (0,0) it is 0, matching the off-path posterior 1 after the good message.
double lower_threshold(const Policy& policy, double c);

/// Lowest prior at which a receiver with cost c supports after the bad
/// message. At (1,1) it is 1, matching the off-path posterior 0 after the
/// bad message.
double upper_threshold(const Policy& policy, double c);

/// Receiver types under a policy, tabulated over the cost grid. A receiver
/// (c, p) never supports when p < lower(c), complies (follows the message)
/// when lower(c) <= p < upper(c), and always supports when p >= upper(c).
struct ReceiverPartition {
    Policy policy;
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t size() const { return lower.size(); }
    double cost(std::size_t i) const { return GridDensity1D::node_of(i, lower.size()); }
};

ReceiverPartition partition(const Policy& policy, std::size_t n = kDefaultGridNodes);

struct PartitionMeasures {
    double never;
    double compliers;
    double always;
};

/// Population mass of each receiver type.
PartitionMeasures partition_measures(const ReceiverPartition& part, const JointDensityCP& f);

/// Expected share of supporters: compliers act on the good message, which the
/// sender sends with probability p_s * good_if_good + (1 - p_s) * good_if_bad.
double sender_payoff(const Policy& policy, const JointDensityCP& f, Prior p_s);

}  // namespace persuade
