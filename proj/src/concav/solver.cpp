#include "persuade/concav/solver.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "persuade/concav/envelope.hpp"
#include "persuade/error.hpp"

namespace persuade {

namespace {

constexpr int kBisectionSteps = 60;
constexpr double kNoInformationGap = 1e-10;
constexpr double kThresholdTie = 1e-10;

// Bisects g on [lo, hi] where g(lo) is on the kept side and g(hi) is not.
template <class G>
double bisect(G&& keep, double lo, double hi) {
    for (int i = 0; i < kBisectionSteps; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (keep(mid))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Policy clamp_policy(double good_if_bad, double good_if_good) {
    const double hi = std::clamp(good_if_good, 0.0, 1.0);
    return Policy{std::clamp(good_if_bad, 0.0, hi), hi};
}

}  // namespace

std::string_view to_string(SolveMethod method) {
    switch (method) {
        case SolveMethod::Oracle: return "Oracle";
        case SolveMethod::ClosedFormPeaked: return "ClosedFormPeaked";
        case SolveMethod::ClosedFormDipped: return "ClosedFormDipped";
    }
    return "Oracle";
}

PersuasionSolution solution_from_policy(const ValueTable& vt, Prior p_s, const Policy& policy,
                                        SolveMethod method, ShapeClass shape,
                                        std::optional<double> threshold) {
    const double weight = policy.good_message_probability(p_s.value());
    const auto post = message_posteriors(policy, p_s.value());
    const double value =
        weight * vt.value_at(post.after_good) + (1.0 - weight) * vt.value_at(post.after_bad);
    return {post.after_bad, post.after_good, weight, policy, value, threshold, shape, method};
}

PersuasionSolution solve_oracle(const ValueTable& vt, Prior p_s,
                                NoInformationConvention convention) {
    const ConcaveEnvelope env = concave_envelope(vt);
    const double ps = p_s.value();
    const ShapeClass shape = classify_shape(vt.h());

    Policy policy;
    if (env(ps) - vt.value_at(ps) <= kNoInformationGap) {
        policy = convention == NoInformationConvention::GoodMessage ? Policy{1.0, 1.0}
                                                                    : Policy{0.0, 0.0};
    } else {
        const std::size_t k = env.segment_of(ps);
        const double mu_lo = env.vertices()[k].mu;
        const double mu_hi = env.vertices()[k + 1].mu;
        const double w = (ps - mu_lo) / (mu_hi - mu_lo);
        policy = clamp_policy(w * (1.0 - mu_hi) / (1.0 - ps), w * mu_hi / ps);
    }
    return solution_from_policy(vt, p_s, policy, SolveMethod::Oracle, shape);
}

std::vector<double> tangency_gap_peaked(const ValueTable& vt) {
    std::vector<double> y(vt.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = vt.h()[i] * vt.posterior(i) - vt.v()[i];
    return y;
}

std::vector<double> tangency_gap_dipped(const ValueTable& vt) {
    std::vector<double> z(vt.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        z[i] = vt.h()[i] * (1.0 - vt.posterior(i)) - (1.0 - vt.v()[i]);
    return z;
}

double peaked_threshold(const ValueTable& vt) {
    const ShapeTag tag = classify_shape(vt.h()).tag;
    if (!weakly_single_peaked(tag))
        throw PreconditionViolation(fmt::format("peaked threshold needs a single-peaked h, got {}",
                                                to_string(tag)));
    if (tag == ShapeTag::Flat) return 1.0;
    const auto y = tangency_gap_peaked(vt);
    auto first_negative =
        std::find_if(y.begin(), y.end(), [](double g) { return g < -kTangencyTolerance; });
    if (first_negative == y.end()) return 1.0;
    const auto k = std::max<std::size_t>(1, static_cast<std::size_t>(first_negative - y.begin()));
    return bisect(
        [&](double mu) { return vt.density_at(mu) * mu - vt.value_at(mu) >= 0.0; },
        vt.posterior(k - 1), vt.posterior(k));
}

double dipped_threshold(const ValueTable& vt) {
    const ShapeTag tag = classify_shape(vt.h()).tag;
    if (!weakly_single_dipped(tag))
        throw PreconditionViolation(fmt::format("dipped threshold needs a single-dipped h, got {}",
                                                to_string(tag)));
    if (tag == ShapeTag::Flat) return 0.0;
    const auto z = tangency_gap_dipped(vt);
    if (std::all_of(z.begin(), z.end(), [](double g) { return g <= kTangencyTolerance; }))
        return 0.0;
    // The gap returns to zero from below at mu = 1, so the last node is skipped.
    auto first_negative = std::find_if(z.begin(), z.end() - 1,
                                       [](double g) { return g < -kTangencyTolerance; });
    if (first_negative == z.end() - 1) return 1.0;
    const auto k = static_cast<std::size_t>(first_negative - z.begin());
    if (k == 0) return 0.0;
    return bisect(
        [&](double mu) {
            return vt.density_at(mu) * (1.0 - mu) - (1.0 - vt.value_at(mu)) >= 0.0;
        },
        vt.posterior(k - 1), vt.posterior(k));
}

Policy peaked_policy(double threshold, Prior p_s) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw DegenerateInputError("peaked threshold must lie in (0,1]");
    const double ps = p_s.value();
    if (!(ps < threshold - kThresholdTie)) return Policy{1.0, 1.0};
    return Policy{ps * (1.0 - threshold) / ((1.0 - ps) * threshold), 1.0};
}

Policy dipped_policy(double threshold, Prior p_s) {
    if (!(threshold >= 0.0 && threshold < 1.0)) {
        if (threshold == 1.0) return Policy{0.0, 0.0};
        throw DomainError("dipped threshold must lie in [0,1]");
    }
    const double ps = p_s.value();
    if (!(ps > threshold + kThresholdTie)) return Policy{0.0, 0.0};
    const double good_if_good = (ps - threshold) / ((1.0 - threshold) * ps);
    if (!(good_if_good >= 0.0 && good_if_good <= 1.0))
        throw ConsistencyError("dipped policy left the unit interval");
    return Policy{0.0, good_if_good};
}

PersuasionSolution solve(const ValueTable& vt, Prior p_s, const SolveOptions& options) {
    const ShapeClass shape = classify_shape(vt.h());
    if (shape.tag == ShapeTag::Neither) return solve_oracle(vt, p_s);

    const bool dipped = shape.tag == ShapeTag::SingleDipped;
    PersuasionSolution closed;
    if (dipped) {
        const double t = dipped_threshold(vt);
        closed = solution_from_policy(vt, p_s, dipped_policy(t, p_s),
                                      SolveMethod::ClosedFormDipped, shape, t);
    } else {
        const double t = peaked_threshold(vt);
        closed = solution_from_policy(vt, p_s, peaked_policy(t, p_s),
                                      SolveMethod::ClosedFormPeaked, shape, t);
    }

    const PersuasionSolution oracle = solve_oracle(
        vt, p_s,
        dipped ? NoInformationConvention::BadMessage : NoInformationConvention::GoodMessage);
    const double value_gap = std::abs(closed.value - oracle.value);
    const double policy_gap =
        std::max(std::abs(closed.policy.good_if_bad - oracle.policy.good_if_bad),
                 std::abs(closed.policy.good_if_good - oracle.policy.good_if_good));
    const bool policy_checked = shape.tag != ShapeTag::Flat;
    if (value_gap > options.value_tolerance ||
        (policy_checked && policy_gap > options.policy_tolerance))
        throw ConsistencyError(fmt::format(
            "{} solution disagrees with the envelope solver: policy gap {:.3g}, value gap {:.3g} "
            "(closed form ({:.6g}, {:.6g}), envelope ({:.6g}, {:.6g})); a finer grid may help",
            to_string(closed.method), policy_gap, value_gap, closed.policy.good_if_bad,
            closed.policy.good_if_good, oracle.policy.good_if_bad, oracle.policy.good_if_good));
    return closed;
}

}  // namespace persuade
