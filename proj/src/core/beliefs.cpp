#include "persuade/core/beliefs.hpp"

#include <cmath>

#include "persuade/error.hpp"

namespace persuade {

namespace {

void require_unit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError(std::string(what) + " must lie in [0,1]");
}

}  // namespace

Prior::Prior(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0)) throw DomainError("sender prior must lie in (0,1)");
}

Policy Policy::make(double good_if_bad, double good_if_good) {
    require_unit(good_if_bad, "probability of the good message in the bad state");
    require_unit(good_if_good, "probability of the good message in the good state");
    if (good_if_bad > good_if_good)
        throw DomainError("policy must send the good message at least as often in the good state");
    return Policy{good_if_bad, good_if_good};
}

double posterior_update(double p_r, Prior p_s, double mu_s) {
    require_unit(p_r, "receiver prior");
    require_unit(mu_s, "representative posterior");
    if (mu_s == 0.0 || mu_s == 1.0) return mu_s;
    const double up = mu_s * (p_r / p_s.value());
    const double down = (1.0 - mu_s) * ((1.0 - p_r) / (1.0 - p_s.value()));
    return up / (up + down);
}

double cutoff_c(double mu, double p, Prior p_s) { return posterior_update(p, p_s, mu); }

double cutoff_c_slope(double mu, double p, Prior p_s) {
    const double r = p / p_s.value();
    const double q = (1.0 - p) / (1.0 - p_s.value());
    const double den = mu * r + (1.0 - mu) * q;
    // den == 0 only for a dogmatic receiver at the opposite certain posterior,
    // a single point of zero measure.
    if (den == 0.0) return 0.0;
    return r * q / (den * den);
}

double odds_ratio(double c, Prior p_s) {
    require_unit(c, "cost");
    if (c == 0.0 || c == 1.0) throw DegenerateInputError("cost must lie strictly inside (0,1)");
    return ((1.0 - c) / c) * ((1.0 - p_s.value()) / p_s.value());
}

double cutoff_p(double mu, double c, Prior p_s) {
    require_unit(mu, "representative posterior");
    const double gamma = odds_ratio(c, p_s);
    return (1.0 - mu) / ((1.0 - mu) + mu * gamma);
}

MessagePosteriors message_posteriors(const Policy& policy, double p_r) {
    require_unit(p_r, "receiver prior");
    const double s0 = policy.good_if_bad;
    const double s1 = policy.good_if_good;
    const double good_num = p_r * s1;
    const double good_den = good_num + (1.0 - p_r) * s0;
    const double bad_num = p_r * (1.0 - s1);
    const double bad_den = bad_num + (1.0 - p_r) * (1.0 - s0);
    return {good_den > 0.0 ? good_num / good_den : 1.0, bad_den > 0.0 ? bad_num / bad_den : 0.0};
}

}  // namespace persuade
