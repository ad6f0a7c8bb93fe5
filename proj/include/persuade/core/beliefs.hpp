#pragma once

namespace persuade {

/// The sender's prior that the state is good; strictly inside (0,1).
class Prior {
public:
    explicit Prior(double value);
    double value() const { return value_; }

private:
    double value_;
};

/// Two-message information policy. `good_if_bad` and `good_if_good` are the
/// probabilities of sending the good message in the bad and the good state,
/// with good_if_bad <= good_if_good.
struct Policy {
    double good_if_bad = 1.0;
    double good_if_good = 1.0;

    /// Validating constructor; throws DomainError unless 0 <= bad <= good <= 1.
    static Policy make(double good_if_bad, double good_if_good);
    static Policy fully_informative() { return {0.0, 1.0}; }

    bool uninformative() const { return good_if_bad == good_if_good; }
    /// Probability of the good message for a receiver with prior p.
    double good_message_probability(double p) const {
        return p * good_if_good + (1.0 - p) * good_if_bad;
    }
};

/// Posterior of a receiver with prior p_r when the representative receiver
/// (who shares the sender's prior) holds posterior mu_s. A certain
/// representative posterior (0 or 1) is passed through unchanged.
double posterior_update(double p_r, Prior p_s, double mu_s);

/// Largest cost at which a receiver with prior p supports the policy when the
/// representative posterior is mu.
double cutoff_c(double mu, double p, Prior p_s);

/// Derivative of cutoff_c with respect to mu, in closed form.
double cutoff_c_slope(double mu, double p, Prior p_s);

/// Composite odds ratio ((1-c)/c) * ((1-p_s)/p_s) for a receiver with cost c.
double odds_ratio(double c, Prior p_s);

/// Smallest prior at which a receiver with cost c supports the policy when the
/// representative posterior is mu. Throws DegenerateInputError for c in {0,1}.
double cutoff_p(double mu, double c, Prior p_s);

struct MessagePosteriors {
    double after_good;
    double after_bad;
};

/// Bayes posteriors of a receiver with prior p_r after each message. A message
/// the receiver considers impossible gets the off-path belief: 1 after the
/// good message, 0 after the bad one.
MessagePosteriors message_posteriors(const Policy& policy, double p_r);

}  // namespace persuade
