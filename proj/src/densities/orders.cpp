#include "persuade/densities/orders.hpp"

#include "persuade/error.hpp"

namespace persuade {

namespace {

void require_comparable(const GridDensity1D& d1, const GridDensity1D& d2) {
    if (d1.size() != d2.size())
        throw PreconditionViolation("order comparison needs densities on the same grid");
    if (!d1.is_normalized() || !d2.is_normalized())
        throw ValidationError("order comparison needs normalized densities");
}

// `sign` = +1 when a larger first rate means the first density is larger.
OrderVerdict compare_rates(const std::vector<std::optional<double>>& r1,
                           const std::vector<std::optional<double>>& r2, int sign, double tol) {
    bool any_above = false;
    bool any_below = false;
    for (std::size_t i = 0; i < r1.size(); ++i) {
        if (!r1[i] || !r2[i]) continue;
        const double diff = sign * (*r1[i] - *r2[i]);
        if (diff > tol) any_above = true;
        else if (diff < -tol) any_below = true;
    }
    if (any_above && any_below) return OrderVerdict::Incomparable;
    if (any_above) return OrderVerdict::D1Larger;
    if (any_below) return OrderVerdict::D2Larger;
    return OrderVerdict::Equal;
}

}  // namespace

std::string_view to_string(OrderVerdict v) {
    switch (v) {
        case OrderVerdict::D1Larger: return "D1Larger";
        case OrderVerdict::D2Larger: return "D2Larger";
        case OrderVerdict::Equal: return "Equal";
        case OrderVerdict::Incomparable: return "Incomparable";
    }
    return "Incomparable";
}

std::vector<std::optional<double>> reversed_hazard_rate(const GridDensity1D& d) {
    const auto cdf = d.cumulative();
    std::vector<std::optional<double>> out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        if (cdf[i] >= kOrderDenominatorFloor) out[i] = d.value(i) / cdf[i];
    return out;
}

std::vector<std::optional<double>> hazard_rate(const GridDensity1D& d) {
    const auto survival = d.tail();
    std::vector<std::optional<double>> out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        if (survival[i] >= kOrderDenominatorFloor) out[i] = d.value(i) / survival[i];
    return out;
}

OrderVerdict reversed_hazard_compare(const GridDensity1D& d1, const GridDensity1D& d2,
                                     double tol) {
    require_comparable(d1, d2);
    return compare_rates(reversed_hazard_rate(d1), reversed_hazard_rate(d2), +1, tol);
}

OrderVerdict hazard_compare(const GridDensity1D& d1, const GridDensity1D& d2, double tol) {
    require_comparable(d1, d2);
    return compare_rates(hazard_rate(d1), hazard_rate(d2), -1, tol);
}

}  // namespace persuade
