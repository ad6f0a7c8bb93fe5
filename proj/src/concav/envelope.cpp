#include "persuade/concav/envelope.hpp"

#include <algorithm>
#include <cmath>

#include "persuade/error.hpp"

namespace persuade {

ConcaveEnvelope::ConcaveEnvelope(std::vector<HullVertex> vertices, std::vector<bool> coincident)
    : vertices_(std::move(vertices)), coincident_(std::move(coincident)) {
    if (vertices_.size() < 2) throw DomainError("envelope needs at least two vertices");
}

std::size_t ConcaveEnvelope::segment_of(double mu) const {
    if (!(mu >= 0.0 && mu <= 1.0)) throw DomainError("posterior must lie in [0,1]");
    auto it = std::upper_bound(vertices_.begin(), vertices_.end(), mu,
                               [](double x, const HullVertex& v) { return x < v.mu; });
    const auto right = static_cast<std::size_t>(it - vertices_.begin());
    return std::clamp<std::size_t>(right, 1, vertices_.size() - 1) - 1;
}

double ConcaveEnvelope::operator()(double mu) const {
    const std::size_t k = segment_of(mu);
    const HullVertex& a = vertices_[k];
    const HullVertex& b = vertices_[k + 1];
    const double t = (mu - a.mu) / (b.mu - a.mu);
    return a.value + t * (b.value - a.value);
}

ConcaveEnvelope concave_envelope(const ValueTable& vt) {
    const auto v = vt.v();
    const std::size_t n = vt.size();
    std::vector<HullVertex> hull;
    hull.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const HullVertex next{i, vt.posterior(i), v[i]};
        // Drop the last vertex while it lies on or below the chord to `next`.
        while (hull.size() >= 2) {
            const HullVertex& o = hull[hull.size() - 2];
            const HullVertex& a = hull.back();
            const double cross =
                (a.mu - o.mu) * (next.value - o.value) - (a.value - o.value) * (next.mu - o.mu);
            if (cross < 0.0) break;
            hull.pop_back();
        }
        hull.push_back(next);
    }

    std::vector<bool> coincident(n, false);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k + 2 < hull.size() && hull[k + 1].index <= i) ++k;
        const HullVertex& a = hull[k];
        const HullVertex& b = hull[k + 1];
        const double t = (vt.posterior(i) - a.mu) / (b.mu - a.mu);
        const double envelope = a.value + t * (b.value - a.value);
        coincident[i] = envelope - v[i] <= kCoincidenceTolerance;
    }
    return ConcaveEnvelope(std::move(hull), std::move(coincident));
}

}  // namespace persuade
