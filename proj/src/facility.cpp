#include "ordclust/facility.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ordclust {

Solution meyerson(const MetricInstance& instance, const PreferenceProfile& profile, const FacilityConfig& config,
                  QueryLedger& ledger, Rng& rng) {
    const std::size_t n = instance.size();
    if (n == 0) throw std::invalid_argument("empty instance");
    if (!(config.opening_cost > 0.0)) throw std::invalid_argument("opening cost must be positive");

    std::vector<PointId> order(n);
    std::iota(order.begin(), order.end(), PointId{0});
    if (config.permutation_seed) {
        Rng perm(*config.permutation_seed);
        std::shuffle(order.begin(), order.end(), perm);
    } else {
        std::shuffle(order.begin(), order.end(), rng);
    }

    std::vector<PointId> open{order.front()};
    for (std::size_t i = 1; i < n; ++i) {
        const PointId x = order[i];
        const double d = distance_to_set(ledger, profile, instance, x, open).distance;
        const double p = std::min(1.0, d / config.opening_cost);
        if (p > 0.0 && uniform01(rng) < p) open.push_back(x);
    }
    return {std::move(open), Objective::Kind::facility};
}

}  // namespace ordclust
