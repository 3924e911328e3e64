#include "ordclust/ledger.hpp"

#include <stdexcept>

namespace ordclust {

std::uint64_t QueryLedger::key(PointId x, PointId y) noexcept {
    if (x > y) std::swap(x, y);
    return (static_cast<std::uint64_t>(x) << 32) | y;
}

double QueryLedger::query(const MetricInstance& instance, PointId x, PointId y) {
    if (x >= instance.size() || y >= instance.size()) throw std::out_of_range("point id out of range");
    ++calls_;
    if (x != y && revealed_.insert(key(x, y)).second) {
        order_.emplace_back(std::min(x, y), std::max(x, y));
    }
    return instance.distance(x, y);
}

bool QueryLedger::revealed(PointId x, PointId y) const {
    return x == y || revealed_.contains(key(x, y));
}

SetDistance distance_to_set(QueryLedger& ledger, const PreferenceProfile& profile,
                            const MetricInstance& instance, PointId x, std::span<const PointId> subset) {
    const PointId z = nearest_in_set(profile, x, subset);
    return {ledger.query(instance, x, z), z};
}

}  // namespace ordclust
