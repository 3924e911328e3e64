#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ordclust/metric.hpp"
#include "ordclust/profile.hpp"

namespace ordclust {

using PointPair = std::pair<PointId, PointId>;

/// Meter for revealed cardinal distances.
///
/// count() is the number of distinct unordered pairs revealed so far, which
/// is the query cost. calls() counts query operations as issued, including
/// repeats and trivial self-pairs.
class QueryLedger {
public:
    double query(const MetricInstance& instance, PointId x, PointId y);

    bool revealed(PointId x, PointId y) const;
    std::size_t count() const noexcept { return order_.size(); }
    std::size_t calls() const noexcept { return calls_; }

    /// Revealed pairs (smaller id first) in the order they were revealed.
    const std::vector<PointPair>& pairs() const noexcept { return order_; }

private:
    static std::uint64_t key(PointId x, PointId y) noexcept;

    std::unordered_set<std::uint64_t> revealed_;
    std::vector<PointPair> order_;
    std::size_t calls_ = 0;
};

inline double query_distance(QueryLedger& ledger, const MetricInstance& instance, PointId x, PointId y) {
    return ledger.query(instance, x, y);
}

struct SetDistance {
    double distance;
    PointId nearest;
};

/// d(x, S) with one query: the nearest member is known from x's ranking.
SetDistance distance_to_set(QueryLedger& ledger, const PreferenceProfile& profile,
                            const MetricInstance& instance, PointId x, std::span<const PointId> subset);

}  // namespace ordclust
