#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ordclust/metric.hpp"

namespace ordclust {

/// Per-point rankings of all points by distance: the ordinal view of a metric.
///
/// ranking(x)[0] is always x itself. Everything an algorithm does with a
/// profile is free; only QueryLedger reveals numbers.
class PreferenceProfile {
public:
    PreferenceProfile() = default;

    /// Distance order with ties broken by ascending id (x itself first).
    static PreferenceProfile build(const MetricInstance& instance);

    /// Adopts prescribed rankings after checking they are permutations,
    /// start with the ranking point, and are consistent with the metric.
    static PreferenceProfile from_rankings(const MetricInstance& instance,
                                           const std::vector<std::vector<PointId>>& rankings);

    std::size_t size() const noexcept { return n_; }

    std::span<const PointId> ranking(PointId x) const noexcept {
        return {order_.data() + static_cast<std::size_t>(x) * n_, n_};
    }

    /// 0-based position of y in x's ranking.
    std::uint32_t rank(PointId x, PointId y) const noexcept { return rank_[x * n_ + y]; }

    /// True iff x ranks y strictly before z.
    bool prefers(PointId x, PointId y, PointId z) const noexcept { return rank(x, y) < rank(x, z); }

    /// Ranking point's farthest point overall.
    PointId last(PointId x) const noexcept { return ranking(x)[n_ - 1]; }

    std::vector<std::vector<PointId>> rankings() const;

    friend bool operator==(const PreferenceProfile& a, const PreferenceProfile& b) {
        return a.n_ == b.n_ && a.order_ == b.order_;
    }

private:
    void fill_ranks();

    std::size_t n_ = 0;
    std::vector<PointId> order_;
    std::vector<std::uint32_t> rank_;
};

inline PreferenceProfile build_profile(const MetricInstance& instance) {
    return PreferenceProfile::build(instance);
}

/// Members of `subset` in x's preference order.
std::vector<PointId> restrict_to(const PreferenceProfile& profile, PointId x,
                                 std::span<const PointId> subset);

PointId nearest_in_set(const PreferenceProfile& profile, PointId x, std::span<const PointId> subset);
PointId farthest_in_set(const PreferenceProfile& profile, PointId x, std::span<const PointId> subset);

/// Partition of the points by each point's top-ranked center.
struct Clustering {
    std::vector<PointId> centers;
    std::vector<std::uint32_t> owner;             // point -> index into centers
    std::vector<std::vector<PointId>> members;    // ascending ids, per center

    std::size_t cluster_of(PointId x) const { return owner[x]; }
};

Clustering induced_clustering(const PreferenceProfile& profile, std::span<const PointId> centers);

}  // namespace ordclust
