#include "ordclust/profile.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ordclust {

PreferenceProfile PreferenceProfile::build(const MetricInstance& instance) {
    PreferenceProfile p;
    p.n_ = instance.size();
    p.order_.resize(p.n_ * p.n_);
    std::vector<PointId> ids(p.n_);
    for (PointId x = 0; x < p.n_; ++x) {
        std::iota(ids.begin(), ids.end(), PointId{0});
        auto row = instance.row(x);
        std::sort(ids.begin(), ids.end(), [&](PointId a, PointId b) {
            // x itself first, even among zero-distance duplicates
            if ((a == x) != (b == x)) return a == x;
            if (row[a] != row[b]) return row[a] < row[b];
            return a < b;
        });
        std::copy(ids.begin(), ids.end(), p.order_.begin() + static_cast<std::ptrdiff_t>(x) * p.n_);
    }
    p.fill_ranks();
    return p;
}

PreferenceProfile PreferenceProfile::from_rankings(const MetricInstance& instance,
                                                   const std::vector<std::vector<PointId>>& rankings) {
    const std::size_t n = instance.size();
    if (rankings.size() != n) throw std::invalid_argument("need one ranking per point");

    PreferenceProfile p;
    p.n_ = n;
    p.order_.reserve(n * n);
    std::vector<char> seen(n);
    for (PointId x = 0; x < n; ++x) {
        const auto& r = rankings[x];
        if (r.size() != n) throw std::invalid_argument("ranking " + std::to_string(x) + " has wrong length");
        if (r.front() != x) throw std::invalid_argument("ranking " + std::to_string(x) + " must start with itself");
        std::fill(seen.begin(), seen.end(), 0);
        auto row = instance.row(x);
        for (std::size_t i = 0; i < n; ++i) {
            if (r[i] >= n || seen[r[i]]) {
                throw std::invalid_argument("ranking " + std::to_string(x) + " is not a permutation");
            }
            seen[r[i]] = 1;
            if (i > 0 && row[r[i - 1]] > row[r[i]]) {
                throw std::invalid_argument("ranking " + std::to_string(x) + " is inconsistent with distances");
            }
        }
        p.order_.insert(p.order_.end(), r.begin(), r.end());
    }
    p.fill_ranks();
    return p;
}

void PreferenceProfile::fill_ranks() {
    rank_.resize(n_ * n_);
    for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t i = 0; i < n_; ++i) rank_[x * n_ + order_[x * n_ + i]] = static_cast<std::uint32_t>(i);
    }
}

std::vector<std::vector<PointId>> PreferenceProfile::rankings() const {
    std::vector<std::vector<PointId>> out(n_);
    for (PointId x = 0; x < n_; ++x) {
        auto r = ranking(x);
        out[x].assign(r.begin(), r.end());
    }
    return out;
}

namespace {

void require_nonempty(std::span<const PointId> subset) {
    if (subset.empty()) throw std::invalid_argument("point set must be nonempty");
}

}  // namespace

std::vector<PointId> restrict_to(const PreferenceProfile& profile, PointId x, std::span<const PointId> subset) {
    require_nonempty(subset);
    std::vector<PointId> out(subset.begin(), subset.end());
    std::sort(out.begin(), out.end(),
              [&](PointId a, PointId b) { return profile.rank(x, a) < profile.rank(x, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PointId nearest_in_set(const PreferenceProfile& profile, PointId x, std::span<const PointId> subset) {
    require_nonempty(subset);
    return *std::min_element(subset.begin(), subset.end(),
                             [&](PointId a, PointId b) { return profile.rank(x, a) < profile.rank(x, b); });
}

PointId farthest_in_set(const PreferenceProfile& profile, PointId x, std::span<const PointId> subset) {
    require_nonempty(subset);
    return *std::max_element(subset.begin(), subset.end(),
                             [&](PointId a, PointId b) { return profile.rank(x, a) < profile.rank(x, b); });
}

Clustering induced_clustering(const PreferenceProfile& profile, std::span<const PointId> centers) {
    require_nonempty(centers);
    const std::size_t n = profile.size();
    Clustering c;
    c.centers.assign(centers.begin(), centers.end());
    c.owner.resize(n);
    c.members.resize(c.centers.size());
    for (PointId x = 0; x < n; ++x) {
        std::uint32_t best = 0;
        for (std::uint32_t i = 1; i < c.centers.size(); ++i) {
            if (profile.rank(x, c.centers[i]) < profile.rank(x, c.centers[best])) best = i;
        }
        c.owner[x] = best;
        c.members[best].push_back(x);
    }
    return c;
}

}  // namespace ordclust
