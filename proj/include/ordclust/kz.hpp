#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ordclust/ledger.hpp"
#include "ordclust/metric.hpp"
#include "ordclust/objective.hpp"
#include "ordclust/profile.hpp"
#include "ordclust/rng.hpp"

namespace ordclust {

/// Geometric partition of one cluster by distance rank from its center.
///
/// rings[0] is the remainder ring S_{c,1}, rings.back() the farthest point
/// alone. Between them ring j (1-based) has 2^(level−j) members. Each ring
/// lists its members nearest first.
struct RingPartition {
    PointId center = kNoPoint;
    std::size_t level = 0;  // floor(log2 |S|)
    std::vector<std::vector<PointId>> rings;

    std::size_t ring_count() const noexcept { return rings.size(); }
    std::size_t ring_of(PointId x) const;
};

RingPartition ring_partition(const PreferenceProfile& profile, PointId center, std::span<const PointId> members);

/// Number of rings a cluster of m points is split into.
std::size_t ring_count_for(std::size_t m);

/// Σ_x d(x, C)^z over the given points (no root taken).
double phi_z(const MetricInstance& instance, std::span<const PointId> points, std::span<const PointId> centers,
             double z);

/// Exact D++_z probabilities d(x,C)^z / Σ d(y,C)^z. All zero when C covers X at distance 0.
std::vector<double> dppz_probabilities(const MetricInstance& instance, std::span<const PointId> centers, double z);

/// Full-information reference sampler; nullopt when every point is at distance 0 from C.
std::optional<PointId> sample_dppz(const MetricInstance& instance, std::span<const PointId> centers, double z,
                                   Rng& rng);

/// ceil(7·log_b k), at least 1.
std::size_t draws_per_ring(std::size_t k, double log_base = 2.0);

/// ceil(log_b x) rounded up robustly, at least 1.
std::size_t ceil_log(double x, double log_base = 2.0);

/// Per point: the single-draw probability 1/|ring| of the ring holding it
/// under the clustering induced by C.
std::vector<double> ring_draw_probabilities(const PreferenceProfile& profile, std::span<const PointId> centers);

/// One adaptive pass: uniform draws with replacement from every ring of every
/// cluster. Returns the drawn points not already in C, in draw order.
std::vector<PointId> zero_query_sampler_pass(const PreferenceProfile& profile, std::span<const PointId> centers,
                                             std::size_t draws, Rng& rng);

enum class Augment { zero, two_k };

struct ZeroQueryOptions {
    std::optional<std::size_t> passes;  // default k−1
    Augment augment = Augment::zero;
    double log_base = 2.0;
};

/// Snapshot of one sampling round, handed to an observer.
struct RoundTrace {
    std::size_t round = 0;
    std::vector<PointId> centers;                // C at the start of the round
    std::vector<std::size_t> ring_size;          // per point
    std::vector<double> ring_estimate;           // per point: estimated cost of its ring (low-query only)
    std::vector<double> estimated_probability;   // per point \hat p (low-query only)
    std::vector<double> inclusion_probability;   // per point, for one draw or one round
    std::vector<PointId> added;
};

using RoundObserver = std::function<void(const RoundTrace&)>;

/// Zero-query bicriteria sampler for (k,z)-clustering, augmented with a
/// k-center solution. With Augment::two_k the augmentation spends ≤ 2k queries
/// on `ledger`; otherwise the ledger is left untouched.
Solution kz_zero_query(const MetricInstance& instance, const PreferenceProfile& profile, std::size_t k, Rng& rng,
                       QueryLedger& ledger, const ZeroQueryOptions& options = {},
                       const RoundObserver& observer = {});

/// Union of ceil(log n) independent runs of the sampler plus one augmentation.
Solution kz_zero_query_amplified(const MetricInstance& instance, const PreferenceProfile& profile, std::size_t k,
                                 Rng& rng, QueryLedger& ledger, const ZeroQueryOptions& options = {},
                                 const RoundObserver& observer = {});

/// Closed-form upper bound on |C| for one run of kz_zero_query.
std::size_t zero_query_center_bound(std::size_t n, std::size_t k, const ZeroQueryOptions& options = {});

/// Estimated cost of ring `ring`: its size times d(c, r)^z, where r is the
/// ordinally nearest member of the next ring outward (the ring itself for
/// the outermost ring). Costs one query.
double estimated_ring_cost(QueryLedger& ledger, const PreferenceProfile& profile, const MetricInstance& instance,
                           const RingPartition& partition, std::size_t ring, double z = 1.0);

struct LowQueryOptions {
    std::optional<std::size_t> rounds;  // T, default ceil(40·k·log n)
    double log_base = 2.0;
};

struct LowQueryResult {
    Solution solution;               // k centers after the weighted reduction
    std::vector<PointId> sampled;    // the bicriteria set before reduction
    std::size_t rounds_run = 0;
    std::size_t reduction_queries = 0;
};

std::size_t default_rounds(std::size_t n, std::size_t k, double log_base = 2.0);

/// Low-query (k,z) sampler with estimated ring costs, reduced to k centers by
/// an exact weighted solve over the sampled set.
LowQueryResult kmedian_low_query(const MetricInstance& instance, const PreferenceProfile& profile, std::size_t k,
                                 double z, QueryLedger& ledger, Rng& rng, const LowQueryOptions& options = {},
                                 const RoundObserver& observer = {});

/// Exact E[φ^z_{C∪{c}}(A)] when c is drawn from D++_z restricted to A.
/// nullopt when φ_C(A) = 0.
std::optional<double> expected_cost_after_draw(const MetricInstance& instance, std::span<const PointId> centers,
                                               std::span<const PointId> cluster, double z);

/// φ_C(A) ≤ 10·φ_{C*}(A).
bool is_covered(const MetricInstance& instance, std::span<const PointId> cluster, std::span<const PointId> centers,
                std::span<const PointId> optimal_centers, double z);

}  // namespace ordclust
