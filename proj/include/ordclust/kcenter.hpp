#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordclust/ledger.hpp"
#include "ordclust/metric.hpp"
#include "ordclust/objective.hpp"
#include "ordclust/profile.hpp"

namespace ordclust {

/// Farthest-first traversal with one query per cluster per iteration.
/// Starts from point 0; issues exactly (k²−k)/2 query operations.
Solution kcenter_quadratic(const MetricInstance& instance, const PreferenceProfile& profile, std::size_t k,
                           QueryLedger& ledger);

/// Zero-query variant: every iteration adds the farthest member of every
/// cluster. Returns min(2^(k−1), n) centers.
Solution kcenter_zero_query(const PreferenceProfile& profile, std::size_t k);

/// One iteration of the 2k-query algorithm, as seen before its selection.
/// The last step of a trace is a snapshot of the final state (no selection).
struct KCenterStep {
    std::size_t iteration = 0;
    std::vector<PointId> centers;       // C_i in selection order
    std::vector<PointId> query_set;     // Q_i
    std::vector<PointPair> farthest;    // (center, farthest member of its cluster) for every center in C_i
    PointId selected_center = kNoPoint;
    PointId selected_point = kNoPoint;
    std::vector<PointPair> revealed;    // ledger contents after the selection queries

    bool is_final() const noexcept { return selected_point == kNoPoint; }
};

using KCenterTrace = std::vector<KCenterStep>;

/// ½-approximate farthest-first traversal that keeps a query set of
/// (center, farthest point) pairs. Uses at most 2k distinct queries.
Solution kcenter_2k_query(const MetricInstance& instance, const PreferenceProfile& profile, std::size_t k,
                          QueryLedger& ledger, KCenterTrace* trace = nullptr);

/// For every step i and every y in Q_i whose farthest point z was not added
/// to C_(i+1), checks that z is still y's farthest point in step i+1.
/// Throws std::invalid_argument on a malformed trace.
bool verify_farthest_invariant(const KCenterTrace& trace);

/// First selection step whose chosen point is closer to the centers than
/// half the largest point-to-center distance, if any.
std::optional<std::size_t> find_half_fft_violation(const MetricInstance& instance, const KCenterTrace& trace);

}  // namespace ordclust
