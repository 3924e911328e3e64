#pragma once

#include <cstdint>
#include <optional>

#include "ordclust/ledger.hpp"
#include "ordclust/metric.hpp"
#include "ordclust/objective.hpp"
#include "ordclust/profile.hpp"
#include "ordclust/rng.hpp"

namespace ordclust {

struct FacilityConfig {
    double opening_cost = 1.0;
    std::optional<std::uint64_t> permutation_seed;  // otherwise the permutation comes from the run's rng
};

/// Online facility location over a uniformly random arrival order. Each
/// arriving point costs one query (its distance to the open set) and opens
/// with probability min(1, d(x,C)/f).
Solution meyerson(const MetricInstance& instance, const PreferenceProfile& profile, const FacilityConfig& config,
                  QueryLedger& ledger, Rng& rng);

}  // namespace ordclust
