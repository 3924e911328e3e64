#pragma once

#include <cstddef>
#include <vector>

#include "ordclust/metric.hpp"
#include "ordclust/profile.hpp"
#include "ordclust/rng.hpp"

namespace ordclust {

/// Largest k accepted by the tree generators (n = 2^(k−1) leaves).
inline constexpr std::size_t kMaxTreeK = 13;

/// Generated instances above this size skip the O(n³) triangle check.
inline constexpr std::size_t kTriangleCheckLimit = 512;

template <class Descriptor>
struct Generated {
    MetricInstance instance;
    PreferenceProfile profile;
    Descriptor descriptor;
};

struct TreeInstanceSpec {
    std::size_t k = 2;
    double D = 1e3;
};

/// Points are the leaves of a complete binary tree of depth k−1; two leaves
/// are at the value of their lowest common ancestor. Nodes on a hidden
/// root-to-leaf path hold D, all others 1.
struct TreeDescriptor {
    std::size_t k = 0;
    double D = 0.0;
    PointId hidden_leaf = kNoPoint;
    std::vector<std::size_t> path;        // heap indices, root first
    std::vector<PointId> canonical_centers;
    double opt_closed_form = 0.0;
    double opt_cost = 0.0;                // k-center cost of canonical_centers
};

Generated<TreeDescriptor> gen_kcenter_tree(const TreeInstanceSpec& spec, Rng& rng);

struct BundleInstanceSpec {
    std::size_t k = 3;
    std::size_t alpha = 1;     // alpha + 1 must be a power of two
    std::size_t n_prime = 8;   // power of (alpha + 1)
    double D = 1e3;
    double eps = 1e-6;
};

/// A binary tree of depth k−2 with a 2-median gadget of bundles
/// B_0..B_L, |B_i| = (alpha+1)^i, under every leaf.
struct BundleDescriptor {
    std::size_t k = 0;
    std::size_t alpha = 0;
    std::size_t hidden_leaf = 0;         // gadget index r
    std::size_t level = 0;               // sampled bundle index
    std::vector<std::size_t> path;       // heap indices, root first
    std::size_t bundle_count = 0;
    std::size_t gadget_size = 0;
    std::vector<PointId> canonical_centers;
    double opt_closed_form = 0.0;        // ((alpha+1)^level − 1)/alpha
    double opt_cost = 0.0;               // k-median cost of canonical_centers
};

Generated<BundleDescriptor> gen_kmedian_bundles(const BundleInstanceSpec& spec, Rng& rng);

struct FacilityHardSpec {
    std::size_t cluster_size = 2;
    std::size_t clusters = 4;
    double N = 0.0;  // 0 selects 10·(clusters + cluster_size)
    double eps = 1e-6;
    double opening_cost = 1.0;
};

/// Clusters of s points at mutual distance eps, 2N apart; one hidden cluster
/// has mutual distance N instead when the coin comes up far.
struct FacilityDescriptor {
    std::size_t special_cluster = 0;
    bool far = false;
    double N = 0.0;
    double opening_cost = 0.0;
    std::vector<PointId> canonical_centers;
    double opt_closed_form = 0.0;
    double opt_cost = 0.0;  // facility cost of canonical_centers
};

Generated<FacilityDescriptor> gen_facility_hard(const FacilityHardSpec& spec, Rng& rng);

}  // namespace ordclust
