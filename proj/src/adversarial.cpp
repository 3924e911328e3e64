#include "ordclust/adversarial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "ordclust/objective.hpp"

namespace ordclust {

namespace {

std::size_t depth_of(std::size_t node) { return static_cast<std::size_t>(std::bit_width(node)) - 1; }

std::size_t lca(std::size_t a, std::size_t b) {
    while (depth_of(a) > depth_of(b)) a >>= 1;
    while (depth_of(b) > depth_of(a)) b >>= 1;
    while (a != b) {
        a >>= 1;
        b >>= 1;
    }
    return a;
}

bool is_ancestor(std::size_t node, std::size_t leaf) {
    const std::size_t dn = depth_of(node), dl = depth_of(leaf);
    return dn <= dl && (leaf >> (dl - dn)) == node;
}

std::vector<std::size_t> root_path(std::size_t leaf) {
    std::vector<std::size_t> path;
    for (std::size_t v = leaf; v >= 1; v >>= 1) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// First leaf (0-based) under `node` in a tree whose leaves sit at `leaf_depth`.
std::size_t leftmost_leaf(std::size_t node, std::size_t leaf_depth) {
    return (node << (leaf_depth - depth_of(node))) - (std::size_t{1} << leaf_depth);
}

// Children of the path that are not on it, one per interior path node.
std::vector<std::size_t> off_path_children(const std::vector<std::size_t>& path) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) out.push_back(path[i + 1] ^ 1);
    return out;
}

template <class Key>
std::vector<std::vector<PointId>> rankings_by(std::size_t n, Key key) {
    std::vector<std::vector<PointId>> rankings(n, std::vector<PointId>(n));
    for (PointId x = 0; x < n; ++x) {
        auto& r = rankings[x];
        std::iota(r.begin(), r.end(), PointId{0});
        std::sort(r.begin(), r.end(), [&](PointId a, PointId b) { return key(x, a) < key(x, b); });
    }
    return rankings;
}

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

Generated<TreeDescriptor> gen_kcenter_tree(const TreeInstanceSpec& spec, Rng& rng) {
    if (spec.k < 2) throw std::invalid_argument("tree instance needs k >= 2");
    if (spec.k > kMaxTreeK) throw std::invalid_argument("tree instance supports k <= " + std::to_string(kMaxTreeK));
    if (!(spec.D >= 1.0)) throw std::invalid_argument("D must be at least 1");

    const std::size_t leaf_depth = spec.k - 1;
    const std::size_t n = std::size_t{1} << leaf_depth;
    const auto r = static_cast<PointId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    const std::size_t r_node = n + r;

    std::vector<double> d(n * n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            const std::size_t a = lca(n + x, n + y);
            d[x * n + y] = d[y * n + x] = is_ancestor(a, r_node) ? spec.D : 1.0;
        }
    }
    auto instance = MetricInstance::from_flat(n, std::move(d), n > kTriangleCheckLimit);
    auto rankings = rankings_by(n, [&](PointId x, PointId y) {
        return std::make_tuple(x != y, leaf_depth - depth_of(lca(n + x, n + y)), y);
    });
    auto profile = PreferenceProfile::from_rankings(instance, rankings);

    TreeDescriptor desc;
    desc.k = spec.k;
    desc.D = spec.D;
    desc.hidden_leaf = r;
    desc.path = root_path(r_node);
    desc.canonical_centers.push_back(r);
    for (std::size_t child : off_path_children(desc.path)) {
        desc.canonical_centers.push_back(static_cast<PointId>(leftmost_leaf(child, leaf_depth)));
    }
    std::sort(desc.canonical_centers.begin(), desc.canonical_centers.end());
    desc.opt_closed_form = spec.k == 2 ? 0.0 : 1.0;
    desc.opt_cost = cost(instance, desc.canonical_centers, Objective::kcenter());
    return {std::move(instance), std::move(profile), std::move(desc)};
}

Generated<BundleDescriptor> gen_kmedian_bundles(const BundleInstanceSpec& spec, Rng& rng) {
    if (spec.k < 2) throw std::invalid_argument("bundle instance needs k >= 2");
    if (spec.alpha < 1 || !is_power_of_two(spec.alpha + 1)) {
        throw std::invalid_argument("alpha + 1 must be a power of two");
    }
    const std::size_t base = spec.alpha + 1;
    std::size_t top = 0;
    for (std::size_t p = 1; p < spec.n_prime; p *= base) ++top;
    std::size_t check = 1;
    for (std::size_t i = 0; i < top; ++i) check *= base;
    if (top < 1 || check != spec.n_prime) throw std::invalid_argument("n' must be a positive power of alpha + 1");
    if (!(spec.eps > 0.0) || !(spec.D >= 1.0)) throw std::invalid_argument("need eps > 0 and D >= 1");

    std::vector<std::size_t> offset{0};
    for (std::size_t i = 0, size = 1; i <= top; ++i, size *= base) offset.push_back(offset.back() + size);
    const std::size_t gadget = offset.back();
    const std::size_t tree_depth = spec.k - 2;
    const std::size_t leaves = std::size_t{1} << tree_depth;
    const std::size_t n = leaves * gadget;
    if (spec.k - 1 > kMaxTreeK || n > (std::size_t{1} << (kMaxTreeK - 1))) {
        throw std::invalid_argument("bundle instance too large (n = " + std::to_string(n) + ")");
    }

    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, leaves - 1)(rng);
    const std::size_t level = std::uniform_int_distribution<std::size_t>(0, top - 1)(rng);
    const std::size_t r_node = leaves + r;

    std::vector<std::size_t> gadget_of(n), bundle_of(n);
    for (std::size_t p = 0; p < n; ++p) {
        gadget_of[p] = p / gadget;
        const std::size_t local = p % gadget;
        bundle_of[p] = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), local) - offset.begin()) - 1;
    }

    auto distance = [&](std::size_t p, std::size_t q) {
        if (p == q) return 0.0;
        const std::size_t u = gadget_of[p], v = gadget_of[q];
        if (u != v) return is_ancestor(lca(leaves + u, leaves + v), r_node) ? spec.D : spec.eps;
        if (u != r) return spec.eps;
        const std::size_t i = bundle_of[p], j = bundle_of[q];
        if (i == j) return i >= level ? spec.eps : 1.0;
        return i > level && j > level ? spec.eps : 1.0;
    };
    std::vector<double> d(n * n, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) d[p * n + q] = d[q * n + p] = distance(p, q);
    }
    auto instance = MetricInstance::from_flat(n, std::move(d), n > kTriangleCheckLimit);

    auto rankings = rankings_by(n, [&](PointId p, PointId q) {
        std::size_t group = 0, secondary = 0;
        if (p == q) {
            group = 0;
        } else if (gadget_of[p] == gadget_of[q]) {
            group = bundle_of[p] == bundle_of[q] ? 1 : 2;
            secondary = top - bundle_of[q];
        } else {
            group = 3;
            secondary = tree_depth - depth_of(lca(leaves + gadget_of[p], leaves + gadget_of[q]));
        }
        return std::make_tuple(group, secondary, q);
    });
    auto profile = PreferenceProfile::from_rankings(instance, rankings);

    BundleDescriptor desc;
    desc.k = spec.k;
    desc.alpha = spec.alpha;
    desc.hidden_leaf = r;
    desc.level = level;
    desc.path = root_path(r_node);
    desc.bundle_count = top + 1;
    desc.gadget_size = gadget;
    for (std::size_t child : off_path_children(desc.path)) {
        desc.canonical_centers.push_back(static_cast<PointId>(leftmost_leaf(child, tree_depth) * gadget));
    }
    desc.canonical_centers.push_back(static_cast<PointId>(r * gadget + offset[level]));
    desc.canonical_centers.push_back(static_cast<PointId>(r * gadget + offset[top]));
    std::sort(desc.canonical_centers.begin(), desc.canonical_centers.end());
    double power = 1.0;
    for (std::size_t i = 0; i < level; ++i) power *= static_cast<double>(base);
    desc.opt_closed_form = (power - 1.0) / static_cast<double>(spec.alpha);
    desc.opt_cost = cost(instance, desc.canonical_centers, Objective::kmedian());
    return {std::move(instance), std::move(profile), std::move(desc)};
}

Generated<FacilityDescriptor> gen_facility_hard(const FacilityHardSpec& spec, Rng& rng) {
    const std::size_t s = spec.cluster_size, m = spec.clusters;
    if (s < 2) throw std::invalid_argument("cluster size must be at least 2");
    if (m < 1) throw std::invalid_argument("need at least one cluster");
    if (!(spec.eps > 0.0) || !(spec.opening_cost > 0.0)) throw std::invalid_argument("need eps > 0 and f > 0");
    const double N = spec.N > 0.0 ? spec.N : 10.0 * static_cast<double>(m + s);
    if (!(N > spec.eps)) throw std::invalid_argument("N must exceed eps");

    const std::size_t n = s * m;
    const std::size_t special = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
    const bool far = std::bernoulli_distribution(0.5)(rng);

    std::vector<double> d(n * n, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const std::size_t cp = p / s, cq = q / s;
            const double v = cp != cq ? 2.0 * N : (cp == special && far ? N : spec.eps);
            d[p * n + q] = d[q * n + p] = v;
        }
    }
    auto instance = MetricInstance::from_flat(n, std::move(d), n > kTriangleCheckLimit);
    auto rankings = rankings_by(n, [&](PointId p, PointId q) {
        return std::make_tuple(p != q, p / s != q / s, q);
    });
    auto profile = PreferenceProfile::from_rankings(instance, rankings);

    FacilityDescriptor desc;
    desc.special_cluster = special;
    desc.far = far;
    desc.N = N;
    desc.opening_cost = spec.opening_cost;
    for (std::size_t c = 0; c < m; ++c) {
        const std::size_t open = c == special && far ? s : 1;
        for (std::size_t i = 0; i < open; ++i) desc.canonical_centers.push_back(static_cast<PointId>(c * s + i));
    }
    desc.opt_closed_form = spec.opening_cost * static_cast<double>(far ? m + s - 1 : m);
    desc.opt_cost = cost(instance, desc.canonical_centers, Objective::facility(spec.opening_cost));
    return {std::move(instance), std::move(profile), std::move(desc)};
}

}  // namespace ordclust
