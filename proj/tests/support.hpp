#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ordclust/metric.hpp"
#include "ordclust/objective.hpp"
#include "ordclust/profile.hpp"
#include "ordclust/rng.hpp"

namespace testing {

using namespace ordclust;

// Points a=0, b=1, c=3, d=7 on a line.
inline constexpr PointId A = 0, B = 1, C = 2, D = 3;

inline MetricInstance line_metric() { return MetricInstance::from_points({{0.0}, {1.0}, {3.0}, {7.0}}, Norm::l1); }

inline MetricInstance random_euclidean(std::size_t n, std::uint64_t seed, std::size_t dim = 2) {
    Rng rng(seed);
    return uniform_cube_instance(n, rng, dim);
}

// Random instance with integer coordinates, so exact ties and duplicate
// points are common.
inline MetricInstance random_grid(std::size_t n, std::uint64_t seed, int side = 4) {
    Rng rng(seed);
    std::uniform_int_distribution<int> coord(0, side);
    std::vector<std::vector<double>> pts(n);
    for (auto& p : pts) p = {double(coord(rng)), double(coord(rng))};
    return MetricInstance::from_points(std::move(pts), Norm::l1);
}

// Second enumerator for the oracle: subsets visited in reverse colex order
// via a selection mask, costs through the public cost() only.
struct Enumerated {
    double cost = std::numeric_limits<double>::infinity();
    std::vector<PointId> centers;
};

inline Enumerated enumerate_by_mask(const MetricInstance& inst, std::size_t k, const Objective& obj) {
    const std::size_t n = inst.size();
    std::vector<char> mask(n, 0);
    for (std::size_t i = n - k; i < n; ++i) mask[i] = 1;
    Enumerated best;
    do {
        std::vector<PointId> s;
        for (PointId x = 0; x < n; ++x) {
            if (mask[x]) s.push_back(x);
        }
        const double v = cost(inst, s, obj);
        if (v < best.cost) best = {v, s};
    } while (std::next_permutation(mask.begin(), mask.end()));
    return best;
}

inline Enumerated enumerate_facility_by_mask(const MetricInstance& inst, double f) {
    const std::size_t n = inst.size();
    Enumerated best;
    for (std::size_t bits = (std::size_t{1} << n) - 1; bits >= 1; --bits) {
        std::vector<PointId> s;
        for (PointId x = 0; x < n; ++x) {
            if (bits >> x & 1) s.push_back(x);
        }
        const double v = cost(inst, s, Objective::facility(f));
        if (v < best.cost) best = {v, s};
    }
    return best;
}

}  // namespace testing
