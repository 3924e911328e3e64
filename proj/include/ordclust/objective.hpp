#pragma once

#include <span>
#include <string>
#include <vector>

#include "ordclust/metric.hpp"

namespace ordclust {

/// Exponents above this are evaluated as k-center.
inline constexpr double kMaxFiniteZ = 64.0;

struct Objective {
    enum class Kind { kcenter, kz, facility };

    Kind kind = Kind::kz;
    double z = 1.0;
    double opening_cost = 0.0;

    static Objective kcenter() { return {Kind::kcenter, 0.0, 0.0}; }
    static Objective kz(double z);
    static Objective kmedian() { return kz(1.0); }
    static Objective facility(double opening_cost);

    std::string name() const;
};

std::string to_string(Objective::Kind kind);

struct Solution {
    std::vector<PointId> centers;  // selection order, distinct
    Objective::Kind kind = Objective::Kind::kz;
};

/// d(x, C) for every point.
std::vector<double> distances_to_centers(const MetricInstance& instance, std::span<const PointId> centers);

/// Full-information objective value of a center set.
///
/// (k,z): z-th root of the sum of z-th powers, computed as m·(Σ(d/m)^z)^(1/z)
/// with m the largest distance; k-center: the largest distance;
/// facility: connection sum plus opening cost per center.
double cost(const MetricInstance& instance, std::span<const PointId> centers, const Objective& objective);

/// Same as cost() but over a subset of points only (centers still range over X).
double cost_of_subset(const MetricInstance& instance, std::span<const PointId> points,
                      std::span<const PointId> centers, const Objective& objective);

/// Combines per-point distances under an objective (opening cost excluded).
double aggregate(std::span<const double> distances, const Objective& objective);

}  // namespace ordclust
