#include "ordclust/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ordclust {

Objective Objective::kz(double z) {
    if (!(z >= 1.0)) throw std::invalid_argument("z must be >= 1");
    return {Kind::kz, z, 0.0};
}

Objective Objective::facility(double opening_cost) {
    if (!(opening_cost > 0.0)) throw std::invalid_argument("opening cost must be positive");
    return {Kind::facility, 1.0, opening_cost};
}

std::string to_string(Objective::Kind kind) {
    switch (kind) {
        case Objective::Kind::kcenter: return "kcenter";
        case Objective::Kind::kz: return "kz";
        case Objective::Kind::facility: return "facility";
    }
    return "?";
}

std::string Objective::name() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::kcenter: out << "kcenter"; break;
        case Kind::kz: out << "kz(z=" << z << ")"; break;
        case Kind::facility: out << "facility(f=" << opening_cost << ")"; break;
    }
    return out.str();
}

std::vector<double> distances_to_centers(const MetricInstance& instance, std::span<const PointId> centers) {
    if (centers.empty()) throw std::invalid_argument("center set must be nonempty");
    const std::size_t n = instance.size();
    std::vector<double> d(n, std::numeric_limits<double>::infinity());
    for (PointId c : centers) {
        auto row = instance.row(c);
        for (std::size_t x = 0; x < n; ++x) d[x] = std::min(d[x], row[x]);
    }
    return d;
}

double aggregate(std::span<const double> distances, const Objective& objective) {
    if (distances.empty()) return 0.0;
    const bool as_max = objective.kind == Objective::Kind::kcenter ||
                        (objective.kind == Objective::Kind::kz && objective.z > kMaxFiniteZ);
    if (as_max) return *std::max_element(distances.begin(), distances.end());

    const double z = objective.kind == Objective::Kind::kz ? objective.z : 1.0;
    if (z == 1.0) {
        double sum = 0.0;
        for (double d : distances) sum += d;
        return sum;
    }
    const double m = *std::max_element(distances.begin(), distances.end());
    if (m == 0.0) return 0.0;
    double acc = 0.0;
    for (double d : distances) acc += std::pow(d / m, z);
    return m * std::pow(acc, 1.0 / z);
}

double cost(const MetricInstance& instance, std::span<const PointId> centers, const Objective& objective) {
    auto d = distances_to_centers(instance, centers);
    double value = aggregate(d, objective);
    if (objective.kind == Objective::Kind::facility) {
        value += objective.opening_cost * static_cast<double>(centers.size());
    }
    return value;
}

double cost_of_subset(const MetricInstance& instance, std::span<const PointId> points,
                      std::span<const PointId> centers, const Objective& objective) {
    if (centers.empty()) throw std::invalid_argument("center set must be nonempty");
    std::vector<double> d;
    d.reserve(points.size());
    for (PointId x : points) {
        double best = std::numeric_limits<double>::infinity();
        for (PointId c : centers) best = std::min(best, instance.distance(x, c));
        d.push_back(best);
    }
    double value = aggregate(d, objective);
    if (objective.kind == Objective::Kind::facility) {
        value += objective.opening_cost * static_cast<double>(centers.size());
    }
    return value;
}

}  // namespace ordclust
