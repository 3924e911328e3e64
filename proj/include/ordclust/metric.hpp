#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordclust/rng.hpp"

namespace ordclust {

/// Dense index of a point, in [0, n).
using PointId = std::uint32_t;

inline constexpr PointId kNoPoint = static_cast<PointId>(-1);

enum class Norm { l1, l2 };

std::string to_string(Norm norm);
Norm parse_norm(const std::string& name);

/// Thrown when distances do not describe a valid (pseudo)metric.
class InvalidInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable finite metric space with exact pairwise distances.
///
/// Distances are kept as a dense row-major matrix regardless of how the
/// instance was created. Coordinates are retained when the instance was
/// built from points, so it can be written back in the same form.
class MetricInstance {
public:
    static MetricInstance from_matrix(const std::vector<std::vector<double>>& rows,
                                      bool waive_triangle_check = false);
    static MetricInstance from_flat(std::size_t n, std::vector<double> distances,
                                    bool waive_triangle_check = false);
    static MetricInstance from_points(std::vector<std::vector<double>> points, Norm norm);

    std::size_t size() const noexcept { return n_; }

    double distance(PointId x, PointId y) const noexcept { return d_[x * n_ + y]; }
    double operator()(PointId x, PointId y) const noexcept { return distance(x, y); }

    std::span<const double> row(PointId x) const noexcept {
        return {d_.data() + static_cast<std::size_t>(x) * n_, n_};
    }

    bool triangle_check_waived() const noexcept { return waived_; }
    bool has_points() const noexcept { return norm_.has_value(); }
    const std::vector<std::vector<double>>& points() const noexcept { return points_; }
    std::optional<Norm> norm() const noexcept { return norm_; }

    std::vector<std::vector<double>> matrix() const;

private:
    MetricInstance() = default;

    std::size_t n_ = 0;
    std::vector<double> d_;
    std::vector<std::vector<double>> points_;
    std::optional<Norm> norm_;
    bool waived_ = false;
};

/// Relative slack used by the triangle-inequality validator.
inline constexpr double kTriangleTolerance = 1e-9;

/// Checks every triple; returns a description of the first violation.
std::optional<std::string> find_triangle_violation(const MetricInstance& instance);

/// Uniform random points in the unit hypercube under the given norm.
MetricInstance uniform_cube_instance(std::size_t n, Rng& rng, std::size_t dim = 2,
                                     Norm norm = Norm::l2);

}  // namespace ordclust
