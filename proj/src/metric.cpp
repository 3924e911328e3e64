#include "ordclust/metric.hpp"

#include <cmath>
#include <sstream>

namespace ordclust {

std::string to_string(Norm norm) {
    return norm == Norm::l1 ? "l1" : "l2";
}

Norm parse_norm(const std::string& name) {
    if (name == "l1") return Norm::l1;
    if (name == "l2") return Norm::l2;
    throw std::invalid_argument("unknown norm '" + name + "' (expected l1 or l2)");
}

namespace {

void check_entries(std::size_t n, std::vector<double>& d) {
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i * n + i] != 0.0) {
            throw InvalidInstance("nonzero diagonal entry at " + std::to_string(i));
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            double a = d[i * n + j];
            double b = d[j * n + i];
            if (!std::isfinite(a) || !std::isfinite(b)) {
                throw InvalidInstance("non-finite distance between " + std::to_string(i) + " and " +
                                      std::to_string(j));
            }
            if (a < 0.0 || b < 0.0) {
                throw InvalidInstance("negative distance between " + std::to_string(i) + " and " +
                                      std::to_string(j));
            }
            if (std::abs(a - b) > 1e-12 * std::max(1.0, std::max(a, b))) {
                throw InvalidInstance("asymmetric distances between " + std::to_string(i) + " and " +
                                      std::to_string(j));
            }
            d[j * n + i] = a;
        }
    }
}

}  // namespace

MetricInstance MetricInstance::from_flat(std::size_t n, std::vector<double> distances,
                                         bool waive_triangle_check) {
    if (n == 0) throw InvalidInstance("instance must contain at least one point");
    if (distances.size() != n * n) throw InvalidInstance("distance matrix must be n x n");
    check_entries(n, distances);

    MetricInstance inst;
    inst.n_ = n;
    inst.d_ = std::move(distances);
    inst.waived_ = waive_triangle_check;
    if (!waive_triangle_check) {
        if (auto violation = find_triangle_violation(inst)) throw InvalidInstance(*violation);
    }
    return inst;
}

MetricInstance MetricInstance::from_matrix(const std::vector<std::vector<double>>& rows,
                                           bool waive_triangle_check) {
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw InvalidInstance("distance matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_flat(n, std::move(flat), waive_triangle_check);
}

MetricInstance MetricInstance::from_points(std::vector<std::vector<double>> points, Norm norm) {
    const std::size_t n = points.size();
    if (n == 0) throw InvalidInstance("instance must contain at least one point");
    const std::size_t dim = points.front().size();
    for (const auto& p : points) {
        if (p.size() != dim) throw InvalidInstance("points must share one dimension");
        for (double c : p) {
            if (!std::isfinite(c)) throw InvalidInstance("non-finite coordinate");
        }
    }

    MetricInstance inst;
    inst.n_ = n;
    inst.d_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t t = 0; t < dim; ++t) {
                double diff = points[i][t] - points[j][t];
                acc += norm == Norm::l1 ? std::abs(diff) : diff * diff;
            }
            double dist = norm == Norm::l1 ? acc : std::sqrt(acc);
            inst.d_[i * n + j] = dist;
            inst.d_[j * n + i] = dist;
        }
    }
    inst.points_ = std::move(points);
    inst.norm_ = norm;
    return inst;
}

std::vector<std::vector<double>> MetricInstance::matrix() const {
    std::vector<std::vector<double>> rows(n_);
    for (std::size_t i = 0; i < n_; ++i) rows[i].assign(d_.begin() + i * n_, d_.begin() + (i + 1) * n_);
    return rows;
}

std::optional<std::string> find_triangle_violation(const MetricInstance& instance) {
    const std::size_t n = instance.size();
    for (PointId x = 0; x < n; ++x) {
        auto dx = instance.row(x);
        for (PointId y = 0; y < n; ++y) {
            auto dy = instance.row(y);
            const double dxy = dx[y];
            for (PointId z = 0; z < n; ++z) {
                const double bound = (dxy + dy[z]) * (1.0 + kTriangleTolerance);
                if (dx[z] > bound) {
                    std::ostringstream msg;
                    msg << "triangle inequality violated: d(" << x << "," << z << ")=" << dx[z] << " > d(" << x
                        << "," << y << ")+d(" << y << "," << z << ")=" << dxy + dy[z];
                    return msg.str();
                }
            }
        }
    }
    return std::nullopt;
}

MetricInstance uniform_cube_instance(std::size_t n, Rng& rng, std::size_t dim, Norm norm) {
    std::vector<std::vector<double>> points(n, std::vector<double>(dim));
    for (auto& p : points) {
        for (auto& c : p) c = uniform01(rng);
    }
    return MetricInstance::from_points(std::move(points), norm);
}

}  // namespace ordclust
