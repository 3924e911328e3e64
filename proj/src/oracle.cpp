#include "ordclust/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ordclust {

namespace {

void require_budget(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("k = " + std::to_string(k) + " is outside [1, " + std::to_string(n) + "]");
    }
    if (!within_budget(n, k)) {
        throw OracleBudgetExceeded("C(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds the oracle budget");
    }
}

// Lexicographic enumeration of k-subsets with incremental nearest-center
// distances; `leaf` scores a completed subset from its distance array.
template <class Row, class Leaf>
std::vector<std::size_t> enumerate_subsets(std::size_t m, std::size_t k, Row row, Leaf leaf) {
    std::vector<std::vector<double>> mins(k + 1, std::vector<double>(m, std::numeric_limits<double>::infinity()));
    std::vector<std::size_t> chosen(k), best;
    double best_value = std::numeric_limits<double>::infinity();

    auto dfs = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        if (depth == k) {
            const double value = leaf(mins[k]);
            if (best.empty() || value < best_value) {
                best_value = value;
                best = chosen;
            }
            return;
        }
        for (std::size_t c = start; c + (k - depth) <= m; ++c) {
            chosen[depth] = c;
            const auto& prev = mins[depth];
            auto& next = mins[depth + 1];
            const auto r = row(c);
            for (std::size_t x = 0; x < m; ++x) next[x] = std::min(prev[x], r[x]);
            self(self, depth + 1, c + 1);
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

// Exact k-center via covering search at candidate radii.
class CoverSearch {
public:
    CoverSearch(const MetricInstance& instance, std::size_t k) : inst_(instance), n_(instance.size()), k_(k) {}

    std::vector<PointId> solve() {
        std::vector<double> radii;
        radii.reserve(n_ * (n_ - 1) / 2 + 1);
        radii.push_back(0.0);
        for (PointId x = 0; x < n_; ++x) {
            for (PointId y = x + 1; y < n_; ++y) radii.push_back(inst_.distance(x, y));
        }
        std::sort(radii.begin(), radii.end());
        radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

        std::size_t lo = 0, hi = radii.size() - 1;  // radii[hi] is always feasible
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            set_radius(radii[mid]);
            if (completes(0)) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        set_radius(radii[lo]);

        // Lexicographically first subset: fix positions one at a time.
        std::vector<PointId> chosen;
        for (std::size_t pos = 0; pos < k_; ++pos) {
            const PointId from = chosen.empty() ? 0 : chosen.back() + 1;
            for (PointId c = from; c < n_; ++c) {
                place(c, +1);
                if (completes(c + 1, k_ - pos - 1)) {
                    chosen.push_back(c);
                    break;
                }
                place(c, -1);
            }
        }
        return chosen;
    }

private:
    void set_radius(double r) {
        ball_.assign(n_, {});
        for (PointId x = 0; x < n_; ++x) {
            for (PointId c = 0; c < n_; ++c) {
                if (inst_.distance(x, c) <= r) ball_[x].push_back(c);
            }
        }
        covered_.assign(n_, 0);
    }

    void place(PointId c, int delta) {
        for (PointId x : ball_[c]) covered_[x] += delta;
    }

    bool completes(PointId min_id) { return completes(min_id, k_); }

    // Can the uncovered points be covered by at most `slots` new distinct
    // centers with ids ≥ min_id, leaving enough ids to pad to exactly `slots`?
    bool completes(PointId min_id, std::size_t slots) {
        if (n_ - min_id < slots) return false;
        return extend(min_id, slots);
    }

    bool extend(PointId min_id, std::size_t slots) {
        PointId x = 0;
        while (x < n_ && covered_[x] > 0) ++x;
        if (x == n_) return true;
        if (slots == 0) return false;
        for (PointId c : ball_[x]) {
            if (c < min_id) continue;
            place(c, +1);
            const bool ok = extend(min_id, slots - 1);
            place(c, -1);
            if (ok) return true;
        }
        return false;
    }

    const MetricInstance& inst_;
    std::size_t n_;
    std::size_t k_;
    std::vector<std::vector<PointId>> ball_;
    std::vector<int> covered_;
};

}  // namespace

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double v = 1.0;
    for (std::size_t i = 1; i <= k; ++i) v = v * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(v);
}

bool within_budget(std::size_t n, std::size_t k) { return binomial(n, k) <= kOracleBudget; }

OptimalSolution brute_force_opt(const MetricInstance& instance, std::size_t k, const Objective& objective) {
    if (objective.kind == Objective::Kind::facility) return brute_force_facility_opt(instance, objective.opening_cost);
    const std::size_t n = instance.size();
    require_budget(n, k);

    OptimalSolution out;
    out.solution.kind = objective.kind;
    if (objective.kind == Objective::Kind::kcenter) {
        out.solution.centers = CoverSearch(instance, k).solve();
    } else {
        const auto best = enumerate_subsets(
            n, k, [&](std::size_t c) { return instance.row(static_cast<PointId>(c)); },
            [&](const std::vector<double>& d) { return aggregate(d, objective); });
        out.solution.centers.assign(best.begin(), best.end());
    }
    out.cost = cost(instance, out.solution.centers, objective);
    return out;
}

OptimalSolution brute_force_facility_opt(const MetricInstance& instance, double opening_cost) {
    const std::size_t n = instance.size();
    if (n > kFacilityOracleMaxN) {
        throw OracleBudgetExceeded("facility oracle supports n <= " + std::to_string(kFacilityOracleMaxN));
    }
    const Objective objective = Objective::facility(opening_cost);

    std::vector<std::vector<double>> mins(n + 1, std::vector<double>(n, std::numeric_limits<double>::infinity()));
    std::vector<PointId> chosen, best;
    double best_value = std::numeric_limits<double>::infinity();
    auto dfs = [&](auto&& self, PointId start) -> void {
        for (PointId c = start; c < n; ++c) {
            const std::size_t depth = chosen.size();
            auto& next = mins[depth + 1];
            const auto r = instance.row(c);
            for (std::size_t x = 0; x < n; ++x) next[x] = std::min(mins[depth][x], r[x]);
            chosen.push_back(c);
            double value = 0.0;
            for (double d : next) value += d;
            value += opening_cost * static_cast<double>(chosen.size());
            if (best.empty() || value < best_value) {
                best_value = value;
                best = chosen;
            }
            self(self, c + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);

    OptimalSolution out;
    out.solution = {best, Objective::Kind::facility};
    out.cost = cost(instance, best, objective);
    return out;
}

double distortion_ratio(double cost_value, double opt) {
    if (opt == 0.0) return cost_value == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return cost_value / opt;
}

double distortion(const MetricInstance& instance, const Solution& solution, std::size_t k,
                  const Objective& objective) {
    const double opt = brute_force_opt(instance, k, objective).cost;
    return distortion_ratio(cost(instance, solution.centers, objective), opt);
}

std::vector<std::size_t> weighted_kz_opt(std::span<const double> distances, std::span<const double> weights,
                                         std::size_t k, double z) {
    const std::size_t m = weights.size();
    if (distances.size() != m * m) throw std::invalid_argument("distance matrix does not match the weights");
    require_budget(m, k);
    return enumerate_subsets(
        m, k, [&](std::size_t c) { return distances.subspan(c * m, m); },
        [&](const std::vector<double>& d) {
            double value = 0.0;
            for (std::size_t i = 0; i < m; ++i) value += weights[i] * (z == 1.0 ? d[i] : std::pow(d[i], z));
            return value;
        });
}

}  // namespace ordclust
