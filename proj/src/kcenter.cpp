#include "ordclust/kcenter.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace ordclust {

namespace {

void require_k(std::size_t k, std::size_t n, std::size_t min_k) {
    if (k < min_k) throw std::invalid_argument("k must be at least " + std::to_string(min_k));
    if (k > n) throw std::invalid_argument("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
}

bool contains(const std::vector<PointId>& set, PointId x) {
    return std::find(set.begin(), set.end(), x) != set.end();
}

// Once every cluster has radius zero the remaining picks cannot matter.
void pad_with_smallest_ids(std::vector<PointId>& centers, std::size_t k, std::size_t n) {
    std::vector<char> used(n);
    for (PointId c : centers) used[c] = 1;
    for (PointId x = 0; x < n && centers.size() < k; ++x) {
        if (!used[x]) centers.push_back(x);
    }
}

std::vector<PointId> farthest_members(const PreferenceProfile& profile, const Clustering& clustering) {
    std::vector<PointId> far(clustering.centers.size());
    for (std::size_t i = 0; i < far.size(); ++i) {
        far[i] = farthest_in_set(profile, clustering.centers[i], clustering.members[i]);
    }
    return far;
}

}  // namespace

Solution kcenter_quadratic(const MetricInstance& instance, const PreferenceProfile& profile, std::size_t k,
                           QueryLedger& ledger) {
    const std::size_t n = instance.size();
    require_k(k, n, 1);

    std::vector<PointId> centers{0};
    for (std::size_t it = 1; it < k; ++it) {
        const Clustering clustering = induced_clustering(profile, centers);
        const auto far = farthest_members(profile, clustering);

        double best = -1.0;
        std::size_t pick = 0;
        for (std::size_t i = 0; i < centers.size(); ++i) {
            const double delta = ledger.query(instance, centers[i], far[i]);
            const bool fresh = far[i] != centers[i];
            const bool pick_fresh = far[pick] != centers[pick];
            if (delta > best || (delta == best && fresh && !pick_fresh) ||
                (delta == best && fresh == pick_fresh && centers[i] < centers[pick])) {
                best = delta;
                pick = i;
            }
        }
        if (far[pick] == centers[pick]) {
            // Every cluster is a singleton: all further queries would be self-pairs.
            for (std::size_t rest = it + 1; rest < k; ++rest) {
                for (PointId c : centers) ledger.query(instance, c, c);
                pad_with_smallest_ids(centers, centers.size() + 1, n);
            }
            pad_with_smallest_ids(centers, k, n);
            break;
        }
        centers.push_back(far[pick]);
    }
    return {std::move(centers), Objective::Kind::kcenter};
}

Solution kcenter_zero_query(const PreferenceProfile& profile, std::size_t k) {
    const std::size_t n = profile.size();
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const std::size_t target = k - 1 >= 63 ? n : std::min<std::size_t>(std::size_t{1} << (k - 1), n);

    std::vector<PointId> centers{0};
    for (std::size_t round = 0; centers.size() < target || round < k - 1; ++round) {
        const Clustering clustering = induced_clustering(profile, centers);
        const auto far = farthest_members(profile, clustering);
        std::vector<PointId> added;
        for (std::size_t i = 0; i < far.size(); ++i) {
            if (far[i] != clustering.centers[i]) added.push_back(far[i]);
        }
        if (added.empty()) break;
        // Rounds past the prescribed k−1 only top up to the target size.
        if (round >= k - 1) added.resize(std::min(added.size(), target - centers.size()));
        centers.insert(centers.end(), added.begin(), added.end());
    }
    return {std::move(centers), Objective::Kind::kcenter};
}

Solution kcenter_2k_query(const MetricInstance& instance, const PreferenceProfile& profile, std::size_t k,
                          QueryLedger& ledger, KCenterTrace* trace) {
    const std::size_t n = instance.size();
    require_k(k, n, 2);

    std::vector<PointId> centers{0};
    std::vector<PointId> query_set{0};

    auto snapshot = [&](std::size_t iteration, const Clustering& clustering, const std::vector<PointId>& far) {
        KCenterStep step;
        step.iteration = iteration;
        step.centers = centers;
        step.query_set = query_set;
        for (std::size_t i = 0; i < far.size(); ++i) step.farthest.emplace_back(clustering.centers[i], far[i]);
        return step;
    };

    std::size_t iteration = 0;
    for (; centers.size() < k; ++iteration) {
        const Clustering clustering = induced_clustering(profile, centers);
        const auto far = farthest_members(profile, clustering);
        auto far_of = [&](PointId c) {
            return far[std::find(centers.begin(), centers.end(), c) - centers.begin()];
        };

        // Step 1: the query-set cluster with the largest revealed radius.
        double best = -1.0;
        PointId y = kNoPoint;
        for (PointId q : query_set) {
            const double delta = ledger.query(instance, q, far_of(q));
            if (delta > best || (delta == best && q < y)) {
                best = delta;
                y = q;
            }
        }
        const PointId z = far_of(y);

        if (trace) {
            KCenterStep step = snapshot(iteration, clustering, far);
            step.selected_center = y;
            step.selected_point = z;
            step.revealed = ledger.pairs();
            trace->push_back(std::move(step));
        }

        if (z == y) {
            // Every query-set cluster is a singleton, so the cost is already zero.
            pad_with_smallest_ids(centers, k, n);
            ++iteration;
            break;
        }

        // Step 2.
        centers.push_back(z);
        query_set.erase(std::find(query_set.begin(), query_set.end(), y));

        // Step 3: re-admit centers of R = C \ Q unless some p in Q already
        // dominates them, i.e. q_p ranks w_u no farther than p.
        const Clustering next = induced_clustering(profile, centers);
        const auto next_far = farthest_members(profile, next);
        std::vector<PointId> rest;
        for (PointId c : centers) {
            if (!contains(query_set, c)) rest.push_back(c);
        }
        std::sort(rest.begin(), rest.end());
        for (PointId u : rest) {
            const PointId w = next_far[next.owner[u]];
            bool add = true;
            for (PointId p : query_set) {
                const PointId q = next_far[next.owner[p]];
                if (profile.rank(q, w) < profile.rank(q, p)) {
                    add = false;
                    break;
                }
            }
            if (add) query_set.push_back(u);
        }
    }

    if (trace) {
        const Clustering clustering = induced_clustering(profile, centers);
        KCenterStep last = snapshot(iteration, clustering, farthest_members(profile, clustering));
        last.revealed = ledger.pairs();
        trace->push_back(std::move(last));
    }
    return {std::move(centers), Objective::Kind::kcenter};
}

bool verify_farthest_invariant(const KCenterTrace& trace) {
    if (trace.empty()) throw std::invalid_argument("empty trace");
    if (!trace.back().is_final()) throw std::invalid_argument("trace must end with a final snapshot");

    auto farthest_map = [](const KCenterStep& step) {
        std::map<PointId, PointId> far;
        for (auto [c, f] : step.farthest) far[c] = f;
        if (far.size() != step.centers.size()) throw std::invalid_argument("farthest list does not match centers");
        for (PointId c : step.centers) {
            if (!far.contains(c)) throw std::invalid_argument("center without farthest entry");
        }
        return far;
    };

    for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
        const KCenterStep& cur = trace[i];
        const KCenterStep& next = trace[i + 1];
        if (cur.is_final()) throw std::invalid_argument("final snapshot before the end of the trace");
        if (next.iteration != cur.iteration + 1) throw std::invalid_argument("non-consecutive iterations");
        if (next.centers.size() < cur.centers.size() + 1 ||
            !std::equal(cur.centers.begin(), cur.centers.end(), next.centers.begin()) ||
            next.centers[cur.centers.size()] != cur.selected_point) {
            throw std::invalid_argument("step " + std::to_string(next.iteration) +
                                        " does not extend the previous centers by the selected point");
        }
        const auto far_now = farthest_map(cur);
        const auto far_next = farthest_map(next);
        for (PointId y : cur.query_set) {
            auto it = far_now.find(y);
            if (it == far_now.end()) throw std::invalid_argument("query-set member is not a center");
            if (contains(next.centers, it->second)) continue;
            if (far_next.at(y) != it->second) return false;
        }
    }
    return true;
}

std::optional<std::size_t> find_half_fft_violation(const MetricInstance& instance, const KCenterTrace& trace) {
    for (const KCenterStep& step : trace) {
        if (step.is_final()) continue;
        const auto d = distances_to_centers(instance, step.centers);
        const double radius = *std::max_element(d.begin(), d.end());
        if (2.0 * d[step.selected_point] < radius) return step.iteration;
    }
    return std::nullopt;
}

}  // namespace ordclust
