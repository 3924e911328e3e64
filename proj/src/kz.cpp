#include "ordclust/kz.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ordclust/kcenter.hpp"
#include "ordclust/oracle.hpp"

namespace ordclust {

namespace {

double power(double d, double z) { return z == 1.0 ? d : std::pow(d, z); }

void append_new(std::vector<PointId>& centers, std::vector<char>& in_set, std::span<const PointId> extra) {
    for (PointId x : extra) {
        if (!in_set[x]) {
            in_set[x] = 1;
            centers.push_back(x);
        }
    }
}

std::vector<char> membership(std::size_t n, std::span<const PointId> centers) {
    std::vector<char> in_set(n);
    for (PointId c : centers) in_set[c] = 1;
    return in_set;
}

PointId uniform_point(std::size_t n, Rng& rng) {
    return static_cast<PointId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

std::vector<PointId> augmentation(const MetricInstance& instance, const PreferenceProfile& profile, std::size_t k,
                                  QueryLedger& ledger, Augment augment) {
    if (augment == Augment::zero) return kcenter_zero_query(profile, k).centers;
    const std::size_t kk = std::min(k, instance.size());
    if (kk < 2) return {0};
    return kcenter_2k_query(instance, profile, kk, ledger).centers;
}

void run_passes(const PreferenceProfile& profile, std::vector<PointId>& centers, std::vector<char>& in_set,
                std::size_t passes, std::size_t draws, Rng& rng, const RoundObserver& observer,
                std::size_t& round_counter) {
    for (std::size_t p = 0; p < passes; ++p) {
        std::vector<PointId> added = zero_query_sampler_pass(profile, centers, draws, rng);
        if (observer) {
            RoundTrace trace;
            trace.round = round_counter;
            trace.centers = centers;
            trace.inclusion_probability = ring_draw_probabilities(profile, centers);
            trace.ring_size.reserve(trace.inclusion_probability.size());
            for (double q : trace.inclusion_probability) {
                trace.ring_size.push_back(static_cast<std::size_t>(std::llround(1.0 / q)));
            }
            trace.added = added;
            observer(trace);
        }
        ++round_counter;
        append_new(centers, in_set, added);
    }
}

}  // namespace

std::size_t RingPartition::ring_of(PointId x) const {
    for (std::size_t j = 0; j < rings.size(); ++j) {
        if (std::find(rings[j].begin(), rings[j].end(), x) != rings[j].end()) return j;
    }
    throw std::invalid_argument("point " + std::to_string(x) + " is not in this partition");
}

std::size_t ring_count_for(std::size_t m) {
    if (m <= 1) return m;
    const auto level = static_cast<std::size_t>(std::bit_width(m) - 1);
    return level <= 1 ? 2 : level;
}

RingPartition ring_partition(const PreferenceProfile& profile, PointId center, std::span<const PointId> members) {
    if (members.empty()) throw std::invalid_argument("cannot partition an empty cluster");
    const std::vector<PointId> sorted = restrict_to(profile, center, members);
    const std::size_t m = sorted.size();

    RingPartition part;
    part.center = center;
    part.level = static_cast<std::size_t>(std::bit_width(m) - 1);
    if (m == 1) {
        part.rings.push_back(sorted);
        return part;
    }

    // Cut from the outside in: singleton, then 2, 4, ... farthest points.
    std::vector<std::vector<PointId>> outer;
    std::size_t end = m;
    outer.emplace_back(sorted.begin() + static_cast<std::ptrdiff_t>(end - 1), sorted.end());
    --end;
    for (std::size_t j = part.level; j-- > 2;) {
        const std::size_t size = std::size_t{1} << (part.level - j);
        outer.emplace_back(sorted.begin() + static_cast<std::ptrdiff_t>(end - size),
                           sorted.begin() + static_cast<std::ptrdiff_t>(end));
        end -= size;
    }
    part.rings.emplace_back(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(end));
    part.rings.insert(part.rings.end(), outer.rbegin(), outer.rend());
    return part;
}

double phi_z(const MetricInstance& instance, std::span<const PointId> points, std::span<const PointId> centers,
             double z) {
    double acc = 0.0;
    for (PointId x : points) {
        double best = instance.distance(x, centers.front());
        for (PointId c : centers) best = std::min(best, instance.distance(x, c));
        acc += power(best, z);
    }
    return acc;
}

std::vector<double> dppz_probabilities(const MetricInstance& instance, std::span<const PointId> centers, double z) {
    auto d = distances_to_centers(instance, centers);
    double total = 0.0;
    for (double& v : d) {
        v = power(v, z);
        total += v;
    }
    if (total == 0.0) return std::vector<double>(d.size(), 0.0);
    for (double& v : d) v /= total;
    return d;
}

std::optional<PointId> sample_dppz(const MetricInstance& instance, std::span<const PointId> centers, double z,
                                   Rng& rng) {
    const auto p = dppz_probabilities(instance, centers, z);
    if (std::all_of(p.begin(), p.end(), [](double v) { return v == 0.0; })) return std::nullopt;
    std::discrete_distribution<std::size_t> dist(p.begin(), p.end());
    return static_cast<PointId>(dist(rng));
}

std::size_t ceil_log(double x, double log_base) {
    if (!(log_base > 1.0)) throw std::invalid_argument("log base must exceed 1");
    if (x <= 1.0) return 1;
    const double v = std::log(x) / std::log(log_base);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(v - 1e-9)));
}

std::size_t draws_per_ring(std::size_t k, double log_base) {
    if (!(log_base > 1.0)) throw std::invalid_argument("log base must exceed 1");
    if (k <= 1) return 1;
    const double v = 7.0 * std::log(static_cast<double>(k)) / std::log(log_base);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(v - 1e-9)));
}

std::vector<double> ring_draw_probabilities(const PreferenceProfile& profile, std::span<const PointId> centers) {
    const Clustering clustering = induced_clustering(profile, centers);
    std::vector<double> q(profile.size());
    for (std::size_t i = 0; i < clustering.centers.size(); ++i) {
        const RingPartition part = ring_partition(profile, clustering.centers[i], clustering.members[i]);
        for (const auto& ring : part.rings) {
            for (PointId x : ring) q[x] = 1.0 / static_cast<double>(ring.size());
        }
    }
    return q;
}

std::vector<PointId> zero_query_sampler_pass(const PreferenceProfile& profile, std::span<const PointId> centers,
                                             std::size_t draws, Rng& rng) {
    const Clustering clustering = induced_clustering(profile, centers);
    std::vector<char> seen = membership(profile.size(), centers);
    std::vector<PointId> added;
    for (std::size_t i = 0; i < clustering.centers.size(); ++i) {
        const RingPartition part = ring_partition(profile, clustering.centers[i], clustering.members[i]);
        for (const auto& ring : part.rings) {
            std::uniform_int_distribution<std::size_t> pick(0, ring.size() - 1);
            for (std::size_t d = 0; d < draws; ++d) {
                const PointId x = ring[pick(rng)];
                if (!seen[x]) {
                    seen[x] = 1;
                    added.push_back(x);
                }
            }
        }
    }
    return added;
}

Solution kz_zero_query(const MetricInstance& instance, const PreferenceProfile& profile, std::size_t k, Rng& rng,
                       QueryLedger& ledger, const ZeroQueryOptions& options, const RoundObserver& observer) {
    const std::size_t n = instance.size();
    if (n == 1) return {{0}, Objective::Kind::kz};
    if (k < 2) throw std::invalid_argument("k must be at least 2");

    std::vector<PointId> centers{uniform_point(n, rng)};
    std::vector<char> in_set = membership(n, centers);
    std::size_t rounds = 0;
    run_passes(profile, centers, in_set, options.passes.value_or(k - 1), draws_per_ring(k, options.log_base), rng,
               observer, rounds);
    append_new(centers, in_set, augmentation(instance, profile, k, ledger, options.augment));
    return {std::move(centers), Objective::Kind::kz};
}

Solution kz_zero_query_amplified(const MetricInstance& instance, const PreferenceProfile& profile, std::size_t k,
                                 Rng& rng, QueryLedger& ledger, const ZeroQueryOptions& options,
                                 const RoundObserver& observer) {
    const std::size_t n = instance.size();
    if (n == 1) return {{0}, Objective::Kind::kz};
    if (k < 2) throw std::invalid_argument("k must be at least 2");

    const std::size_t repetitions = ceil_log(static_cast<double>(n), options.log_base);
    const std::size_t passes = options.passes.value_or(k - 1);
    const std::size_t draws = draws_per_ring(k, options.log_base);

    std::vector<PointId> all;
    std::vector<char> in_all(n);
    std::size_t rounds = 0;
    for (std::size_t r = 0; r < repetitions; ++r) {
        std::vector<PointId> centers{uniform_point(n, rng)};
        std::vector<char> in_set = membership(n, centers);
        run_passes(profile, centers, in_set, passes, draws, rng, observer, rounds);
        append_new(all, in_all, centers);
    }
    append_new(all, in_all, augmentation(instance, profile, k, ledger, options.augment));
    return {std::move(all), Objective::Kind::kz};
}

std::size_t zero_query_center_bound(std::size_t n, std::size_t k, const ZeroQueryOptions& options) {
    if (n <= 1) return n;
    const std::size_t passes = options.passes.value_or(k - 1);
    const std::size_t per_center = ring_count_for(n) * draws_per_ring(k, options.log_base);
    std::size_t count = 1;
    for (std::size_t p = 0; p < passes && count < n; ++p) count = std::min(n, count + count * per_center);
    const std::size_t extra = options.augment == Augment::zero
                                  ? (k - 1 >= 63 ? n : std::min<std::size_t>(std::size_t{1} << (k - 1), n))
                                  : std::min(k, n);
    return std::min(n, count + extra);
}

double estimated_ring_cost(QueryLedger& ledger, const PreferenceProfile& profile, const MetricInstance& instance,
                           const RingPartition& partition, std::size_t ring, double z) {
    if (ring >= partition.rings.size()) throw std::out_of_range("ring index out of range");
    const auto& own = partition.rings[ring];
    if (own.empty()) throw std::invalid_argument("empty ring");
    const auto& probe = ring + 1 < partition.rings.size() ? partition.rings[ring + 1] : own;
    const SetDistance sd = distance_to_set(ledger, profile, instance, partition.center, probe);
    return static_cast<double>(own.size()) * power(sd.distance, z);
}

std::size_t default_rounds(std::size_t n, std::size_t k, double log_base) {
    if (!(log_base > 1.0)) throw std::invalid_argument("log base must exceed 1");
    const double v = 40.0 * static_cast<double>(k) * std::log(static_cast<double>(n)) / std::log(log_base);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(v - 1e-9)));
}

LowQueryResult kmedian_low_query(const MetricInstance& instance, const PreferenceProfile& profile, std::size_t k,
                                 double z, QueryLedger& ledger, Rng& rng, const LowQueryOptions& options,
                                 const RoundObserver& observer) {
    const std::size_t n = instance.size();
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (!(z >= 1.0)) throw std::invalid_argument("z must be >= 1");
    if (options.rounds && *options.rounds == 0) throw std::invalid_argument("T must be positive");

    LowQueryResult result;
    result.solution.kind = Objective::Kind::kz;
    if (k >= n) {
        for (PointId x = 0; x < n; ++x) result.sampled.push_back(x);
        result.solution.centers = result.sampled;
        return result;
    }

    const std::size_t T = options.rounds.value_or(default_rounds(n, k, options.log_base));
    std::vector<PointId> centers =
        k >= 2 ? kcenter_2k_query(instance, profile, k, ledger).centers : std::vector<PointId>{0};
    std::vector<char> in_set = membership(n, centers);
    const PointId start = uniform_point(n, rng);
    append_new(centers, in_set, std::span<const PointId>(&start, 1));

    for (std::size_t t = 1; t <= T; ++t) {
        const Clustering clustering = induced_clustering(profile, centers);
        std::vector<double> ring_estimate(n);
        std::vector<std::size_t> ring_size(n);
        double total = 0.0;
        for (std::size_t i = 0; i < clustering.centers.size(); ++i) {
            const RingPartition part = ring_partition(profile, clustering.centers[i], clustering.members[i]);
            for (std::size_t j = 0; j < part.rings.size(); ++j) {
                const double est = estimated_ring_cost(ledger, profile, instance, part, j, z);
                total += est;
                for (PointId x : part.rings[j]) {
                    ring_estimate[x] = est;
                    ring_size[x] = part.rings[j].size();
                }
            }
        }
        if (total == 0.0) break;

        std::vector<double> phat(n), incl(n);
        std::vector<PointId> added;
        for (PointId x = 0; x < n; ++x) {
            phat[x] = ring_estimate[x] / static_cast<double>(ring_size[x]) / total;
            incl[x] = std::min(1.0, static_cast<double>(T) * phat[x]);
            if (!in_set[x] && uniform01(rng) < incl[x]) added.push_back(x);
        }
        if (observer) {
            RoundTrace trace;
            trace.round = t - 1;
            trace.centers = centers;
            trace.ring_size = ring_size;
            trace.ring_estimate = ring_estimate;
            trace.estimated_probability = phat;
            trace.inclusion_probability = incl;
            trace.added = added;
            observer(trace);
        }
        append_new(centers, in_set, added);
        result.rounds_run = t;
    }
    result.sampled = centers;

    if (centers.size() <= k) {
        result.solution.centers = centers;
        return result;
    }

    // Exact re-solve over the sampled set, each center weighted by its cluster size.
    QueryLedger reduction;
    const std::size_t m = centers.size();
    std::vector<double> dist(m * m, 0.0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            dist[a * m + b] = dist[b * m + a] = reduction.query(instance, centers[a], centers[b]);
        }
    }
    const Clustering clustering = induced_clustering(profile, centers);
    std::vector<double> weights(m);
    for (std::size_t i = 0; i < m; ++i) weights[i] = static_cast<double>(clustering.members[i].size());
    for (std::size_t idx : weighted_kz_opt(dist, weights, k, z)) result.solution.centers.push_back(centers[idx]);
    result.reduction_queries = reduction.count();
    return result;
}

std::optional<double> expected_cost_after_draw(const MetricInstance& instance, std::span<const PointId> centers,
                                               std::span<const PointId> cluster, double z) {
    const auto d = distances_to_centers(instance, centers);
    double weight = 0.0;
    for (PointId a : cluster) weight += power(d[a], z);
    if (weight == 0.0) return std::nullopt;
    double expectation = 0.0;
    for (PointId c : cluster) {
        const double pc = power(d[c], z) / weight;
        if (pc == 0.0) continue;
        double after = 0.0;
        for (PointId a : cluster) after += power(std::min(d[a], instance.distance(a, c)), z);
        expectation += pc * after;
    }
    return expectation;
}

bool is_covered(const MetricInstance& instance, std::span<const PointId> cluster, std::span<const PointId> centers,
                std::span<const PointId> optimal_centers, double z) {
    const double now = std::pow(phi_z(instance, cluster, centers, z), 1.0 / z);
    const double best = std::pow(phi_z(instance, cluster, optimal_centers, z), 1.0 / z);
    return now <= 10.0 * best;
}

}  // namespace ordclust
