#include "ordclust/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>

#include "ordclust/facility.hpp"
#include "ordclust/kcenter.hpp"
#include "ordclust/oracle.hpp"

namespace ordclust {

namespace {

struct Prepared {
    std::string id;
    MetricInstance instance;
    PreferenceProfile profile;
    std::optional<double> known_opt;
};

struct Outcome {
    std::vector<PointId> centers;
    std::size_t queries = 0;
    std::size_t reduction_queries = 0;
};

std::string number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

bool known(const std::vector<std::string>& names, const std::string& name) {
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::string joined(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& s : names) out += (out.empty() ? "" : ", ") + s;
    return out;
}

Prepared prepare(const BatchConfig& config, const Objective& objective, std::size_t index) {
    if (config.instance_path) {
        LoadedInstance loaded = load_instance(*config.instance_path);
        PreferenceProfile profile = profile_for(loaded);
        return {std::filesystem::path(*config.instance_path).stem().string(), std::move(loaded.instance),
                std::move(profile), std::nullopt};
    }
    Rng rng(instance_seed(config.seed, index));
    const std::string id = config.family + "-" + std::to_string(index);
    if (config.family == "euclidean") {
        MetricInstance inst = uniform_cube_instance(config.n, rng, config.dim);
        PreferenceProfile profile = build_profile(inst);
        return {id, std::move(inst), std::move(profile), std::nullopt};
    }
    if (config.family == "tree") {
        auto g = gen_kcenter_tree({config.k, config.D}, rng);
        std::optional<double> opt;
        if (objective.kind == Objective::Kind::kcenter) opt = g.descriptor.opt_cost;
        return {id, std::move(g.instance), std::move(g.profile), opt};
    }
    if (config.family == "bundles") {
        auto g = gen_kmedian_bundles({config.k, config.alpha, config.n_prime, config.D, 1e-6}, rng);
        std::optional<double> opt;
        if (objective.kind == Objective::Kind::kz && objective.z == 1.0) opt = g.descriptor.opt_cost;
        return {id, std::move(g.instance), std::move(g.profile), opt};
    }
    if (config.family == "facility-hard") {
        auto g = gen_facility_hard({config.cluster_size, config.clusters, 0.0, 1e-6, config.f}, rng);
        std::optional<double> opt;
        if (objective.kind == Objective::Kind::facility) opt = g.descriptor.opt_cost;
        return {id, std::move(g.instance), std::move(g.profile), opt};
    }
    throw ConfigError("unknown family '" + config.family + "' (expected one of: " + joined(family_names()) + ")");
}

std::optional<double> oracle_value(const BatchConfig& config, const Objective& objective, const Prepared& p) {
    if (!config.run_oracle) return std::nullopt;
    try {
        return brute_force_opt(p.instance, config.k, objective).cost;
    } catch (const OracleBudgetExceeded&) {
        return p.known_opt;
    }
}

Outcome run_one(const BatchConfig& config, const Prepared& p, Rng& rng, const std::function<void(Json)>& emit) {
    const auto& inst = p.instance;
    const auto& profile = p.profile;
    QueryLedger ledger;
    Outcome out;
    const std::string& algo = config.algorithm;

    RoundObserver observer;
    if (emit) {
        observer = [&](const RoundTrace& r) {
            Json line = round_json(r);
            line["type"] = "round";
            emit(std::move(line));
        };
    }

    if (algo == "kcenter-quadratic") {
        out.centers = kcenter_quadratic(inst, profile, config.k, ledger).centers;
    } else if (algo == "kcenter-zero") {
        out.centers = kcenter_zero_query(profile, config.k).centers;
    } else if (algo == "kcenter-2k") {
        KCenterTrace trace;
        out.centers = kcenter_2k_query(inst, profile, config.k, ledger, emit ? &trace : nullptr).centers;
        for (const auto& step : trace) {
            Json line = step_json(step);
            line["type"] = "step";
            emit(std::move(line));
        }
    } else if (algo == "kz-zero" || algo == "kz-amplified") {
        ZeroQueryOptions options;
        options.augment = config.augment;
        options.log_base = config.log_base;
        out.centers = algo == "kz-zero"
                          ? kz_zero_query(inst, profile, config.k, rng, ledger, options, observer).centers
                          : kz_zero_query_amplified(inst, profile, config.k, rng, ledger, options, observer).centers;
    } else if (algo == "kz-low-query") {
        LowQueryOptions options;
        options.rounds = config.rounds;
        options.log_base = config.log_base;
        auto result = kmedian_low_query(inst, profile, config.k, config.z, ledger, rng, options, observer);
        out.centers = std::move(result.solution.centers);
        out.reduction_queries = result.reduction_queries;
    } else if (algo == "meyerson") {
        out.centers = meyerson(inst, profile, {config.f, std::nullopt}, ledger, rng).centers;
    } else {
        throw ConfigError("unknown algorithm '" + algo + "' (expected one of: " + joined(algorithm_names()) + ")");
    }
    out.queries = ledger.count();
    return out;
}

std::size_t nearest_rank(const std::vector<std::size_t>& sorted, double q) {
    if (sorted.empty()) return 0;
    auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
    return sorted[std::clamp<std::size_t>(idx, 1, sorted.size()) - 1];
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names{"kcenter-quadratic", "kcenter-zero", "kcenter-2k", "kz-zero",
                                                "kz-amplified",      "kz-low-query", "meyerson"};
    return names;
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"euclidean", "tree", "bundles", "facility-hard"};
    return names;
}

std::uint64_t instance_seed(std::uint64_t master, std::size_t instance) { return split_seed(master, instance); }

std::uint64_t trial_seed(std::uint64_t master, std::size_t instance, std::size_t trial) {
    return split_seed(instance_seed(master, instance), trial);
}

Objective objective_for(const BatchConfig& config) {
    const std::string& a = config.algorithm;
    if (a.rfind("kcenter-", 0) == 0) return Objective::kcenter();
    if (a.rfind("kz-", 0) == 0) return Objective::kz(config.z);
    if (a == "meyerson") return Objective::facility(config.f);
    throw ConfigError("unknown algorithm '" + a + "' (expected one of: " + joined(algorithm_names()) + ")");
}

std::vector<TrialRecord> run_batch(const BatchConfig& config, std::ostream* trace) {
    if (!known(algorithm_names(), config.algorithm)) {
        throw ConfigError("unknown algorithm '" + config.algorithm + "' (expected one of: " +
                          joined(algorithm_names()) + ")");
    }
    if (!config.instance_path && !known(family_names(), config.family)) {
        throw ConfigError("unknown family '" + config.family + "' (expected one of: " + joined(family_names()) + ")");
    }
    if (config.k < 1) throw ConfigError("k must be at least 1");
    const Objective objective = objective_for(config);

    std::vector<TrialRecord> records;
    if (config.trials == 0) return records;
    const std::size_t instances = config.instance_path ? 1 : config.instances;
    for (std::size_t i = 0; i < instances; ++i) {
        const Prepared p = prepare(config, objective, i);
        const std::optional<double> opt = oracle_value(config, objective, p);
        for (std::size_t t = 0; t < config.trials; ++t) {
            const std::uint64_t seed = trial_seed(config.seed, i, t);
            Rng rng(seed);
            std::function<void(Json)> emit;
            if (trace) {
                emit = [&](Json line) {
                    line["instance_id"] = p.id;
                    line["algorithm"] = config.algorithm;
                    line["seed"] = seed;
                    *trace << line.dump() << '\n';
                };
            }
            const auto start = std::chrono::steady_clock::now();
            Outcome out = run_one(config, p, rng, emit);
            const auto stop = std::chrono::steady_clock::now();

            TrialRecord r;
            r.instance_id = p.id;
            r.algorithm = config.algorithm;
            r.seed = seed;
            r.k = config.k;
            r.z = config.z;
            r.f = config.f;
            r.centers = out.centers.size();
            r.queries = out.queries;
            r.reduction_queries = out.reduction_queries;
            r.cost = cost(p.instance, out.centers, objective);
            r.opt = opt;
            if (opt) r.distortion = distortion_ratio(r.cost, *opt);
            r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
            records.push_back(std::move(r));
        }
    }
    return records;
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records, bool timing) {
    out << "instance_id,algorithm,seed,k,z,f,centers,queries,reduction_queries,cost,opt,distortion";
    if (timing) out << ",wall_ms";
    out << '\n';
    for (const auto& r : records) {
        out << r.instance_id << ',' << r.algorithm << ',' << r.seed << ',' << r.k << ',' << number(r.z) << ','
            << number(r.f) << ',' << r.centers << ',' << r.queries << ',' << r.reduction_queries << ','
            << number(r.cost) << ',' << (r.opt ? number(*r.opt) : "skipped") << ','
            << (r.distortion ? number(*r.distortion) : "skipped");
        if (timing) out << ',' << number(r.wall_ms);
        out << '\n';
    }
}

BatchSummary summarize(const std::vector<TrialRecord>& records, double threshold) {
    BatchSummary s;
    s.trials = records.size();
    s.threshold = threshold;
    std::vector<double> dist;
    std::vector<std::size_t> queries;
    for (const auto& r : records) {
        queries.push_back(r.queries);
        if (r.distortion) dist.push_back(*r.distortion);
    }
    std::sort(queries.begin(), queries.end());
    if (!queries.empty()) {
        s.queries_min = queries.front();
        s.queries_median = nearest_rank(queries, 0.5);
        s.queries_p90 = nearest_rank(queries, 0.9);
        s.queries_max = queries.back();
    }
    s.evaluated = dist.size();
    if (!dist.empty()) {
        std::sort(dist.begin(), dist.end());
        double sum = 0.0;
        std::size_t ok = 0;
        for (double d : dist) {
            sum += d;
            if (d <= threshold) ++ok;
        }
        const std::size_t m = dist.size();
        s.mean_distortion = sum / static_cast<double>(m);
        s.median_distortion = m % 2 ? dist[m / 2] : 0.5 * (dist[m / 2 - 1] + dist[m / 2]);
        s.max_distortion = dist.back();
        s.success_rate = static_cast<double>(ok) / static_cast<double>(m);
    }
    return s;
}

Json summary_json(const BatchSummary& s) {
    auto num = [](double v) -> Json { return std::isfinite(v) ? Json(v) : Json("inf"); };
    return {{"trials", s.trials},
            {"evaluated", s.evaluated},
            {"distortion", {{"mean", num(s.mean_distortion)},
                            {"median", num(s.median_distortion)},
                            {"max", num(s.max_distortion)}}},
            {"success_rate", s.success_rate},
            {"threshold", s.threshold},
            {"queries", {{"min", s.queries_min},
                         {"median", s.queries_median},
                         {"p90", s.queries_p90},
                         {"max", s.queries_max}}}};
}

}  // namespace ordclust
