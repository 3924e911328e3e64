#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ordclust/io.hpp"
#include "ordclust/kz.hpp"

namespace ordclust {

/// Unknown algorithm or family, or inconsistent parameters.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& algorithm_names();
const std::vector<std::string>& family_names();

struct BatchConfig {
    std::string algorithm = "kcenter-2k";
    std::optional<std::string> instance_path;
    std::string family = "euclidean";
    std::size_t instances = 1;
    std::size_t n = 30;
    std::size_t dim = 2;
    std::size_t k = 2;
    double z = 1.0;
    double f = 1.0;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::optional<std::size_t> rounds;
    bool run_oracle = true;
    Augment augment = Augment::zero;
    double log_base = 2.0;
    double success_threshold = 20.0;
    bool timing = false;

    double D = 1e3;
    std::size_t alpha = 1;
    std::size_t n_prime = 8;
    std::size_t cluster_size = 2;
    std::size_t clusters = 4;
};

struct TrialRecord {
    std::string instance_id;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::size_t k = 0;
    double z = 0.0;
    double f = 0.0;
    std::size_t centers = 0;
    std::size_t queries = 0;
    std::size_t reduction_queries = 0;
    double cost = 0.0;
    std::optional<double> opt;
    std::optional<double> distortion;
    double wall_ms = 0.0;
};

/// Seed of instance i, and of trial t on that instance.
std::uint64_t instance_seed(std::uint64_t master, std::size_t instance);
std::uint64_t trial_seed(std::uint64_t master, std::size_t instance, std::size_t trial);

Objective objective_for(const BatchConfig& config);

/// Runs every (instance, trial) pair in order. When `trace` is given, one
/// JSON line per k-center step or sampling round is written to it.
std::vector<TrialRecord> run_batch(const BatchConfig& config, std::ostream* trace = nullptr);

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records, bool timing);

struct BatchSummary {
    std::size_t trials = 0;
    std::size_t evaluated = 0;  // trials with an oracle value
    double mean_distortion = 0.0;
    double median_distortion = 0.0;
    double max_distortion = 0.0;
    double success_rate = 0.0;  // fraction of evaluated trials with distortion ≤ threshold
    double threshold = 0.0;
    std::size_t queries_min = 0;
    std::size_t queries_median = 0;
    std::size_t queries_p90 = 0;
    std::size_t queries_max = 0;
};

BatchSummary summarize(const std::vector<TrialRecord>& records, double threshold);
Json summary_json(const BatchSummary& summary);

}  // namespace ordclust
