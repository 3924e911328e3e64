#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "ordclust/metric.hpp"
#include "ordclust/objective.hpp"

namespace ordclust {

/// Largest number of k-subsets an exhaustive search may visit.
inline constexpr double kOracleBudget = 1e7;

/// Largest instance the facility oracle enumerates (2^n − 1 subsets).
inline constexpr std::size_t kFacilityOracleMaxN = 20;

class OracleBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OptimalSolution {
    Solution solution;  // ascending ids
    double cost = 0.0;
};

/// C(n, k) as a double (exact for the sizes the oracle accepts).
double binomial(std::size_t n, std::size_t k);

bool within_budget(std::size_t n, std::size_t k);

/// Exact optimum over all k-subsets of X; the lexicographically first optimal
/// subset is returned. Facility objectives ignore k.
OptimalSolution brute_force_opt(const MetricInstance& instance, std::size_t k, const Objective& objective);

/// Exact optimum of connection cost plus f per open facility.
OptimalSolution brute_force_facility_opt(const MetricInstance& instance, double opening_cost);

/// cost / opt with +inf for opt = 0 < cost and 1 for 0 / 0.
double distortion_ratio(double cost, double opt);

/// Distortion of a (possibly bicriteria) solution against OPT with target k.
double distortion(const MetricInstance& instance, const Solution& solution, std::size_t k,
                  const Objective& objective);

/// Indices of the k candidates minimising Σ_i w_i·min_{s∈S} d(i, s)^z, given
/// a dense m×m distance matrix over the candidates. Lexicographically first
/// optimum, ascending.
std::vector<std::size_t> weighted_kz_opt(std::span<const double> distances, std::span<const double> weights,
                                         std::size_t k, double z);

}  // namespace ordclust
