#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordclust/ledger.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("profile of the line metric") {
    auto inst = line_metric();
    auto p = build_profile(inst);
    auto r = p.ranking(A);
    CHECK(std::vector<PointId>(r.begin(), r.end()) == std::vector<PointId>{A, B, C, D});
    CHECK(p.rank(A, D) == 3);
    CHECK(p.prefers(C, A, D));
    CHECK(p.last(A) == D);
}

TEST_CASE("singleton profile") {
    auto inst = MetricInstance::from_matrix({{0.0}});
    auto p = build_profile(inst);
    CHECK(p.size() == 1);
    CHECK(p.ranking(0)[0] == 0);
}

TEST_CASE("ties go to the smaller id, self always first") {
    // point 0 equidistant from 2 and 5; points 3 and 4 coincide
    std::vector<std::vector<double>> pts{{0, 0}, {5, 5}, {1, 0}, {3, 3}, {3, 3}, {-1, 0}};
    auto inst = MetricInstance::from_points(pts, Norm::l2);
    auto p = build_profile(inst);
    CHECK(p.rank(0, 2) < p.rank(0, 5));
    CHECK(p.ranking(4)[0] == 4);
    CHECK(p.ranking(4)[1] == 3);
    CHECK(p.ranking(3)[0] == 3);
    CHECK(p.ranking(3)[1] == 4);
}

TEST_CASE("restrict keeps ranking order") {
    auto inst = line_metric();
    auto p = build_profile(inst);
    std::vector<PointId> s{D, C};
    CHECK(restrict_to(p, A, s) == std::vector<PointId>{C, D});
    std::vector<PointId> one{A};
    CHECK(restrict_to(p, A, one) == std::vector<PointId>{A});
    std::vector<PointId> all{D, B, A, C};
    CHECK(restrict_to(p, A, all) == std::vector<PointId>{A, B, C, D});
    CHECK_THROWS_AS(restrict_to(p, A, std::vector<PointId>{}), std::invalid_argument);
}

TEST_CASE("nearest and farthest by rank") {
    auto inst = line_metric();
    auto p = build_profile(inst);
    std::vector<PointId> bcd{B, C, D};
    CHECK(nearest_in_set(p, A, bcd) == B);
    CHECK(farthest_in_set(p, A, bcd) == D);
    std::vector<PointId> self{C};
    CHECK(nearest_in_set(p, C, self) == C);
    CHECK(farthest_in_set(p, C, self) == C);
    std::vector<PointId> ad{A, D};
    CHECK(nearest_in_set(p, C, ad) == A);
    CHECK(farthest_in_set(p, C, ad) == D);
    CHECK_THROWS(nearest_in_set(p, C, std::vector<PointId>{}));
}

TEST_CASE("query ledger dedups pairs") {
    auto inst = line_metric();
    QueryLedger ledger;
    CHECK(query_distance(ledger, inst, A, D) == 7.0);
    CHECK(ledger.count() == 1);
    CHECK(query_distance(ledger, inst, D, A) == 7.0);
    CHECK(ledger.count() == 1);
    CHECK(query_distance(ledger, inst, A, A) == 0.0);
    CHECK(ledger.count() == 1);
    CHECK(ledger.calls() == 3);
    CHECK(ledger.revealed(D, A));
    CHECK_FALSE(ledger.revealed(B, C));
    CHECK_THROWS_AS(ledger.query(inst, 0, 9), std::out_of_range);
}

TEST_CASE("distance to a set uses one query") {
    auto inst = line_metric();
    auto p = build_profile(inst);
    QueryLedger ledger;
    std::vector<PointId> ad{A, D};
    auto r = distance_to_set(ledger, p, inst, B, ad);
    CHECK(r.distance == 1.0);
    CHECK(r.nearest == A);
    CHECK(ledger.count() == 1);

    auto inside = distance_to_set(ledger, p, inst, A, ad);
    CHECK(inside.distance == 0.0);
    CHECK(inside.nearest == A);
    CHECK(ledger.count() == 1);

    std::vector<PointId> ab{A, B};
    auto c = distance_to_set(ledger, p, inst, C, ab);
    CHECK(c.distance == 2.0);
    CHECK(c.nearest == B);
}

TEST_CASE("induced clustering") {
    auto inst = line_metric();
    auto p = build_profile(inst);
    auto cl = induced_clustering(p, std::vector<PointId>{A, D});
    CHECK(cl.members[0] == std::vector<PointId>{A, B, C});
    CHECK(cl.members[1] == std::vector<PointId>{D});
    CHECK(cl.cluster_of(C) == 0);

    auto all = induced_clustering(p, std::vector<PointId>{A, B, C, D});
    for (const auto& m : all.members) CHECK(m.size() == 1);
    auto one = induced_clustering(p, std::vector<PointId>{B});
    CHECK(one.members[0].size() == 4);
    CHECK_THROWS(induced_clustering(p, std::vector<PointId>{}));
}

TEST_CASE("objective costs") {
    auto inst = line_metric();
    CHECK(cost(inst, std::vector<PointId>{B, D}, Objective::kmedian()) == 3.0);
    CHECK(cost(inst, std::vector<PointId>{A, D}, Objective::kcenter()) == 3.0);
    CHECK(cost(inst, std::vector<PointId>{A, B, C, D}, Objective::kz(2.0)) == 0.0);
    CHECK(cost(inst, std::vector<PointId>{A}, Objective::facility(2.0)) == doctest::Approx(11.0 + 2.0));
    // sqrt(1 + 9 + 49)
    CHECK(cost(inst, std::vector<PointId>{A}, Objective::kz(2.0)) == doctest::Approx(std::sqrt(59.0)));
    // z beyond the cap behaves as k-center
    CHECK(cost(inst, std::vector<PointId>{A}, Objective::kz(100.0)) == 7.0);
    // large z without overflow
    CHECK(std::isfinite(cost(inst, std::vector<PointId>{A}, Objective::kz(60.0))));
    CHECK_THROWS(Objective::kz(0.5));
    CHECK_THROWS(Objective::facility(0.0));
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(MetricInstance::from_matrix({{0, 1}, {2, 0}}), InvalidInstance);
    CHECK_THROWS_AS(MetricInstance::from_matrix({{0, -1}, {-1, 0}}), InvalidInstance);
    CHECK_THROWS_AS(MetricInstance::from_matrix({{1, 1}, {1, 0}}), InvalidInstance);
    std::vector<std::vector<double>> bad{{0, 1, 5}, {1, 0, 1}, {5, 1, 0}};
    CHECK_THROWS_AS(MetricInstance::from_matrix(bad), InvalidInstance);
    auto waived = MetricInstance::from_matrix(bad, true);
    CHECK(waived.triangle_check_waived());
    CHECK(find_triangle_violation(waived).has_value());
}

TEST_CASE("property: profiles, clusterings and costs on random instances") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto inst = seed % 2 ? random_euclidean(25, seed) : random_grid(25, seed);
        auto p = build_profile(inst);
        const std::size_t n = inst.size();
        for (PointId x = 0; x < n; ++x) {
            auto r = p.ranking(x);
            REQUIRE(r[0] == x);
            for (std::size_t i = 2; i < n; ++i) {
                REQUIRE(inst(x, r[i - 1]) <= inst(x, r[i]));
                if (inst(x, r[i - 1]) == inst(x, r[i])) REQUIRE(r[i - 1] < r[i]);
            }
        }

        Rng rng(seed);
        std::vector<PointId> centers;
        std::uniform_int_distribution<PointId> pick(0, static_cast<PointId>(n - 1));
        double previous = std::numeric_limits<double>::infinity();
        for (int step = 0; step < 6; ++step) {
            const PointId c = pick(rng);
            if (std::find(centers.begin(), centers.end(), c) == centers.end()) centers.push_back(c);
            auto cl = induced_clustering(p, centers);
            std::size_t covered = 0;
            for (std::size_t i = 0; i < centers.size(); ++i) {
                covered += cl.members[i].size();
                for (PointId x : cl.members[i]) {
                    REQUIRE(cl.owner[x] == i);
                    for (PointId other : centers) REQUIRE(inst(x, centers[i]) <= inst(x, other));
                }
            }
            REQUIRE(covered == n);

            QueryLedger ledger;
            for (PointId x = 0; x < n; ++x) {
                auto near = nearest_in_set(p, x, centers);
                auto far = farthest_in_set(p, x, centers);
                for (PointId c2 : centers) {
                    REQUIRE(inst(x, near) <= inst(x, c2));
                    REQUIRE(inst(x, far) >= inst(x, c2));
                }
            }
            REQUIRE(ledger.count() == 0);

            const double v = cost(inst, centers, Objective::kz(2.0));
            REQUIRE(v <= previous);
            previous = v;
            auto d = distances_to_centers(inst, centers);
            double sum = 0.0;
            for (double e : d) sum += e;
            REQUIRE(cost(inst, centers, Objective::kmedian()) == sum);
            REQUIRE(cost(inst, centers, Objective::kcenter()) == *std::max_element(d.begin(), d.end()));
        }
    }
}

TEST_CASE("prescribed rankings are validated") {
    auto inst = line_metric();
    auto rankings = build_profile(inst).rankings();
    CHECK(PreferenceProfile::from_rankings(inst, rankings) == build_profile(inst));
    auto swapped = rankings;
    std::swap(swapped[A][1], swapped[A][3]);
    CHECK_THROWS(PreferenceProfile::from_rankings(inst, swapped));
    auto not_self = rankings;
    std::swap(not_self[B][0], not_self[B][1]);
    CHECK_THROWS(PreferenceProfile::from_rankings(inst, not_self));
}
