#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordclust/adversarial.hpp"
#include "ordclust/experiment.hpp"
#include "ordclust/facility.hpp"
#include "ordclust/io.hpp"
#include "ordclust/kcenter.hpp"
#include "ordclust/kz.hpp"
#include "ordclust/oracle.hpp"

namespace py = pybind11;
using namespace ordclust;

namespace {

Objective make_objective(const std::string& name, double z, double f) {
    if (name == "kcenter") return Objective::kcenter();
    if (name == "kmedian") return Objective::kmedian();
    if (name == "kz") return Objective::kz(z);
    if (name == "facility") return Objective::facility(f);
    throw std::invalid_argument("unknown objective '" + name + "'");
}

py::object to_python(const Json& doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

template <class Desc>
py::tuple generated(Generated<Desc>&& g) {
    return py::make_tuple(std::move(g.instance), std::move(g.profile), to_python(descriptor_json(g.descriptor)));
}

Augment parse_augment(const std::string& name) {
    if (name == "zero") return Augment::zero;
    if (name == "2k") return Augment::two_k;
    throw std::invalid_argument("augment must be 'zero' or '2k'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<InvalidInstance>(m, "InvalidInstance", PyExc_ValueError);
    py::register_exception<OracleBudgetExceeded>(m, "OracleBudgetExceeded", PyExc_RuntimeError);

    py::class_<MetricInstance>(m, "MetricInstance")
        .def_static("from_matrix", &MetricInstance::from_matrix, py::arg("rows"),
                    py::arg("waive_triangle_check") = false)
        .def_static(
            "from_points",
            [](std::vector<std::vector<double>> pts, const std::string& norm) {
                return MetricInstance::from_points(std::move(pts), parse_norm(norm));
            },
            py::arg("points"), py::arg("norm") = "l2")
        .def("__len__", &MetricInstance::size)
        .def_property_readonly("size", &MetricInstance::size)
        .def("distance", &MetricInstance::distance)
        .def("matrix", &MetricInstance::matrix);

    py::class_<PreferenceProfile>(m, "PreferenceProfile")
        .def("ranking",
             [](const PreferenceProfile& p, PointId x) {
                 auto r = p.ranking(x);
                 return std::vector<PointId>(r.begin(), r.end());
             })
        .def("rank", &PreferenceProfile::rank)
        .def("rankings", &PreferenceProfile::rankings)
        .def("__eq__", [](const PreferenceProfile& a, const PreferenceProfile& b) { return a == b; });

    py::class_<QueryLedger>(m, "QueryLedger")
        .def(py::init<>())
        .def("count", &QueryLedger::count)
        .def("calls", &QueryLedger::calls);

    m.def("build_profile", &build_profile);
    m.def("load_instance", [](const std::string& path) {
        auto loaded = load_instance(path);
        auto profile = profile_for(loaded);
        return py::make_tuple(std::move(loaded.instance), std::move(profile));
    });

    m.def(
        "cost",
        [](const MetricInstance& inst, const std::vector<PointId>& centers, const std::string& objective, double z,
           double f) { return cost(inst, centers, make_objective(objective, z, f)); },
        py::arg("instance"), py::arg("centers"), py::arg("objective") = "kmedian", py::arg("z") = 1.0,
        py::arg("f") = 1.0);
    m.def(
        "brute_force_opt",
        [](const MetricInstance& inst, std::size_t k, const std::string& objective, double z, double f) {
            auto opt = objective == "facility" ? brute_force_facility_opt(inst, f)
                                               : brute_force_opt(inst, k, make_objective(objective, z, f));
            return py::make_tuple(opt.solution.centers, opt.cost);
        },
        py::arg("instance"), py::arg("k"), py::arg("objective") = "kmedian", py::arg("z") = 1.0, py::arg("f") = 1.0);
    m.def("distortion_ratio", &distortion_ratio);

    auto fresh = [](QueryLedger* ledger, QueryLedger& local) -> QueryLedger& { return ledger ? *ledger : local; };

    m.def(
        "kcenter_quadratic",
        [fresh](const MetricInstance& inst, const PreferenceProfile& p, std::size_t k, QueryLedger* ledger) {
            QueryLedger local;
            return kcenter_quadratic(inst, p, k, fresh(ledger, local)).centers;
        },
        py::arg("instance"), py::arg("profile"), py::arg("k"), py::arg("ledger") = nullptr);
    m.def(
        "kcenter_zero_query",
        [](const PreferenceProfile& p, std::size_t k) { return kcenter_zero_query(p, k).centers; },
        py::arg("profile"), py::arg("k"));
    m.def(
        "kcenter_2k_query",
        [fresh](const MetricInstance& inst, const PreferenceProfile& p, std::size_t k, QueryLedger* ledger) {
            QueryLedger local;
            return kcenter_2k_query(inst, p, k, fresh(ledger, local)).centers;
        },
        py::arg("instance"), py::arg("profile"), py::arg("k"), py::arg("ledger") = nullptr);

    m.def(
        "kz_zero_query",
        [fresh](const MetricInstance& inst, const PreferenceProfile& p, std::size_t k, std::uint64_t seed,
                const std::string& augment, bool amplified, QueryLedger* ledger) {
            QueryLedger local;
            Rng rng(seed);
            ZeroQueryOptions options;
            options.augment = parse_augment(augment);
            auto& l = fresh(ledger, local);
            return (amplified ? kz_zero_query_amplified(inst, p, k, rng, l, options)
                              : kz_zero_query(inst, p, k, rng, l, options))
                .centers;
        },
        py::arg("instance"), py::arg("profile"), py::arg("k"), py::arg("seed") = 0, py::arg("augment") = "zero",
        py::arg("amplified") = false, py::arg("ledger") = nullptr);

    m.def(
        "kmedian_low_query",
        [fresh](const MetricInstance& inst, const PreferenceProfile& p, std::size_t k, double z, std::uint64_t seed,
                std::optional<std::size_t> rounds, QueryLedger* ledger) {
            QueryLedger local;
            Rng rng(seed);
            LowQueryOptions options;
            options.rounds = rounds;
            auto res = kmedian_low_query(inst, p, k, z, fresh(ledger, local), rng, options);
            py::dict out;
            out["centers"] = res.solution.centers;
            out["sampled"] = res.sampled;
            out["rounds_run"] = res.rounds_run;
            out["reduction_queries"] = res.reduction_queries;
            return out;
        },
        py::arg("instance"), py::arg("profile"), py::arg("k"), py::arg("z") = 1.0, py::arg("seed") = 0,
        py::arg("rounds") = std::nullopt, py::arg("ledger") = nullptr);

    m.def(
        "meyerson",
        [fresh](const MetricInstance& inst, const PreferenceProfile& p, double f, std::uint64_t seed,
                QueryLedger* ledger) {
            QueryLedger local;
            Rng rng(seed);
            return meyerson(inst, p, {f, std::nullopt}, fresh(ledger, local), rng).centers;
        },
        py::arg("instance"), py::arg("profile"), py::arg("f") = 1.0, py::arg("seed") = 0, py::arg("ledger") = nullptr);

    m.def(
        "gen_kcenter_tree",
        [](std::size_t k, double D, std::uint64_t seed) {
            Rng rng(seed);
            return generated(gen_kcenter_tree({k, D}, rng));
        },
        py::arg("k"), py::arg("D") = 1e3, py::arg("seed") = 0);
    m.def(
        "gen_kmedian_bundles",
        [](std::size_t k, std::size_t alpha, std::size_t n_prime, double D, std::uint64_t seed) {
            Rng rng(seed);
            return generated(gen_kmedian_bundles({k, alpha, n_prime, D, 1e-6}, rng));
        },
        py::arg("k") = 3, py::arg("alpha") = 1, py::arg("n_prime") = 8, py::arg("D") = 1e3, py::arg("seed") = 0);
    m.def(
        "gen_facility_hard",
        [](std::size_t cluster_size, std::size_t clusters, double f, std::uint64_t seed) {
            Rng rng(seed);
            return generated(gen_facility_hard({cluster_size, clusters, 0.0, 1e-6, f}, rng));
        },
        py::arg("cluster_size") = 2, py::arg("clusters") = 4, py::arg("f") = 1.0, py::arg("seed") = 0);

    m.def("algorithm_names", &algorithm_names);
    m.def("family_names", &family_names);
}
