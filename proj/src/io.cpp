#include "ordclust/io.hpp"

#include <fstream>
#include <stdexcept>

namespace ordclust {

namespace {

Json pairs_json(const std::vector<PointPair>& pairs) {
    Json out = Json::array();
    for (auto [a, b] : pairs) out.push_back({a, b});
    return out;
}

}  // namespace

Json instance_to_json(const MetricInstance& instance, const PreferenceProfile* rankings) {
    Json doc;
    if (instance.has_points()) {
        doc["points"] = instance.points();
        doc["norm"] = to_string(*instance.norm());
    } else {
        doc["matrix"] = instance.matrix();
    }
    if (instance.triangle_check_waived()) doc["waive_triangle_check"] = true;
    if (rankings) doc["rankings"] = rankings->rankings();
    return doc;
}

LoadedInstance instance_from_json(const Json& doc) {
    try {
        if (!doc.is_object()) throw InvalidInstance("instance document must be a JSON object");
        const bool waive = doc.value("waive_triangle_check", false);
        std::optional<MetricInstance> instance;
        if (doc.contains("points")) {
            if (doc.contains("matrix")) throw InvalidInstance("give either points or matrix, not both");
            auto points = doc.at("points").get<std::vector<std::vector<double>>>();
            instance = MetricInstance::from_points(std::move(points), parse_norm(doc.value("norm", "l2")));
        } else if (doc.contains("matrix")) {
            instance = MetricInstance::from_matrix(doc.at("matrix").get<std::vector<std::vector<double>>>(), waive);
        } else {
            throw InvalidInstance("instance needs a points or matrix key");
        }
        LoadedInstance out{std::move(*instance), std::nullopt};
        if (doc.contains("rankings")) {
            out.profile = PreferenceProfile::from_rankings(
                out.instance, doc.at("rankings").get<std::vector<std::vector<PointId>>>());
        }
        return out;
    } catch (const Json::exception& e) {
        throw InvalidInstance(std::string("malformed instance: ") + e.what());
    }
}

LoadedInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const Json::exception& e) {
        throw InvalidInstance(path + ": " + e.what());
    }
    return instance_from_json(doc);
}

void write_json(const std::string& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << doc.dump(2) << '\n';
}

void save_instance(const std::string& path, const MetricInstance& instance, const PreferenceProfile* rankings) {
    write_json(path, instance_to_json(instance, rankings));
}

PreferenceProfile profile_for(const LoadedInstance& loaded) {
    return loaded.profile ? *loaded.profile : build_profile(loaded.instance);
}

Json descriptor_json(const TreeDescriptor& d) {
    return {{"family", "tree"},
            {"k", d.k},
            {"D", d.D},
            {"hidden_leaf", d.hidden_leaf},
            {"path", d.path},
            {"canonical_centers", d.canonical_centers},
            {"opt_closed_form", d.opt_closed_form},
            {"opt_cost", d.opt_cost}};
}

Json descriptor_json(const BundleDescriptor& d) {
    return {{"family", "bundles"},
            {"k", d.k},
            {"alpha", d.alpha},
            {"hidden_leaf", d.hidden_leaf},
            {"level", d.level},
            {"path", d.path},
            {"bundle_count", d.bundle_count},
            {"gadget_size", d.gadget_size},
            {"canonical_centers", d.canonical_centers},
            {"opt_closed_form", d.opt_closed_form},
            {"opt_cost", d.opt_cost}};
}

Json descriptor_json(const FacilityDescriptor& d) {
    return {{"family", "facility-hard"},
            {"special_cluster", d.special_cluster},
            {"far", d.far},
            {"N", d.N},
            {"opening_cost", d.opening_cost},
            {"canonical_centers", d.canonical_centers},
            {"opt_closed_form", d.opt_closed_form},
            {"opt_cost", d.opt_cost}};
}

Json step_json(const KCenterStep& step) {
    Json farthest = Json::array();
    for (auto [c, f] : step.farthest) farthest.push_back({c, f});
    Json out{{"iteration", step.iteration},
             {"centers", step.centers},
             {"query_set", step.query_set},
             {"farthest", farthest},
             {"revealed", pairs_json(step.revealed)}};
    if (!step.is_final()) {
        out["selected_center"] = step.selected_center;
        out["selected_point"] = step.selected_point;
    }
    return out;
}

Json round_json(const RoundTrace& round) {
    Json out{{"round", round.round},
             {"centers", round.centers},
             {"ring_size", round.ring_size},
             {"inclusion_probability", round.inclusion_probability},
             {"added", round.added}};
    if (!round.ring_estimate.empty()) out["ring_estimate"] = round.ring_estimate;
    if (!round.estimated_probability.empty()) out["estimated_probability"] = round.estimated_probability;
    return out;
}

}  // namespace ordclust
