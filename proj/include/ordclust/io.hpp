#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ordclust/adversarial.hpp"
#include "ordclust/kcenter.hpp"
#include "ordclust/kz.hpp"
#include "ordclust/metric.hpp"
#include "ordclust/profile.hpp"

namespace ordclust {

using Json = nlohmann::json;

struct LoadedInstance {
    MetricInstance instance;
    std::optional<PreferenceProfile> profile;  // present when the file prescribes rankings
};

/// {"points": [...], "norm": "l2"} or {"matrix": [...]}, plus optional
/// "waive_triangle_check" and "rankings".
Json instance_to_json(const MetricInstance& instance, const PreferenceProfile* rankings = nullptr);
LoadedInstance instance_from_json(const Json& doc);

LoadedInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const MetricInstance& instance,
                   const PreferenceProfile* rankings = nullptr);

/// The profile to run on: prescribed rankings if any, else the distance order.
PreferenceProfile profile_for(const LoadedInstance& loaded);

Json descriptor_json(const TreeDescriptor& d);
Json descriptor_json(const BundleDescriptor& d);
Json descriptor_json(const FacilityDescriptor& d);

Json step_json(const KCenterStep& step);
Json round_json(const RoundTrace& round);

void write_json(const std::string& path, const Json& doc);

}  // namespace ordclust
