#include "scenforge/config.hpp"

#include "nlohmann/json.hpp"
#include "scenforge/error.hpp"

namespace scenforge::config {

using nlohmann::json;

namespace {

std::array<double, 2> pair_of(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

double OperatorConfig::default_speed_for(const std::string& category) const {
  auto it = target_speed.find(category);
  return it == target_speed.end() ? 6.0 : it->second;
}

std::array<double, 3> OperatorConfig::dimensions_for(
    const std::string& category) const {
  auto it = dimensions.find(category);
  return it == dimensions.end() ? std::array<double, 3>{4.5, 1.8, 1.5}
                                : it->second;
}

OperatorConfig OperatorConfig::load(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    raise(ErrorCode::CatalogParseError,
          std::string("operator config: ") + e.what());
  }
  OperatorConfig cfg;
  cfg.variant_count_default = doc.value("variant_count_default", 2);
  cfg.retention = doc.value("retention", 0.5);

  if (doc.contains("defaults")) {
    const auto& d = doc["defaults"];
    for (const auto& [k, v] : d.value("target_speed", json::object()).items())
      cfg.target_speed[k] = v.get<double>();
    for (const auto& [k, v] : d.value("dimensions", json::object()).items())
      cfg.dimensions[k] = {v.at(0).get<double>(), v.at(1).get<double>(),
                           v.at(2).get<double>()};
    if (d.contains("performance")) {
      cfg.max_acceleration = d["performance"].value("max_acceleration", 10.0);
      cfg.max_deceleration = d["performance"].value("max_deceleration", 10.0);
      cfg.max_speed = d["performance"].value("max_speed", 70.0);
    }
    cfg.color = d.value("color", "white");
    cfg.stop_trigger_time = d.value("stop_trigger_time", 60.0);
  }

  const json ops = doc.value("operators", json::object());
  if (ops.contains("tsm_speed")) {
    cfg.tsm_acc_factor = pair_of(ops["tsm_speed"].at("acc_factor"));
    cfg.tsm_dec_factor = pair_of(ops["tsm_speed"].at("dec_factor"));
  }
  if (ops.contains("dtm")) {
    for (const auto& s : ops["dtm"].at("shapes"))
      cfg.dtm_shapes.push_back(s.get<std::string>());
    cfg.dtm_value_range = pair_of(ops["dtm"].at("value_range"));
  }
  if (ops.contains("vpm")) {
    cfg.gaussian_sigma_ratio = ops["vpm"].value("sigma_ratio", 0.1);
    if (ops["vpm"].contains("clamp_ratio"))
      cfg.gaussian_clamp = pair_of(ops["vpm"]["clamp_ratio"]);
  }
  if (ops.contains("ncm"))
    for (const auto& c : ops["ncm"].at("categories"))
      cfg.ncm_categories.push_back(c.get<std::string>());
  if (ops.contains("wm")) {
    const auto& wm = ops["wm"];
    if (wm.contains("azimuth")) cfg.wm_azimuth = pair_of(wm["azimuth"]);
    if (wm.contains("elevation")) cfg.wm_elevation = pair_of(wm["elevation"]);
    for (const auto& [name, spec] : wm.at("types").items()) {
      WeatherTypeSpec type;
      type.cloud_state = spec.value("cloud_state", "free");
      type.precipitation_type = spec.value("precipitation_type", "dry");
      type.precipitation = pair_of(spec.at("precipitation"));
      type.visibility = pair_of(spec.at("visibility"));
      type.friction = pair_of(spec.at("friction"));
      if (spec.contains("sun_intensity"))
        type.sun_intensity = pair_of(spec["sun_intensity"]);
      cfg.weather_types[name] = type;
    }
  }
  if (ops.contains("tsm_signal"))
    for (const auto& s : ops["tsm_signal"].at("states"))
      cfg.signal_states.push_back(s.get<std::string>());
  if (ops.contains("oim")) {
    const auto& oim = ops["oim"];
    cfg.oim_count = oim.value("count", 2);
    if (oim.contains("ahead")) cfg.oim_ahead = pair_of(oim["ahead"]);
    if (oim.contains("length")) cfg.oim_length = pair_of(oim["length"]);
    if (oim.contains("width")) cfg.oim_width = pair_of(oim["width"]);
    if (oim.contains("height")) cfg.oim_height = pair_of(oim["height"]);
    cfg.oim_lateral_lane_widths = oim.value("lateral_lane_widths", 1.0);
  }

  for (const auto& [kind, list] : doc.value("pipeline", json::object()).items()) {
    std::vector<std::string> names;
    for (const auto& n : list) names.push_back(n.get<std::string>());
    cfg.pipeline[kind] = names;
  }

  if (doc.contains("features")) {
    cfg.feature_bins = doc["features"].value("bins", 5);
    for (const auto& [k, v] :
         doc["features"].value("numeric_ranges", json::object()).items())
      cfg.feature_ranges[k] = pair_of(v);
  }

  if (cfg.gaussian_sigma_ratio <= 0)
    raise(ErrorCode::InvariantViolation, "gaussian sigma must be positive");
  return cfg;
}

}  // namespace scenforge::config
