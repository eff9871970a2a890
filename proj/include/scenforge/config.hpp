#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace scenforge::config {

struct WeatherTypeSpec {
  std::string cloud_state;
  std::string precipitation_type;
  std::array<double, 2> precipitation{0, 0};
  std::array<double, 2> visibility{1000, 10000};
  std::array<double, 2> friction{0.8, 1.0};
  std::array<double, 2> sun_intensity{50000, 100000};
};

/// Mutation parameters, seed-generation defaults and feature-binning ranges.
/// Ships with the experiment's values; everything is overridable by file.
struct OperatorConfig {
  int variant_count_default = 2;
  double retention = 0.5;

  // seed-generation defaults
  std::map<std::string, double> target_speed;
  std::map<std::string, std::array<double, 3>> dimensions;  // length, width, height
  double max_acceleration = 10.0;
  double max_deceleration = 10.0;
  double max_speed = 70.0;
  std::string color = "white";
  double stop_trigger_time = 60.0;

  // operator parameters
  std::array<double, 2> tsm_acc_factor{1.0, 1.5};
  std::array<double, 2> tsm_dec_factor{0.5, 1.0};
  std::vector<std::string> dtm_shapes;
  std::array<double, 2> dtm_value_range{1, 10};
  double gaussian_sigma_ratio = 0.1;
  std::array<double, 2> gaussian_clamp{0.5, 1.5};
  std::vector<std::string> ncm_categories;
  std::map<std::string, WeatherTypeSpec> weather_types;
  std::array<double, 2> wm_azimuth{0, 6.283185307179586};
  std::array<double, 2> wm_elevation{-3.141592653589793, 3.141592653589793};
  std::vector<std::string> signal_states;
  int oim_count = 2;
  std::array<double, 2> oim_ahead{5, 20};
  std::array<double, 2> oim_length{0.5, 3.0};
  std::array<double, 2> oim_width{0.5, 2.0};
  std::array<double, 2> oim_height{0.5, 2.0};
  double oim_lateral_lane_widths = 1.0;

  // operator families applied per block kind during tree growth
  std::map<std::string, std::vector<std::string>> pipeline;

  int feature_bins = 5;
  std::map<std::string, std::array<double, 2>> feature_ranges;

  double default_speed_for(const std::string& category) const;
  std::array<double, 3> dimensions_for(const std::string& category) const;

  static OperatorConfig load(const std::string& json_text);
};

}  // namespace scenforge::config
