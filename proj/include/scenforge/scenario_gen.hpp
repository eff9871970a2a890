#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "scenforge/config.hpp"
#include "scenforge/placement.hpp"
#include "scenforge/report_extraction.hpp"
#include "scenforge/schema_model.hpp"
#include "scenforge/xml.hpp"

namespace scenforge::scenario_gen {

/// Traceability payload embedded as an XML comment in every document.
struct NpcMeta {
  std::string name;
  std::string category;
  std::string segment;
  int lane = 0;
  double s = 0.0;
  double init_speed = 0.0;
  std::string rel_pos;
  std::string lane_alignment;
  std::string events;  // codebook letters
};

struct SignalMeta {
  std::string name;
  double x = 0.0;
  double y = 0.0;
};

struct Metadata {
  std::string report_id;
  std::uint64_t seed = 0;
  std::string map;
  std::string segment;
  std::optional<std::string> junction;
  int av_lane = 0;
  double av_s = 0.0;
  map_graph::WorldPose av_pose;
  map_graph::WorldPose goal;
  std::vector<NpcMeta> npcs;
  std::vector<SignalMeta> signals;

  nlohmann::json to_json() const;
  static Metadata from_json(const nlohmann::json& doc);
};

struct ScenarioDocument {
  xml::Node root;
  Metadata metadata;
};

/// Static skeleton with named insertion slots. Slot paths are element paths
/// under the root; maneuver slots resolve dynamically against inserted
/// maneuver groups.
struct ScenarioTemplate {
  xml::Node skeleton;
  std::map<std::string, std::string> slot_index;
  std::string road_network_ref;
};

struct GenerationEnv {
  const map_graph::RoadNetwork& network;
  const schema_model::SchemaGraph& schema;
  const report_extraction::Codebook& codebook;
  const config::OperatorConfig& config;
};

/// Skeleton with FileHeader, declarations, road-network reference, empty
/// Entities and a Storyboard shell; annotates traffic signals when the
/// context junction has signal anchors. Deterministic for a given context.
ScenarioTemplate init_template(const GenerationEnv& env,
                               const placement::PlacementContext& context);

/// Fill every slot: ego and NPC definitions, initial states, signal
/// operations and NPC event maneuvers. Backend fragments are validated
/// before insertion; a failing fragment raises FragmentInvalid naming the
/// slot. The result passes document-scope validation.
ScenarioDocument fill_content(const GenerationEnv& env,
                              const ScenarioTemplate& tmpl,
                              const report_extraction::ReportFacts& facts,
                              const placement::LaneAssignment& assignment,
                              report_extraction::ExtractionBackend& backend,
                              std::uint64_t seed);

/// UTF-8 XML with stable attribute order; re-parsing yields a structurally
/// equal document, identical documents serialize byte-identically.
void serialize(const ScenarioDocument& doc, const std::filesystem::path& path);
std::string serialize_to_string(const ScenarioDocument& doc);

ScenarioDocument parse_document(const std::string& text);
ScenarioDocument load_document(const std::filesystem::path& path);

/// Schema validation at document scope plus referential checks: unique
/// entity names, every storyboard entity reference resolves.
schema_model::ValidationReport check_document(
    const schema_model::SchemaGraph& schema, const ScenarioDocument& doc);

/// Entity naming shared across generation, mutation and assembly.
std::string npc_name(std::size_t index);       // npc_1, npc_2, ...
std::string obstacle_name(std::size_t index);  // obstacle_1, ...
inline constexpr const char* kEgoName = "ego_vehicle";

/// OpenSCENARIO vehicleCategory for a codebook category name.
std::string osc_vehicle_category(const std::string& category);

}  // namespace scenforge::scenario_gen
