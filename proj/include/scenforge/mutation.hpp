#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scenforge/config.hpp"
#include "scenforge/rng.hpp"
#include "scenforge/scenario_gen.hpp"
#include "scenforge/schema_model.hpp"
#include "scenforge/xml.hpp"

namespace scenforge::mutation {

enum class BlockKind { Weather, NpcDefinition, TrafficSignal, Event, Obstacle };
const char* to_string(BlockKind kind);
std::optional<BlockKind> block_kind_from(const std::string& name);
/// Fixed insertion order: weather, NPCs, traffic signals, events, obstacles.
int kind_order(BlockKind kind);

struct BlockIdentity {
  std::string tag;
  std::string name;
  std::string str() const { return tag + ":" + name; }
  bool operator==(const BlockIdentity&) const = default;
};

/// Independently mutable fragment. Multi-element blocks (an NPC definition
/// with its init actions and maneuver shell) aggregate siblings under a
/// synthetic <Fragment> root; identity comes from the primary element.
struct ScenarioBlock {
  BlockKind kind = BlockKind::Weather;
  xml::Node xml;
  BlockIdentity identity;
  std::string slot;  // "init_actions" | "entities" | "maneuver:<npc>"
};

enum class MutationOperator {
  TsmSpeed,   // AbsoluteTargetSpeed
  Dtm,        // TransitionDynamics value/dynamicsShape
  Vpm,        // Performance limits
  Wpm,        // Waypoint lateral offsets
  Dm,         // BoundingBox dimensions
  Ncm,        // NPC category swap
  Wm,         // weather type + parameters + friction
  TsmSignal,  // TrafficSignalStateAction state
  Oim,        // static obstacle insertion
};
const char* to_string(MutationOperator op);
std::optional<MutationOperator> operator_from(const std::string& name);

enum class Strategy { RandomSampling, Gaussian, ContextAware, Enumerative };
Strategy strategy_of(MutationOperator op);

/// Direction of a target-speed mutation, derived from the event's action
/// letter when not forced.
enum class SpeedDirection { Accelerate, Decelerate };

struct MutationSpec {
  MutationOperator op = MutationOperator::TsmSpeed;
  Strategy strategy = Strategy::RandomSampling;
  const config::OperatorConfig* config = nullptr;
  std::optional<SpeedDirection> speed_direction;  // TsmSpeed only

  static MutationSpec for_operator(MutationOperator op,
                                   const config::OperatorConfig& config);
};

struct ValueChange {
  std::string attribute;  // element/attr path within the block
  std::string old_value;
  std::string new_value;
};

struct BlockVariant {
  BlockIdentity base;
  MutationOperator op = MutationOperator::TsmSpeed;
  xml::Node xml;
  std::vector<ValueChange> provenance;
};

/// Map/placement context for context-aware strategies plus the schema used
/// to validate every variant.
struct MutationContext {
  const schema_model::SchemaGraph* schema = nullptr;
  const map_graph::RoadNetwork* network = nullptr;
  const scenario_gen::Metadata* metadata = nullptr;
};

/// Split a document into its static template and the mutable blocks, in the
/// fixed insertion order. compose_full(template, blocks) restores a
/// structurally equal document.
std::pair<scenario_gen::ScenarioTemplate, std::vector<ScenarioBlock>>
disassemble(const scenario_gen::ScenarioDocument& doc);

/// One value by the configured strategy: uniform in range, gaussian noise
/// clamped around the original, or computed from map topology. Same seed,
/// same value.
double sample_value(const MutationSpec& spec, double original,
                    const schema_model::ValueDomain& domain, Rng& rng,
                    const MutationContext& context);

bool operator_applicable(MutationOperator op, const ScenarioBlock& block);

/// `count` variants for sampled strategies; every literal for enumerative
/// operators. Throws OperatorKindMismatch when the operator does not target
/// this block kind or the block lacks the target element.
std::vector<BlockVariant> mutate_block(const ScenarioBlock& block,
                                       const MutationSpec& spec, int count,
                                       Rng& rng,
                                       const MutationContext& context);

/// Template-level obstacle insertion: fresh obstacle blocks placed relative
/// to the AV's path (even indices block the lane, odd ones sit beside it).
std::vector<BlockVariant> oim_insertions(const MutationSpec& spec, int count,
                                         Rng& rng,
                                         const MutationContext& context);

/// Identity of a block fragment (primary element tag + name attribute).
BlockIdentity identity_of(const xml::Node& block_xml);

}  // namespace scenforge::mutation
