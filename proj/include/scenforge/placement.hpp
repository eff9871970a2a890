#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scenforge/map_graph.hpp"
#include "scenforge/report_extraction.hpp"

namespace scenforge::placement {

using report_extraction::Codebook;
using report_extraction::EventSequence;
using report_extraction::ReportFacts;

/// Longitudinal offsets are not lane semantics; they are configuration.
struct PlacementParams {
  double av_junction_setback = 30.0;   // m upstream of the junction entry
  double npc_gap = 15.0;               // gap to same-segment NPCs
  double npc_junction_setback = 20.0;  // cross-street NPC distance to junction
  double obstacle_offset = 20.0;       // obstacle distance from the AV
};

struct PlacementContext {
  std::string segment;
  std::optional<std::string> junction;
  std::uint64_t rng_seed = 0;
};

struct EntityPlacement {
  std::size_t index = 0;  // into facts.npcs / facts.obstacles
  std::string segment;
  int lane = 0;
  double s = 0.0;
  map_graph::LaneDirection direction = map_graph::LaneDirection::Forward;
};

struct LaneAssignment {
  int av_lane = 0;
  double av_s = 0.0;
  map_graph::LaneDirection av_direction = map_graph::LaneDirection::Forward;
  std::vector<EntityPlacement> npc_assignments;
  std::vector<EntityPlacement> obstacle_assignments;
};

/// Scene constraints implied by the report: lane demands from event
/// sequences, junction demands from turns and cross-street positions.
map_graph::SceneConstraints derive_constraints(const ReportFacts& facts,
                                               const Codebook& codebook);

/// Filter candidates and pick one with the seeded generator. Same seed,
/// same pick.
PlacementContext select_segment(const map_graph::RoadNetwork& network,
                                const ReportFacts& facts,
                                const Codebook& codebook, std::uint64_t seed);

/// Two-case initial lane rule. Case 1 (R1-R4, R7): the NPC lane follows the
/// first lane-constraining action of its sequence. Case 2 (R5, R6): the AV
/// defaults to the leftmost lane but moves to the rightmost feasible lane
/// when the NPC overtakes from the left, shares the lane and changes left,
/// or sits in a different lane and changes right.
LaneAssignment assign_lanes(const PlacementContext& context,
                            const map_graph::RoadNetwork& network,
                            const ReportFacts& facts, const Codebook& codebook,
                            const PlacementParams& params = {});

/// Replay an event sequence from a start lane over the segment's lane
/// metadata; true when every action has a legal lane transition.
bool replay_events(const map_graph::RoadNetwork& network,
                   const std::string& segment_id,
                   map_graph::LaneDirection direction, int start_lane,
                   const EventSequence& events, const Codebook& codebook);

/// Travel direction whose lanes feed the junction; Forward when the segment
/// does not feed one.
map_graph::LaneDirection incoming_direction(
    const map_graph::RoadNetwork& network, const std::string& segment_id);

}  // namespace scenforge::placement
