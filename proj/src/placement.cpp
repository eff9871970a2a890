#include "scenforge/placement.hpp"

#include <algorithm>
#include <cmath>

#include "scenforge/error.hpp"
#include "scenforge/rng.hpp"

namespace scenforge::placement {

using map_graph::LaneDirection;
using map_graph::LaneInfo;
using map_graph::RoadNetwork;
using map_graph::RoadSegment;
using map_graph::Turn;
using report_extraction::LaneAlignment;
using report_extraction::NpcFact;
using report_extraction::RelPosCode;

namespace {

int count_code(const EventSequence& events, char code, std::size_t end) {
  int n = 0;
  for (std::size_t i = 0; i < end && i < events.steps.size(); ++i)
    if (events.steps[i].code == code) ++n;
  return n;
}

bool contains_any(const EventSequence& events, const std::vector<char>& codes) {
  for (const auto& step : events.steps)
    if (std::find(codes.begin(), codes.end(), step.code) != codes.end())
      return true;
  return false;
}

bool allows_left(const LaneInfo& lane) {
  return lane.lane_change == map_graph::LaneChange::Left ||
         lane.lane_change == map_graph::LaneChange::Both;
}

bool allows_right(const LaneInfo& lane) {
  return lane.lane_change == map_graph::LaneChange::Right ||
         lane.lane_change == map_graph::LaneChange::Both;
}

/// Simulate the sequence over an ordered lane list (leftmost first).
/// Returns false on the first action without a legal transition.
bool replay_over(const std::vector<const LaneInfo*>& lanes, std::size_t start,
                 const EventSequence& events) {
  if (lanes.empty() || start >= lanes.size()) return false;
  std::size_t pos = start;
  const std::size_t n = lanes.size();
  for (const auto& step : events.steps) {
    switch (step.code) {
      case 'f':  // change lane left
        if (pos == 0 || !allows_left(*lanes[pos])) return false;
        --pos;
        break;
      case 'k':  // overtake: pull out to the left neighbor
        if (pos == 0 || !allows_left(*lanes[pos])) return false;
        --pos;
        break;
      case 'm':  // merge into an adjacent lane, preferring rightward
        if (pos + 1 < n && allows_right(*lanes[pos]))
          ++pos;
        else if (pos > 0 && allows_left(*lanes[pos]))
          --pos;
        else
          return false;
        break;
      case 'd':
        if (!lanes[pos]->turn_affordances.count(Turn::Left)) return false;
        break;
      case 'b':
        if (!lanes[pos]->turn_affordances.count(Turn::Right)) return false;
        break;
      case 'j':
        if (!lanes[pos]->turn_affordances.count(Turn::UTurn)) return false;
        break;
      default:
        break;  // longitudinal actions carry no lane constraint
    }
  }
  return true;
}

std::optional<std::size_t> first_constraining(const EventSequence& events,
                                              const Codebook& codebook) {
  for (std::size_t i = 0; i < events.steps.size(); ++i)
    if (codebook.is_lane_constraining(events.steps[i].code)) return i;
  return std::nullopt;
}

/// Case-1 start lane: derive the turn lane from the first constraining
/// action and shift right one lane per preceding left lane change.
std::size_t case1_start_index(const std::vector<const LaneInfo*>& lanes,
                              const EventSequence& events,
                              const Codebook& codebook,
                              const std::string& segment_id) {
  auto constraining = first_constraining(events, codebook);
  auto fail = [&](const std::string& why) -> std::size_t {
    raise(ErrorCode::InfeasibleAssignment,
          "segment " + segment_id + ": " + why + " for sequence '" +
              events.letters() + "'");
  };
  if (!constraining) return 0;  // default: leftmost drivable lane

  const char code = events.steps[*constraining].code;
  const int shift = count_code(events, 'f', *constraining);
  auto lane_with = [&](Turn turn, bool from_left) -> std::optional<std::size_t> {
    if (from_left) {
      for (std::size_t i = 0; i < lanes.size(); ++i)
        if (lanes[i]->turn_affordances.count(turn)) return i;
    } else {
      for (std::size_t i = lanes.size(); i-- > 0;)
        if (lanes[i]->turn_affordances.count(turn)) return i;
    }
    return std::nullopt;
  };

  std::optional<std::size_t> target;
  switch (code) {
    case 'd': target = lane_with(Turn::Left, true); break;
    case 'j': target = lane_with(Turn::UTurn, true); break;
    case 'b': target = lane_with(Turn::Right, false); break;
    case 'f': {
      // no turn afterwards: start as far right as the replay allows
      for (std::size_t i = lanes.size(); i-- > 0;)
        if (replay_over(lanes, i, events)) return i;
      fail("no lane supports the left lane changes");
    }
    default: {
      // overtake/merge without a turn: leftmost lane whose replay succeeds
      for (std::size_t i = 0; i < lanes.size(); ++i)
        if (replay_over(lanes, i, events)) return i;
      fail("no lane supports the maneuver");
    }
  }
  if (!target) fail("segment lacks the required turn affordance");
  const std::size_t start = *target + std::size_t(shift);
  if (start >= lanes.size())
    fail("not enough lanes right of the turn lane");
  if (!replay_over(lanes, start, events))
    fail("derived start lane cannot replay the sequence");
  return start;
}

struct SegmentFrame {
  const RoadSegment* segment = nullptr;
  LaneDirection direction = LaneDirection::Forward;
  std::vector<const LaneInfo*> lanes;  // leftmost first
  double entry_s = 0.0;                // junction contact arclength
  double travel_sign = 1.0;            // +1 when s grows along travel
};

SegmentFrame frame_for(const RoadNetwork& network, const std::string& id,
                       LaneDirection direction) {
  SegmentFrame frame;
  frame.segment = &network.segment(id);
  frame.direction = direction;
  frame.lanes = frame.segment->driving_lanes(direction);
  frame.travel_sign = direction == LaneDirection::Forward ? 1.0 : -1.0;
  frame.entry_s =
      direction == LaneDirection::Forward ? frame.segment->length : 0.0;
  return frame;
}

double travel_heading(const RoadNetwork& network, const SegmentFrame& frame,
                      double s) {
  if (frame.lanes.empty()) return 0.0;
  return map_graph::resolve_position(network, frame.segment->id,
                                     frame.lanes.front()->lane_id, s)
      .heading;
}

double clamp_s(const RoadSegment& segment, double s) {
  return std::min(std::max(s, 0.0), segment.length);
}

}  // namespace

LaneDirection incoming_direction(const RoadNetwork& network,
                                 const std::string& segment_id) {
  for (const auto* edge : network.junction_edges_from(segment_id))
    return edge->start_lane_id > 0 ? LaneDirection::Backward
                                   : LaneDirection::Forward;
  return LaneDirection::Forward;
}

bool replay_events(const RoadNetwork& network, const std::string& segment_id,
                   LaneDirection direction, int start_lane,
                   const EventSequence& events, const Codebook& codebook) {
  (void)codebook;
  const RoadSegment& segment = network.segment(segment_id);
  const auto lanes = segment.driving_lanes(direction);
  for (std::size_t i = 0; i < lanes.size(); ++i)
    if (lanes[i]->lane_id == start_lane) return replay_over(lanes, i, events);
  return false;
}

map_graph::SceneConstraints derive_constraints(const ReportFacts& facts,
                                               const Codebook& codebook) {
  map_graph::SceneConstraints constraints;
  constraints.min_driving_lanes = std::max(1, facts.av.min_driving_lanes);
  constraints.requires_junction = facts.av.requires_junction;
  constraints.required_turns = facts.av.required_turns;

  for (const auto& npc : facts.npcs) {
    if (!npc.rel_pos.same_segment()) constraints.requires_junction = true;
    int lanes_needed = 1;
    int chain = 0;
    for (const auto& step : npc.events.steps) {
      switch (step.code) {
        case 'f':
        case 'k':
          ++chain;
          lanes_needed = std::max(lanes_needed, 1 + chain);
          break;
        case 'm':
          lanes_needed = std::max(lanes_needed, 2);
          if (chain > 0) --chain;
          break;
        case 'd':
        case 'b':
        case 'j':
          constraints.requires_junction = true;
          chain = 0;
          break;
        default:
          chain = 0;
          break;
      }
    }
    if (npc.lane_alignment == LaneAlignment::DifferentLane)
      lanes_needed = std::max(lanes_needed, 2);
    // lane demands of cross-street NPCs apply to their own road; the fixture
    // junctions are symmetric, so the AV-segment filter carries them too
    constraints.min_driving_lanes =
        std::max(constraints.min_driving_lanes, lanes_needed);
    for (const auto& step : npc.events.steps) {
      if (step.code == 'd') constraints.required_turns.insert(Turn::Left);
      if (step.code == 'b') constraints.required_turns.insert(Turn::Right);
      if (step.code == 'j') constraints.required_turns.insert(Turn::UTurn);
    }
  }
  (void)codebook;
  return constraints;
}

PlacementContext select_segment(const RoadNetwork& network,
                                const ReportFacts& facts,
                                const Codebook& codebook, std::uint64_t seed) {
  const auto constraints = derive_constraints(facts, codebook);
  const auto candidates = map_graph::filter_segments(network, constraints);
  Rng rng(derive_seed(seed, "segment_pick"));
  PlacementContext context;
  context.segment = candidates[rng.index(candidates.size())];
  context.junction = network.junction_of(context.segment);
  context.rng_seed = seed;
  return context;
}

LaneAssignment assign_lanes(const PlacementContext& context,
                            const RoadNetwork& network,
                            const ReportFacts& facts, const Codebook& codebook,
                            const PlacementParams& params) {
  LaneAssignment assignment;
  const LaneDirection av_dir = incoming_direction(network, context.segment);
  SegmentFrame av_frame = frame_for(network, context.segment, av_dir);
  if (av_frame.lanes.empty())
    raise(ErrorCode::InfeasibleAssignment,
          "segment " + context.segment + " has no drivable lane");
  assignment.av_direction = av_dir;

  // AV route affordance: the declared turn when the report demands one,
  // otherwise straight through the junction.
  auto av_feasible = [&](const LaneInfo& lane) {
    if (!context.junction) return true;
    if (!facts.av.required_turns.empty()) {
      for (Turn t : facts.av.required_turns)
        if (lane.turn_affordances.count(t)) return true;
      return false;
    }
    return lane.turn_affordances.count(Turn::Straight) > 0;
  };

  // Case-2 trigger scan across same-segment NPCs
  bool move_av_right = false;
  for (const auto& npc : facts.npcs) {
    if (!npc.rel_pos.same_segment()) continue;
    if (contains_any(npc.events, codebook.trigger_overtake_left))
      move_av_right = true;
    if (npc.lane_alignment == LaneAlignment::SameLane &&
        contains_any(npc.events, codebook.trigger_same_lane_left))
      move_av_right = true;
    if (npc.lane_alignment == LaneAlignment::DifferentLane &&
        contains_any(npc.events, codebook.trigger_different_lane_right))
      move_av_right = true;
  }

  std::optional<std::size_t> av_index;
  if (move_av_right) {
    for (std::size_t i = av_frame.lanes.size(); i-- > 0;)
      if (av_feasible(*av_frame.lanes[i])) {
        av_index = i;
        break;
      }
  } else {
    for (std::size_t i = 0; i < av_frame.lanes.size(); ++i)
      if (av_feasible(*av_frame.lanes[i])) {
        av_index = i;
        break;
      }
  }
  if (!av_index)
    raise(ErrorCode::InfeasibleAssignment,
          "no lane on " + context.segment + " supports the AV route");
  assignment.av_lane = av_frame.lanes[*av_index]->lane_id;

  if (context.junction) {
    assignment.av_s = clamp_s(
        *av_frame.segment,
        av_frame.entry_s - av_frame.travel_sign * params.av_junction_setback);
  } else {
    assignment.av_s = av_frame.segment->length / 2.0;
  }

  const double h_av = travel_heading(network, av_frame, assignment.av_s);

  // resolve the segment for a cross-street NPC by the junction approach
  // bearing relative to the AV
  auto cross_segment = [&](RelPosCode code)
      -> std::optional<std::pair<std::string, LaneDirection>> {
    if (!context.junction) return std::nullopt;
    double want = 0.0;
    switch (code) {
      case RelPosCode::R1:
      case RelPosCode::R3: want = -M_PI / 2.0; break;
      case RelPosCode::R2:
      case RelPosCode::R4: want = M_PI / 2.0; break;
      case RelPosCode::R7: want = M_PI; break;
      default: return std::nullopt;
    }
    for (const auto& [id, seg] : network.segments) {
      if (id == context.segment || seg.inside_junction) continue;
      if (network.junction_of(id) != context.junction) continue;
      const LaneDirection dir = incoming_direction(network, id);
      SegmentFrame frame = frame_for(network, id, dir);
      if (frame.lanes.empty()) continue;
      const double h = travel_heading(
          network, frame,
          clamp_s(*frame.segment, frame.entry_s - frame.travel_sign * 1.0));
      double delta = map_graph::wrap_angle(h - h_av);
      const double err = code == RelPosCode::R7
                             ? std::abs(std::abs(delta) - M_PI)
                             : std::abs(delta - want);
      if (err < M_PI / 4.0) {
        // R3/R4 travel away from the junction: flip to the outgoing side
        if (code == RelPosCode::R3 || code == RelPosCode::R4)
          return std::make_pair(id, dir == LaneDirection::Forward
                                        ? LaneDirection::Backward
                                        : LaneDirection::Forward);
        return std::make_pair(id, dir);
      }
    }
    return std::nullopt;
  };

  for (std::size_t i = 0; i < facts.npcs.size(); ++i) {
    const NpcFact& npc = facts.npcs[i];
    EntityPlacement placement;
    placement.index = i;

    if (npc.rel_pos.same_segment()) {
      placement.segment = context.segment;
      placement.direction = av_dir;
      if (npc.lane_alignment == LaneAlignment::SameLane) {
        placement.lane = assignment.av_lane;
      } else {
        // adjacent lane; prefer the AV's left, fall back to its right
        if (*av_index > 0)
          placement.lane = av_frame.lanes[*av_index - 1]->lane_id;
        else if (*av_index + 1 < av_frame.lanes.size())
          placement.lane = av_frame.lanes[*av_index + 1]->lane_id;
        else
          raise(ErrorCode::InfeasibleAssignment,
                "no adjacent lane for a different-lane NPC on " +
                    context.segment);
      }
      const double gap = av_frame.travel_sign * params.npc_gap;
      placement.s = clamp_s(*av_frame.segment,
                            npc.rel_pos.code == RelPosCode::R5
                                ? assignment.av_s + gap
                                : assignment.av_s - gap);
      if (!replay_events(network, placement.segment, placement.direction,
                         placement.lane, npc.events, codebook))
        raise(ErrorCode::InfeasibleAssignment,
              "npc " + std::to_string(i) + " cannot replay '" +
                  npc.events.letters() + "' from lane " +
                  std::to_string(placement.lane) + " on " + placement.segment);
    } else {
      auto resolved = cross_segment(npc.rel_pos.code);
      if (!resolved)
        raise(ErrorCode::InfeasibleAssignment,
              std::string("no segment matches relative position ") +
                  report_extraction::to_string(npc.rel_pos.code));
      SegmentFrame frame = frame_for(network, resolved->first, resolved->second);
      if (frame.lanes.empty())
        raise(ErrorCode::InfeasibleAssignment,
              "segment " + resolved->first + " has no lane for the NPC");
      const std::size_t start =
          case1_start_index(frame.lanes, npc.events, codebook, resolved->first);
      placement.segment = resolved->first;
      placement.direction = resolved->second;
      placement.lane = frame.lanes[start]->lane_id;
      placement.s = clamp_s(
          *frame.segment,
          frame.entry_s - frame.travel_sign * params.npc_junction_setback);
    }
    assignment.npc_assignments.push_back(placement);
  }

  for (std::size_t i = 0; i < facts.obstacles.size(); ++i) {
    const auto& obstacle = facts.obstacles[i];
    EntityPlacement placement;
    placement.index = i;
    placement.segment = context.segment;
    placement.direction = av_dir;
    placement.lane = assignment.av_lane;
    const double ahead = av_frame.travel_sign * params.obstacle_offset;
    placement.s = clamp_s(*av_frame.segment,
                          obstacle.rel_pos.code == RelPosCode::R6
                              ? assignment.av_s - ahead
                              : assignment.av_s + ahead);
    assignment.obstacle_assignments.push_back(placement);
  }
  return assignment;
}

}  // namespace scenforge::placement
