#include "scenforge/placement.hpp"

#include <set>

#include "doctest.h"
#include "scenforge/error.hpp"
#include "scenforge/util.hpp"

using namespace scenforge;
using namespace scenforge::placement;
using namespace scenforge::report_extraction;
using map_graph::LaneDirection;
using map_graph::RoadNetwork;
using map_graph::Turn;

namespace {

const Codebook& codebook() {
  static Codebook book = Codebook::load(
      read_file(std::string(SCENFORGE_DATA_DIR) + "/codebook.json"));
  return book;
}

RoadNetwork load_map(const std::string& name) {
  const std::string path = std::string(SCENFORGE_DATA_DIR) + "/maps/" + name;
  return map_graph::parse_opendrive(read_file(path), name);
}

ReportFacts facts_for(const std::string& report_name) {
  static FixtureBackend backend(std::string(SCENFORGE_DATA_DIR) +
                                "/transcripts");
  const std::string text = trim(read_file(
      std::string(SCENFORGE_DATA_DIR) + "/reports/" + report_name));
  return extract_facts(text, backend, codebook(), report_name);
}

PlacementContext context_on(const RoadNetwork& net, const std::string& segment,
                            std::uint64_t seed = 1) {
  PlacementContext ctx;
  ctx.segment = segment;
  ctx.junction = net.junction_of(segment);
  ctx.rng_seed = seed;
  return ctx;
}

}  // namespace

TEST_CASE("derived constraints reflect lane and junction demands") {
  ReportFacts bicycle = facts_for("report_bicycle.txt");
  auto c = derive_constraints(bicycle, codebook());
  CHECK(c.min_driving_lanes == 2);
  CHECK_FALSE(c.requires_junction);

  ReportFacts junction = facts_for("report_junction_left.txt");
  auto cj = derive_constraints(junction, codebook());
  CHECK(cj.requires_junction);
  CHECK(cj.required_turns.count(Turn::Left) == 1);
}

TEST_CASE("select_segment is deterministic per seed and respects filters") {
  RoadNetwork net = load_map("cross_junction.xodr");
  ReportFacts facts = facts_for("report_junction_left.txt");
  PlacementContext a = select_segment(net, facts, codebook(), 42);
  PlacementContext b = select_segment(net, facts, codebook(), 42);
  CHECK(a.segment == b.segment);
  CHECK(a.junction.has_value());
  const std::set<std::string> arms{"1", "2", "3", "4"};
  CHECK(arms.count(a.segment) == 1);

  // different seeds stay within the candidate set
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 7ull, 99ull}) {
    PlacementContext c = select_segment(net, facts, codebook(), seed);
    CHECK(arms.count(c.segment) == 1);
  }
}

TEST_CASE("unique candidate is chosen regardless of seed") {
  RoadNetwork net = load_map("cross_junction.xodr");
  // only arm 1 feeds a u-turn connection on this fixture
  ReportFacts facts;
  facts.report_id = "uturn";
  NpcFact npc;
  npc.category = NpcCategory::Sedan;
  npc.rel_pos.code = RelPosCode::R5;
  npc.lane_alignment = LaneAlignment::SameLane;
  npc.events.steps = {{'a', {}, {}}, {'j', {}, {}}};
  facts.npcs.push_back(npc);
  for (std::uint64_t seed : {1ull, 5ull, 1234ull}) {
    PlacementContext ctx = select_segment(net, facts, codebook(), seed);
    CHECK(ctx.segment == "1");
  }
}

TEST_CASE("unsatisfiable constraints propagate NoCandidate") {
  RoadNetwork net = load_map("straight_road.xodr");
  ReportFacts facts = facts_for("report_junction_left.txt");  // needs a junction
  try {
    select_segment(net, facts, codebook(), 1);
    FAIL("expected NoCandidate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoCandidate);
  }
}

TEST_CASE("case 1: 'ad' starts in the dedicated left-turn lane") {
  RoadNetwork net = load_map("cross_junction.xodr");
  ReportFacts facts = facts_for("report_junction_left.txt");
  // AV northbound on arm 3; its cross street on the left is arm 1, whose
  // lane 1 is the dedicated left-turn lane
  LaneAssignment assignment =
      assign_lanes(context_on(net, "3"), net, facts, codebook());
  REQUIRE(assignment.npc_assignments.size() == 1);
  const EntityPlacement& npc = assignment.npc_assignments[0];
  CHECK(npc.segment == "1");
  CHECK(npc.lane == 1);
  CHECK(npc.direction == LaneDirection::Backward);
}

TEST_CASE("case 1: 'afd' starts one lane right of the turn lane") {
  RoadNetwork net = load_map("cross_junction.xodr");
  ReportFacts facts = facts_for("report_afd.txt");
  LaneAssignment assignment =
      assign_lanes(context_on(net, "3"), net, facts, codebook());
  REQUIRE(assignment.npc_assignments.size() == 1);
  const EntityPlacement& npc = assignment.npc_assignments[0];
  CHECK(npc.segment == "1");
  CHECK(npc.lane == 2);  // rightward start so the left change lands on lane 1
  CHECK(replay_events(net, npc.segment, npc.direction, npc.lane,
                      facts.npcs[0].events, codebook()));
}

TEST_CASE("case 2: overtake from the left pushes the AV rightmost") {
  RoadNetwork net = load_map("straight_road.xodr");
  ReportFacts facts = facts_for("report_overtake.txt");
  LaneAssignment assignment =
      assign_lanes(context_on(net, "1"), net, facts, codebook());
  CHECK(assignment.av_lane == -2);  // rightmost feasible forward lane
  REQUIRE(assignment.npc_assignments.size() == 1);
  CHECK(assignment.npc_assignments[0].lane == -2);  // same lane, behind
  CHECK(assignment.npc_assignments[0].s < assignment.av_s);
}

TEST_CASE("case 2 default: AV keeps the leftmost lane") {
  RoadNetwork net = load_map("straight_road.xodr");
  ReportFacts facts = facts_for("report_bicycle.txt");
  LaneAssignment assignment =
      assign_lanes(context_on(net, "1"), net, facts, codebook());
  CHECK(assignment.av_lane == -1);  // leftmost: no case-2 trigger fires
  REQUIRE(assignment.npc_assignments.size() == 1);
  const EntityPlacement& npc = assignment.npc_assignments[0];
  CHECK(npc.lane == -2);  // adjacent lane, ahead of the AV
  CHECK(npc.s > assignment.av_s);
  CHECK(replay_events(net, npc.segment, npc.direction, npc.lane,
                      facts.npcs[0].events, codebook()));
}

TEST_CASE("assignment is a pure function of its inputs") {
  RoadNetwork net = load_map("cross_junction.xodr");
  ReportFacts facts = facts_for("report_afd.txt");
  LaneAssignment a = assign_lanes(context_on(net, "3"), net, facts, codebook());
  LaneAssignment b = assign_lanes(context_on(net, "3"), net, facts, codebook());
  CHECK(a.av_lane == b.av_lane);
  CHECK(a.av_s == b.av_s);
  REQUIRE(a.npc_assignments.size() == b.npc_assignments.size());
  for (std::size_t i = 0; i < a.npc_assignments.size(); ++i) {
    CHECK(a.npc_assignments[i].lane == b.npc_assignments[i].lane);
    CHECK(a.npc_assignments[i].s == b.npc_assignments[i].s);
  }
}

TEST_CASE("every produced assignment replays its event sequences") {
  RoadNetwork junction = load_map("cross_junction.xodr");
  RoadNetwork straight = load_map("straight_road.xodr");
  struct Case {
    const RoadNetwork* net;
    std::string segment;
    std::string report;
  };
  for (const Case& c :
       {Case{&junction, "3", "report_junction_left.txt"},
        Case{&junction, "2", "report_afd.txt"},
        Case{&straight, "1", "report_overtake.txt"},
        Case{&straight, "2", "report_bicycle.txt"}}) {
    ReportFacts facts = facts_for(c.report);
    LaneAssignment assignment =
        assign_lanes(context_on(*c.net, c.segment), *c.net, facts, codebook());
    for (const auto& npc : assignment.npc_assignments) {
      INFO(c.report << " npc " << npc.index << " on " << npc.segment);
      CHECK(replay_events(*c.net, npc.segment, npc.direction, npc.lane,
                          facts.npcs[npc.index].events, codebook()));
    }
  }
}

TEST_CASE("obstacles sit ahead of the AV in its lane") {
  RoadNetwork net = load_map("straight_road.xodr");
  ReportFacts facts = facts_for("report_obstacle.txt");
  LaneAssignment assignment =
      assign_lanes(context_on(net, "1"), net, facts, codebook());
  CHECK(assignment.npc_assignments.empty());
  REQUIRE(assignment.obstacle_assignments.size() == 1);
  const EntityPlacement& obstacle = assignment.obstacle_assignments[0];
  CHECK(obstacle.lane == assignment.av_lane);
  CHECK(obstacle.s == doctest::Approx(assignment.av_s + 20.0));
}

TEST_CASE("cross-street npc without a junction is infeasible") {
  RoadNetwork net = load_map("straight_road.xodr");
  ReportFacts facts = facts_for("report_junction_left.txt");
  try {
    assign_lanes(context_on(net, "1"), net, facts, codebook());
    FAIL("expected InfeasibleAssignment");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfeasibleAssignment);
  }
}
