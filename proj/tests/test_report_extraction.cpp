#include "scenforge/report_extraction.hpp"

#include "doctest.h"
#include "scenforge/error.hpp"
#include "scenforge/util.hpp"

using namespace scenforge;
using namespace scenforge::report_extraction;

namespace {

const Codebook& codebook() {
  static Codebook book = Codebook::load(
      read_file(std::string(SCENFORGE_DATA_DIR) + "/codebook.json"));
  return book;
}

FixtureBackend make_backend() {
  return FixtureBackend(std::string(SCENFORGE_DATA_DIR) + "/transcripts");
}

std::string report(const std::string& name) {
  return trim(
      read_file(std::string(SCENFORGE_DATA_DIR) + "/reports/" + name));
}

}  // namespace

TEST_CASE("normalize_events maps phrases onto codebook letters") {
  EventSequence seq =
      normalize_events({"proceed straight", "turn left"}, codebook());
  CHECK(seq.letters() == "ad");

  seq = normalize_events({"proceed straight", "change lane left", "turn left"},
                         codebook());
  CHECK(seq.letters() == "afd");

  // adjacent duplicates collapse
  seq = normalize_events({"proceed", "go straight", "turn left"}, codebook());
  CHECK(seq.letters() == "ad");

  try {
    normalize_events({"levitate"}, codebook());
    FAIL("expected UnknownAction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownAction);
  }
}

TEST_CASE("extract_facts parses the bicycle fixture deterministically") {
  FixtureBackend backend = make_backend();
  const std::string text = report("report_bicycle.txt");
  ReportFacts facts = extract_facts(text, backend, codebook(), "bicycle");
  REQUIRE(facts.npcs.size() == 1);
  const NpcFact& npc = facts.npcs[0];
  CHECK(npc.category == NpcCategory::Bicycle);
  CHECK(npc.rel_pos.code == RelPosCode::R5);
  CHECK(npc.lane_alignment == LaneAlignment::DifferentLane);
  CHECK(npc.events.letters() == "af");
  CHECK(npc.target_speed == doctest::Approx(3.0));
  CHECK(facts.av.min_driving_lanes == 2);
  CHECK_FALSE(facts.av.requires_junction);

  // identical text, identical facts
  ReportFacts again = extract_facts(text, backend, codebook(), "bicycle");
  CHECK(to_json(facts) == to_json(again));
}

TEST_CASE("incomplete reports are blocked, not guessed") {
  FixtureBackend backend = make_backend();
  try {
    extract_facts(report("report_weather_only.txt"), backend, codebook());
    FAIL("expected IncompleteReport");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompleteReport);
  }
  try {
    extract_facts("", backend, codebook());
    FAIL("expected IncompleteReport");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompleteReport);
  }
}

TEST_CASE("unknown request surfaces BackendError") {
  FixtureBackend backend = make_backend();
  try {
    extract_facts("a report nobody recorded", backend, codebook());
    FAIL("expected BackendError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BackendError);
  }
}

TEST_CASE("classify_relative_position returns codes and alignment") {
  FixtureBackend backend = make_backend();
  auto [pos, alignment] = classify_relative_position(
      "in the same lane ahead of the AV", backend, codebook());
  CHECK(pos.code == RelPosCode::R5);
  CHECK(pos.same_segment());
  CHECK(alignment == LaneAlignment::SameLane);

  auto [cross, cross_alignment] = classify_relative_position(
      "approaching from the cross street on the right", backend, codebook());
  CHECK_FALSE(cross.same_segment());
  CHECK(cross_alignment == LaneAlignment::Unspecified);

  try {
    classify_relative_position("somewhere nearby", backend, codebook());
    FAIL("expected AmbiguousPosition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbiguousPosition);
  }
}

TEST_CASE("facts round trip through the interchange document") {
  FixtureBackend backend = make_backend();
  ReportFacts facts =
      extract_facts(report("report_overtake.txt"), backend, codebook(), "ovt");
  const auto doc = to_json(facts);
  ReportFacts back = facts_from_json(doc);
  CHECK(to_json(back) == doc);
  CHECK(back.npcs[0].events.letters() == "km");
  CHECK(back.npcs[0].lane_alignment == LaneAlignment::SameLane);
}

TEST_CASE("obstacle-only fixture yields zero NPCs and one obstacle") {
  FixtureBackend backend = make_backend();
  ReportFacts facts =
      extract_facts(report("report_obstacle.txt"), backend, codebook(), "obs");
  CHECK(facts.npcs.empty());
  REQUIRE(facts.obstacles.size() == 1);
  CHECK(facts.obstacles[0].kind == "traffic cone");
  REQUIRE(facts.obstacles[0].dimensions.has_value());
  CHECK((*facts.obstacles[0].dimensions)[2] == doctest::Approx(1.0));
}

TEST_CASE("codebook rejects malformed catalogs") {
  CHECK_THROWS_AS(Codebook::load("{"), Error);
  CHECK_THROWS_AS(Codebook::load(R"({"actions":{},"positions":{},
    "lane_constraining_actions":[],"av_rightmost_triggers":{
    "overtake_from_left":[],"same_lane_change_left":[],"different_lane_change_right":[]}})"),
                  Error);
}
