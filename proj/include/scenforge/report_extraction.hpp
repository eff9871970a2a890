#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "scenforge/map_graph.hpp"

namespace scenforge::report_extraction {

enum class NpcCategory { Sedan, Van, Truck, Motorbike, Bicycle, Pedestrian };
enum class LaneAlignment { SameLane, DifferentLane, Unspecified };
enum class RelPosCode { R1, R2, R3, R4, R5, R6, R7 };

const char* to_string(NpcCategory c);
const char* to_string(LaneAlignment a);
const char* to_string(RelPosCode c);
std::optional<NpcCategory> npc_category_from(const std::string& s);
std::optional<RelPosCode> rel_pos_from(const std::string& s);

struct RelPos {
  RelPosCode code = RelPosCode::R5;
  /// R5/R6 share the AV's road segment; the rest live on another one.
  bool same_segment() const {
    return code == RelPosCode::R5 || code == RelPosCode::R6;
  }
};

struct ActionStep {
  char code = 'a';  // letter from the 13-action codebook
  std::optional<double> target_speed;
  std::optional<double> duration;
};

struct EventSequence {
  std::vector<ActionStep> steps;
  std::string letters() const;
};

struct NpcFact {
  NpcCategory category = NpcCategory::Sedan;
  RelPos rel_pos;
  LaneAlignment lane_alignment = LaneAlignment::Unspecified;
  EventSequence events;
  std::optional<double> target_speed;
};

struct ObstacleFact {
  std::string kind;
  RelPos rel_pos;
  std::optional<std::array<double, 3>> dimensions;  // length, width, height
};

struct AvContext {
  std::string approach;
  int min_driving_lanes = 1;
  bool requires_junction = false;
  std::set<map_graph::Turn> required_turns;
};

struct ReportFacts {
  std::string report_id;
  std::vector<NpcFact> npcs;
  std::vector<ObstacleFact> obstacles;
  AvContext av;
};

/// The 13-letter action alphabet plus the relative-position semantics.
/// Shipped as data so the mapping can be corrected without source changes.
struct Codebook {
  struct Action {
    std::string label;
    std::vector<std::string> phrases;
  };
  std::map<char, Action> actions;
  std::map<RelPosCode, std::string> position_summaries;
  std::vector<char> lane_constraining;
  std::vector<char> trigger_overtake_left;
  std::vector<char> trigger_same_lane_left;
  std::vector<char> trigger_different_lane_right;

  static Codebook load(const std::string& codebook_json);
  std::optional<char> code_for_phrase(const std::string& phrase) const;
  bool is_lane_constraining(char code) const;
};

/// Chat-completion style backend: one structured JSON request in, one
/// structured JSON document out.
class ExtractionBackend {
 public:
  virtual ~ExtractionBackend() = default;
  virtual nlohmann::json complete(const nlohmann::json& request) = 0;
  virtual std::string describe() const = 0;
};

/// Replays committed transcripts; requests are matched structurally.
class FixtureBackend : public ExtractionBackend {
 public:
  /// Load one transcript file or every *.json in a directory.
  explicit FixtureBackend(const std::string& path);
  nlohmann::json complete(const nlohmann::json& request) override;
  std::string describe() const override { return "fixture:" + source_; }

 private:
  std::map<std::string, nlohmann::json> entries_;
  std::string source_;
};

/// Remote chat-completion endpoint. URL and key come from configuration;
/// the request JSON travels as the user message, the reply must contain a
/// JSON document in the assistant message content.
class HttpBackend : public ExtractionBackend {
 public:
  HttpBackend(std::string base_url, std::string api_key, std::string model);
  nlohmann::json complete(const nlohmann::json& request) override;
  std::string describe() const override { return "http:" + base_url_; }

 private:
  std::string base_url_;
  std::string api_key_;
  std::string model_;
};

/// Convert report text into structured facts. Missing critical information
/// (positions, events) raises IncompleteReport instead of being guessed.
ReportFacts extract_facts(const std::string& report_text,
                          ExtractionBackend& backend, const Codebook& codebook,
                          const std::string& report_id = "");

/// Map raw behavior phrases onto codebook letters, collapsing adjacent
/// duplicates. Unknown phrases raise UnknownAction.
EventSequence normalize_events(const std::vector<std::string>& raw_actions,
                               const Codebook& codebook);

/// Classify one position description into R1..R7 (+ lane alignment for
/// same-segment codes). Raises AmbiguousPosition when the backend cannot
/// commit.
std::pair<RelPos, LaneAlignment> classify_relative_position(
    const std::string& description, ExtractionBackend& backend,
    const Codebook& codebook);

/// Versioned interchange document so extraction and generation can run as
/// separate CLI steps.
nlohmann::json to_json(const ReportFacts& facts);
ReportFacts facts_from_json(const nlohmann::json& doc);

}  // namespace scenforge::report_extraction
