#include "scenforge/report_extraction.hpp"

#include <algorithm>
#include <filesystem>

#include "httplib.h"
#include "scenforge/error.hpp"
#include "scenforge/util.hpp"

namespace scenforge::report_extraction {

using nlohmann::json;

const char* to_string(NpcCategory c) {
  switch (c) {
    case NpcCategory::Sedan: return "sedan";
    case NpcCategory::Van: return "van";
    case NpcCategory::Truck: return "truck";
    case NpcCategory::Motorbike: return "motorbike";
    case NpcCategory::Bicycle: return "bicycle";
    case NpcCategory::Pedestrian: return "pedestrian";
  }
  return "sedan";
}

const char* to_string(LaneAlignment a) {
  switch (a) {
    case LaneAlignment::SameLane: return "same_lane";
    case LaneAlignment::DifferentLane: return "different_lane";
    case LaneAlignment::Unspecified: return "unspecified";
  }
  return "unspecified";
}

const char* to_string(RelPosCode c) {
  switch (c) {
    case RelPosCode::R1: return "R1";
    case RelPosCode::R2: return "R2";
    case RelPosCode::R3: return "R3";
    case RelPosCode::R4: return "R4";
    case RelPosCode::R5: return "R5";
    case RelPosCode::R6: return "R6";
    case RelPosCode::R7: return "R7";
  }
  return "R5";
}

std::optional<NpcCategory> npc_category_from(const std::string& s) {
  const std::string v = to_lower(trim(s));
  if (v == "sedan" || v == "car") return NpcCategory::Sedan;
  if (v == "van") return NpcCategory::Van;
  if (v == "truck") return NpcCategory::Truck;
  if (v == "motorbike" || v == "motorcycle") return NpcCategory::Motorbike;
  if (v == "bicycle" || v == "bike") return NpcCategory::Bicycle;
  if (v == "pedestrian") return NpcCategory::Pedestrian;
  return std::nullopt;
}

std::optional<RelPosCode> rel_pos_from(const std::string& s) {
  const std::string v = trim(s);
  if (v.size() == 2 && (v[0] == 'R' || v[0] == 'r') && v[1] >= '1' && v[1] <= '7')
    return RelPosCode(int(RelPosCode::R1) + (v[1] - '1'));
  return std::nullopt;
}

std::string EventSequence::letters() const {
  std::string out;
  for (const auto& step : steps) out.push_back(step.code);
  return out;
}

Codebook Codebook::load(const std::string& codebook_json) {
  json doc;
  try {
    doc = json::parse(codebook_json);
  } catch (const json::exception& e) {
    raise(ErrorCode::CatalogParseError, std::string("codebook: ") + e.what());
  }
  Codebook book;
  for (const auto& [letter, spec] : doc.at("actions").items()) {
    if (letter.size() != 1)
      raise(ErrorCode::CatalogParseError,
            "codebook action key '" + letter + "' is not a single letter");
    Action action;
    action.label = spec.at("label").get<std::string>();
    for (const auto& p : spec.at("phrases"))
      action.phrases.push_back(to_lower(p.get<std::string>()));
    book.actions[letter[0]] = std::move(action);
  }
  if (book.actions.size() != 13)
    raise(ErrorCode::CatalogParseError,
          "codebook must define exactly 13 actions, found " +
              std::to_string(book.actions.size()));
  for (const auto& [code, spec] : doc.at("positions").items()) {
    auto rel = rel_pos_from(code);
    if (!rel) raise(ErrorCode::CatalogParseError, "bad position code " + code);
    book.position_summaries[*rel] = spec.at("summary").get<std::string>();
  }
  for (const auto& c : doc.at("lane_constraining_actions"))
    book.lane_constraining.push_back(c.get<std::string>()[0]);
  const auto& triggers = doc.at("av_rightmost_triggers");
  for (const auto& c : triggers.at("overtake_from_left"))
    book.trigger_overtake_left.push_back(c.get<std::string>()[0]);
  for (const auto& c : triggers.at("same_lane_change_left"))
    book.trigger_same_lane_left.push_back(c.get<std::string>()[0]);
  for (const auto& c : triggers.at("different_lane_change_right"))
    book.trigger_different_lane_right.push_back(c.get<std::string>()[0]);
  return book;
}

std::optional<char> Codebook::code_for_phrase(const std::string& phrase) const {
  const std::string needle = to_lower(trim(phrase));
  for (const auto& [code, action] : actions) {
    if (needle.size() == 1 && needle[0] == code) return code;
    for (const auto& p : action.phrases)
      if (p == needle) return code;
  }
  return std::nullopt;
}

bool Codebook::is_lane_constraining(char code) const {
  return std::find(lane_constraining.begin(), lane_constraining.end(), code) !=
         lane_constraining.end();
}

FixtureBackend::FixtureBackend(const std::string& path) : source_(path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  if (files.empty())
    raise(ErrorCode::IoError, "no transcript files under " + path);
  for (const auto& file : files) {
    json doc;
    try {
      doc = json::parse(read_file(file));
    } catch (const json::exception& e) {
      raise(ErrorCode::IoError, file.string() + ": " + e.what());
    }
    for (const auto& entry : doc.at("entries"))
      entries_[entry.at("request").dump()] = entry.at("response");
  }
}

json FixtureBackend::complete(const json& request) {
  auto it = entries_.find(request.dump());
  if (it == entries_.end())
    raise(ErrorCode::BackendError,
          "no transcript entry for request: " + request.dump());
  return it->second;
}

HttpBackend::HttpBackend(std::string base_url, std::string api_key,
                         std::string model)
    : base_url_(std::move(base_url)),
      api_key_(std::move(api_key)),
      model_(std::move(model)) {}

json HttpBackend::complete(const json& request) {
  httplib::Client client(base_url_);
  client.set_read_timeout(120, 0);
  httplib::Headers headers = {{"Authorization", "Bearer " + api_key_}};
  const json body = {
      {"model", model_},
      {"messages",
       json::array(
           {{{"role", "system"},
             {"content",
              "You convert structured scenario requests into structured JSON "
              "answers. Reply with a single JSON document and nothing else."}},
            {{"role", "user"}, {"content", request.dump()}}})},
  };
  auto res =
      client.Post("/chat/completions", headers, body.dump(), "application/json");
  if (!res)
    raise(ErrorCode::BackendError, "transport failure talking to " + base_url_);
  if (res->status != 200)
    raise(ErrorCode::BackendError,
          "backend returned HTTP " + std::to_string(res->status) + ": " +
              res->body);
  try {
    json envelope = json::parse(res->body);
    const std::string content = envelope.at("choices")
                                    .at(0)
                                    .at("message")
                                    .at("content")
                                    .get<std::string>();
    return json::parse(content);
  } catch (const json::exception& e) {
    raise(ErrorCode::BackendError,
          std::string("malformed backend reply: ") + e.what());
  }
}

EventSequence normalize_events(const std::vector<std::string>& raw_actions,
                               const Codebook& codebook) {
  EventSequence seq;
  for (const auto& phrase : raw_actions) {
    auto code = codebook.code_for_phrase(phrase);
    if (!code)
      raise(ErrorCode::UnknownAction,
            "phrase '" + phrase + "' is outside the action codebook");
    if (!seq.steps.empty() && seq.steps.back().code == *code)
      continue;  // adjacent duplicates collapse
    ActionStep step;
    step.code = *code;
    seq.steps.push_back(step);
  }
  return seq;
}

namespace {

map_graph::Turn turn_from_string(const std::string& s) {
  if (s == "left") return map_graph::Turn::Left;
  if (s == "right") return map_graph::Turn::Right;
  if (s == "u_turn") return map_graph::Turn::UTurn;
  return map_graph::Turn::Straight;
}

NpcFact parse_npc(const json& spec, const Codebook& codebook) {
  NpcFact fact;
  auto category = npc_category_from(spec.value("category", ""));
  if (!category)
    raise(ErrorCode::BackendError,
          "unknown npc category '" + spec.value("category", "") + "'");
  fact.category = *category;

  const std::string rel_raw = spec.value("rel_pos", "");
  if (rel_raw.empty())
    raise(ErrorCode::IncompleteReport, "npc without a relative position");
  auto rel = rel_pos_from(rel_raw);
  if (!rel)
    raise(ErrorCode::AmbiguousPosition,
          "relative position '" + rel_raw + "' is not one of R1..R7");
  fact.rel_pos.code = *rel;

  const std::string alignment = spec.value("lane_alignment", "");
  if (fact.rel_pos.same_segment()) {
    if (alignment == "same_lane")
      fact.lane_alignment = LaneAlignment::SameLane;
    else if (alignment == "different_lane")
      fact.lane_alignment = LaneAlignment::DifferentLane;
    else
      raise(ErrorCode::IncompleteReport,
            "same-segment npc without lane alignment");
  } else {
    fact.lane_alignment = LaneAlignment::Unspecified;
  }

  if (!spec.contains("events") || spec["events"].empty())
    raise(ErrorCode::IncompleteReport, "npc without an event sequence");
  std::vector<std::string> phrases;
  std::vector<std::pair<std::optional<double>, std::optional<double>>> params;
  for (const auto& ev : spec["events"]) {
    phrases.push_back(ev.at("action").get<std::string>());
    std::optional<double> speed;
    std::optional<double> duration;
    if (ev.contains("target_speed")) speed = ev["target_speed"].get<double>();
    if (ev.contains("duration")) duration = ev["duration"].get<double>();
    params.emplace_back(speed, duration);
  }
  fact.events = normalize_events(phrases, codebook);
  // collapsed duplicates keep the first parameter set
  std::size_t pi = 0;
  for (auto& step : fact.events.steps) {
    if (pi < params.size()) {
      step.target_speed = params[pi].first;
      step.duration = params[pi].second;
    }
    ++pi;
  }
  if (spec.contains("target_speed"))
    fact.target_speed = spec["target_speed"].get<double>();
  return fact;
}

ObstacleFact parse_obstacle(const json& spec) {
  ObstacleFact fact;
  fact.kind = spec.value("kind", "obstacle");
  auto rel = rel_pos_from(spec.value("rel_pos", ""));
  if (!rel)
    raise(ErrorCode::IncompleteReport, "obstacle without a relative position");
  fact.rel_pos.code = *rel;
  if (spec.contains("dimensions")) {
    const auto& d = spec["dimensions"];
    std::array<double, 3> dims{d.at(0).get<double>(), d.at(1).get<double>(),
                               d.at(2).get<double>()};
    for (double v : dims)
      if (!(v > 0))
        raise(ErrorCode::BackendError, "non-positive obstacle dimension");
    fact.dimensions = dims;
  }
  return fact;
}

}  // namespace

ReportFacts extract_facts(const std::string& report_text,
                          ExtractionBackend& backend, const Codebook& codebook,
                          const std::string& report_id) {
  if (trim(report_text).empty())
    raise(ErrorCode::IncompleteReport, "empty report text");

  const json request = {{"task", "extract_facts"}, {"report", report_text}};
  const json reply = backend.complete(request);

  if (reply.value("complete", true) == false)
    raise(ErrorCode::IncompleteReport,
          reply.value("reason", "backend flagged the report as incomplete"));

  ReportFacts facts;
  facts.report_id = report_id;
  if (reply.contains("npcs"))
    for (const auto& npc : reply["npcs"])
      facts.npcs.push_back(parse_npc(npc, codebook));
  if (reply.contains("obstacles"))
    for (const auto& obstacle : reply["obstacles"])
      facts.obstacles.push_back(parse_obstacle(obstacle));

  if (facts.npcs.empty() && facts.obstacles.empty())
    raise(ErrorCode::IncompleteReport,
          "report describes no traffic participants and no obstacles");

  if (reply.contains("av")) {
    const auto& av = reply["av"];
    facts.av.approach = av.value("approach", "");
    facts.av.min_driving_lanes = av.value("min_driving_lanes", 1);
    facts.av.requires_junction = av.value("requires_junction", false);
    if (av.contains("required_turns"))
      for (const auto& t : av["required_turns"])
        facts.av.required_turns.insert(turn_from_string(t.get<std::string>()));
  }
  return facts;
}

std::pair<RelPos, LaneAlignment> classify_relative_position(
    const std::string& description, ExtractionBackend& backend,
    const Codebook& codebook) {
  (void)codebook;
  const json request = {{"task", "classify_position"},
                        {"description", description}};
  const json reply = backend.complete(request);
  if (reply.value("ambiguous", false))
    raise(ErrorCode::AmbiguousPosition,
          "backend cannot commit to a relative position for: " + description);
  auto rel = rel_pos_from(reply.value("rel_pos", ""));
  if (!rel)
    raise(ErrorCode::AmbiguousPosition,
          "no usable relative position in backend reply");
  RelPos pos;
  pos.code = *rel;
  LaneAlignment alignment = LaneAlignment::Unspecified;
  const std::string raw = reply.value("lane_alignment", "");
  if (raw == "same_lane") alignment = LaneAlignment::SameLane;
  if (raw == "different_lane") alignment = LaneAlignment::DifferentLane;
  if (pos.same_segment() && alignment == LaneAlignment::Unspecified)
    raise(ErrorCode::AmbiguousPosition,
          "same-segment position without lane alignment");
  return {pos, alignment};
}

json to_json(const ReportFacts& facts) {
  json npcs = json::array();
  for (const auto& npc : facts.npcs) {
    json events = json::array();
    for (const auto& step : npc.events.steps) {
      json ev = {{"code", std::string(1, step.code)}};
      if (step.target_speed) ev["target_speed"] = *step.target_speed;
      if (step.duration) ev["duration"] = *step.duration;
      events.push_back(ev);
    }
    json entry = {{"category", to_string(npc.category)},
                  {"rel_pos", to_string(npc.rel_pos.code)},
                  {"lane_alignment", to_string(npc.lane_alignment)},
                  {"events", events}};
    if (npc.target_speed) entry["target_speed"] = *npc.target_speed;
    npcs.push_back(entry);
  }
  json obstacles = json::array();
  for (const auto& obstacle : facts.obstacles) {
    json entry = {{"kind", obstacle.kind},
                  {"rel_pos", to_string(obstacle.rel_pos.code)}};
    if (obstacle.dimensions)
      entry["dimensions"] = {(*obstacle.dimensions)[0],
                             (*obstacle.dimensions)[1],
                             (*obstacle.dimensions)[2]};
    obstacles.push_back(entry);
  }
  json turns = json::array();
  for (auto t : facts.av.required_turns)
    turns.push_back(map_graph::to_string(t));
  return json{{"version", 1},
              {"report_id", facts.report_id},
              {"npcs", npcs},
              {"obstacles", obstacles},
              {"av",
               {{"approach", facts.av.approach},
                {"min_driving_lanes", facts.av.min_driving_lanes},
                {"requires_junction", facts.av.requires_junction},
                {"required_turns", turns}}}};
}

ReportFacts facts_from_json(const json& doc) {
  if (doc.value("version", 0) != 1)
    raise(ErrorCode::IoError, "unsupported facts document version");
  ReportFacts facts;
  facts.report_id = doc.value("report_id", "");
  for (const auto& npc : doc.value("npcs", json::array())) {
    NpcFact fact;
    auto category = npc_category_from(npc.at("category").get<std::string>());
    if (!category) raise(ErrorCode::IoError, "bad npc category in facts");
    fact.category = *category;
    auto rel = rel_pos_from(npc.at("rel_pos").get<std::string>());
    if (!rel) raise(ErrorCode::IoError, "bad rel_pos in facts");
    fact.rel_pos.code = *rel;
    const std::string alignment = npc.value("lane_alignment", "unspecified");
    fact.lane_alignment = alignment == "same_lane" ? LaneAlignment::SameLane
                          : alignment == "different_lane"
                              ? LaneAlignment::DifferentLane
                              : LaneAlignment::Unspecified;
    for (const auto& ev : npc.at("events")) {
      ActionStep step;
      step.code = ev.at("code").get<std::string>()[0];
      if (ev.contains("target_speed"))
        step.target_speed = ev["target_speed"].get<double>();
      if (ev.contains("duration")) step.duration = ev["duration"].get<double>();
      fact.events.steps.push_back(step);
    }
    if (fact.events.steps.empty())
      raise(ErrorCode::IoError, "npc without events in facts document");
    if (npc.contains("target_speed"))
      fact.target_speed = npc["target_speed"].get<double>();
    facts.npcs.push_back(fact);
  }
  for (const auto& obstacle : doc.value("obstacles", json::array())) {
    ObstacleFact fact;
    fact.kind = obstacle.value("kind", "obstacle");
    auto rel = rel_pos_from(obstacle.at("rel_pos").get<std::string>());
    if (!rel) raise(ErrorCode::IoError, "bad obstacle rel_pos in facts");
    fact.rel_pos.code = *rel;
    if (obstacle.contains("dimensions")) {
      const auto& d = obstacle["dimensions"];
      fact.dimensions = std::array<double, 3>{
          d.at(0).get<double>(), d.at(1).get<double>(), d.at(2).get<double>()};
    }
    facts.obstacles.push_back(fact);
  }
  if (doc.contains("av")) {
    const auto& av = doc["av"];
    facts.av.approach = av.value("approach", "");
    facts.av.min_driving_lanes = av.value("min_driving_lanes", 1);
    facts.av.requires_junction = av.value("requires_junction", false);
    for (const auto& t : av.value("required_turns", json::array()))
      facts.av.required_turns.insert(turn_from_string(t.get<std::string>()));
  }
  return facts;
}

}  // namespace scenforge::report_extraction
