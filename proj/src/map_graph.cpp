#include "scenforge/map_graph.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "nlohmann/json.hpp"
#include "scenforge/error.hpp"
#include "scenforge/util.hpp"
#include "scenforge/xml.hpp"

namespace scenforge::map_graph {

namespace {

constexpr double kDefaultLaneWidth = 3.5;

struct LaneRecord {
  int id = 0;
  std::string type;
  std::vector<detail::WidthRecord> widths;
  LaneChange lane_change = LaneChange::Both;
  bool lane_change_declared = false;
};

struct LaneSectionRecord {
  double s0 = 0.0;
  std::vector<LaneRecord> left;   // positive ids
  std::vector<LaneRecord> right;  // negative ids
};

struct LinkRecord {
  std::string element_type;  // "road" | "junction"
  std::string element_id;
  std::string contact_point;
};

struct SignalRecord {
  std::string id;
  std::string name;
  double s = 0.0;
  double t = 0.0;
  bool dynamic = false;
};

struct LaneLinkRecord {
  int successor = 0;
  bool has_successor = false;
};

struct RoadRecord {
  std::string id;
  std::string name;
  double length = 0.0;
  std::string junction = "-1";
  std::optional<LinkRecord> predecessor;
  std::optional<LinkRecord> successor;
  detail::SegmentGeometry geom;
  std::vector<LaneSectionRecord> sections;
  std::vector<SignalRecord> signals;
  std::map<int, LaneLinkRecord> lane_links;
};

struct ConnectionRecord {
  std::string id;
  std::string incoming_road;
  std::string connecting_road;
  std::string contact_point;
  std::vector<std::pair<int, int>> lane_links;  // (from, to)
};

struct JunctionRecord {
  std::string id;
  std::string name;
  std::vector<ConnectionRecord> connections;
};

double require_double(const xml::Node& node, const std::string& key,
                      const std::string& where) {
  auto raw = node.attr(key);
  if (!raw)
    raise(ErrorCode::MalformedDocument,
          where + ": missing attribute '" + key + "'");
  double v = 0.0;
  if (!parse_double(*raw, v))
    raise(ErrorCode::MalformedDocument,
          where + ": attribute '" + key + "' is not a number: " + *raw);
  return v;
}

double attr_double(const xml::Node& node, const std::string& key,
                   double fallback) {
  auto raw = node.attr(key);
  if (!raw) return fallback;
  double v = fallback;
  parse_double(*raw, v);
  return v;
}

LaneType lane_type_from(const std::string& s) {
  if (s == "driving") return LaneType::Driving;
  if (s == "sidewalk") return LaneType::Sidewalk;
  if (s == "shoulder") return LaneType::Shoulder;
  if (s == "biking") return LaneType::Biking;
  return LaneType::Other;
}

/// roadMark laneChange is expressed in lane-id direction; convert it to the
/// traveler's left/right, which flips between the two sides of the road.
LaneChange lane_change_from(const std::string& s, int lane_id) {
  if (s == "both") return LaneChange::Both;
  if (s == "none") return LaneChange::None;
  const bool toward_center = (s == "increase") == (lane_id < 0);
  if (s == "increase" || s == "decrease")
    return toward_center ? LaneChange::Left : LaneChange::Right;
  return LaneChange::Both;
}

LaneRecord parse_lane(const xml::Node& lane_node, const std::string& where) {
  LaneRecord rec;
  rec.id = int(attr_double(lane_node, "id", 0));
  rec.type = lane_node.attr_or("type", "none");
  for (const xml::Node* w : lane_node.find_all("width")) {
    detail::WidthRecord wr;
    wr.s_offset = attr_double(*w, "sOffset", 0.0);
    wr.a = require_double(*w, "a", where);
    wr.b = attr_double(*w, "b", 0.0);
    wr.c = attr_double(*w, "c", 0.0);
    wr.d = attr_double(*w, "d", 0.0);
    rec.widths.push_back(wr);
  }
  if (const xml::Node* mark = lane_node.find("roadMark")) {
    if (auto lc = mark->attr("laneChange")) {
      rec.lane_change = lane_change_from(*lc, rec.id);
      rec.lane_change_declared = true;
    }
  }
  return rec;
}

std::optional<LinkRecord> parse_link_side(const xml::Node* side) {
  if (!side) return std::nullopt;
  LinkRecord link;
  link.element_type = side->attr_or("elementType", "road");
  link.element_id = side->attr_or("elementId", "");
  link.contact_point = side->attr_or("contactPoint", "");
  if (link.element_id.empty()) return std::nullopt;
  return link;
}

RoadRecord parse_road(const xml::Node& road_node) {
  RoadRecord road;
  road.id = road_node.attr_or("id", "");
  road.name = road_node.attr_or("name", "");
  road.junction = road_node.attr_or("junction", "-1");
  const std::string where = "road " + road.id;
  road.length = require_double(road_node, "length", where);
  if (!(road.length > 0.0))
    raise(ErrorCode::MalformedDocument, where + ": non-positive length");

  if (const xml::Node* link = road_node.find("link")) {
    road.predecessor = parse_link_side(link->find("predecessor"));
    road.successor = parse_link_side(link->find("successor"));
  }

  const xml::Node* plan = road_node.find("planView");
  if (!plan) raise(ErrorCode::MalformedDocument, where + ": missing planView");
  for (const xml::Node* g : plan->find_all("geometry")) {
    detail::GeometryRecord rec;
    rec.s = attr_double(*g, "s", 0.0);
    rec.x = require_double(*g, "x", where);
    rec.y = require_double(*g, "y", where);
    rec.hdg = require_double(*g, "hdg", where);
    rec.length = require_double(*g, "length", where);
    const auto kids = g->elements();
    if (kids.empty())
      raise(ErrorCode::MalformedDocument,
            where + ": geometry without primitive");
    const xml::Node* prim = kids.front();
    if (prim->name == "line") {
      rec.is_arc = false;
    } else if (prim->name == "arc") {
      rec.is_arc = true;
      rec.curvature = require_double(*prim, "curvature", where);
    } else {
      raise(ErrorCode::UnsupportedFeature,
            where + ": geometry primitive '" + prim->name +
                "' outside the line/arc subset");
    }
    road.geom.primitives.push_back(rec);
  }
  if (road.geom.primitives.empty())
    raise(ErrorCode::MalformedDocument, where + ": empty planView");

  const xml::Node* lanes = road_node.find("lanes");
  if (!lanes) raise(ErrorCode::MalformedDocument, where + ": missing lanes");
  for (const xml::Node* section : lanes->find_all("laneSection")) {
    LaneSectionRecord sec;
    sec.s0 = attr_double(*section, "s", 0.0);
    if (const xml::Node* left = section->find("left"))
      for (const xml::Node* l : left->find_all("lane"))
        sec.left.push_back(parse_lane(*l, where));
    if (const xml::Node* right = section->find("right"))
      for (const xml::Node* l : right->find_all("lane"))
        sec.right.push_back(parse_lane(*l, where));
    road.sections.push_back(sec);

    detail::SectionGeometry geom_sec;
    geom_sec.s0 = sec.s0;
    for (const auto& side : {sec.left, sec.right})
      for (const auto& lane : side)
        if (lane.id != 0)
          geom_sec.lanes.push_back({lane.id, lane.widths});
    road.geom.sections.push_back(std::move(geom_sec));
  }
  if (road.sections.empty())
    raise(ErrorCode::MalformedDocument, where + ": no laneSection");

  // lane-level successor links (first section), used for road-road edges
  if (const xml::Node* section = lanes->find("laneSection")) {
    for (const char* side : {"left", "right"}) {
      const xml::Node* node = section->find(side);
      if (!node) continue;
      for (const xml::Node* l : node->find_all("lane")) {
        const int id = int(attr_double(*l, "id", 0));
        if (const xml::Node* link = l->find("link")) {
          if (const xml::Node* s = link->find("successor")) {
            LaneLinkRecord rec;
            rec.successor = int(attr_double(*s, "id", 0));
            rec.has_successor = true;
            road.lane_links[id] = rec;
          }
        }
      }
    }
  }

  if (const xml::Node* signals = road_node.find("signals")) {
    for (const xml::Node* sig : signals->find_all("signal")) {
      SignalRecord rec;
      rec.id = sig->attr_or("id", "");
      rec.name = sig->attr_or("name", rec.id);
      rec.s = attr_double(*sig, "s", 0.0);
      rec.t = attr_double(*sig, "t", 0.0);
      rec.dynamic = sig->attr_or("dynamic", "no") == "yes";
      road.signals.push_back(rec);
    }
  }
  return road;
}

JunctionRecord parse_junction(const xml::Node& node) {
  JunctionRecord junction;
  junction.id = node.attr_or("id", "");
  junction.name = node.attr_or("name", "");
  for (const xml::Node* conn : node.find_all("connection")) {
    ConnectionRecord rec;
    rec.id = conn->attr_or("id", "");
    rec.incoming_road = conn->attr_or("incomingRoad", "");
    rec.connecting_road = conn->attr_or("connectingRoad", "");
    rec.contact_point = conn->attr_or("contactPoint", "start");
    for (const xml::Node* link : conn->find_all("laneLink"))
      rec.lane_links.emplace_back(int(attr_double(*link, "from", 0)),
                                  int(attr_double(*link, "to", 0)));
    junction.connections.push_back(rec);
  }
  return junction;
}

double width_at(const detail::LaneGeometry& lane, double ds) {
  if (lane.widths.empty()) return kDefaultLaneWidth;
  const detail::WidthRecord* best = &lane.widths.front();
  for (const auto& w : lane.widths)
    if (w.s_offset <= ds) best = &w;
  const double u = ds - best->s_offset;
  return best->a + best->b * u + best->c * u * u + best->d * u * u * u;
}

void refline_pose(const detail::SegmentGeometry& geom, double s, double& x,
                  double& y, double& hdg) {
  const detail::GeometryRecord* rec = &geom.primitives.front();
  for (const auto& g : geom.primitives)
    if (g.s <= s) rec = &g;
  const double ds = s - rec->s;
  if (!rec->is_arc || std::abs(rec->curvature) < 1e-12) {
    x = rec->x + ds * std::cos(rec->hdg);
    y = rec->y + ds * std::sin(rec->hdg);
    hdg = rec->hdg;
  } else {
    const double k = rec->curvature;
    const double theta = rec->hdg + ds * k;
    x = rec->x + (std::sin(theta) - std::sin(rec->hdg)) / k;
    y = rec->y - (std::cos(theta) - std::cos(rec->hdg)) / k;
    hdg = theta;
  }
}

/// Lateral offset (t) of a lane center at arclength s.
double lane_center_t(const detail::SegmentGeometry& geom,
                     const std::string& segment_id, int lane_id, double s) {
  const detail::SectionGeometry* sec = &geom.sections.front();
  for (const auto& candidate : geom.sections)
    if (candidate.s0 <= s) sec = &candidate;
  const double ds = s - sec->s0;
  double accumulated = 0.0;
  const int count = std::abs(lane_id);
  for (int k = 1; k <= count; ++k) {
    const int want = lane_id > 0 ? k : -k;
    const detail::LaneGeometry* rec = nullptr;
    for (const auto& lane : sec->lanes)
      if (lane.id == want) rec = &lane;
    if (!rec)
      raise(ErrorCode::UnknownLane,
            "segment " + segment_id + " has no lane " + std::to_string(want));
    const double w = width_at(*rec, ds);
    accumulated += (k == count) ? w / 2.0 : w;
  }
  return lane_id > 0 ? accumulated : -accumulated;
}

Turn classify_turn(double heading_in, double heading_out) {
  const double d = wrap_angle(heading_out - heading_in);
  if (std::abs(d) < M_PI / 4.0) return Turn::Straight;
  if (d >= M_PI * 3.0 / 4.0 || d < -M_PI * 3.0 / 4.0) return Turn::UTurn;
  return d > 0 ? Turn::Left : Turn::Right;
}

}  // namespace

double wrap_angle(double radians) {
  double a = std::fmod(radians + M_PI, 2.0 * M_PI);
  if (a < 0) a += 2.0 * M_PI;
  return a - M_PI;
}

const LaneInfo* RoadSegment::lane(int lane_id) const {
  for (const auto& l : lanes)
    if (l.lane_id == lane_id) return &l;
  return nullptr;
}

std::vector<const LaneInfo*> RoadSegment::driving_lanes(
    LaneDirection dir) const {
  std::vector<const LaneInfo*> out;
  for (const auto& l : lanes)
    if (l.lane_type == LaneType::Driving && l.direction == dir)
      out.push_back(&l);
  // leftmost first: smallest |id| is adjacent to the center line
  std::sort(out.begin(), out.end(), [](const LaneInfo* a, const LaneInfo* b) {
    return std::abs(a->lane_id) < std::abs(b->lane_id);
  });
  return out;
}

const RoadSegment& RoadNetwork::segment(const std::string& id) const {
  auto it = segments.find(id);
  if (it == segments.end())
    raise(ErrorCode::DanglingReference, "unknown segment " + id);
  return it->second;
}

std::vector<const ConnectionEdge*> RoadNetwork::junction_edges_from(
    const std::string& segment_id) const {
  std::vector<const ConnectionEdge*> out;
  for (const auto& e : edges)
    if (e.junction_id && e.from_segment == segment_id) out.push_back(&e);
  return out;
}

bool RoadNetwork::feeds_junction(const std::string& segment_id) const {
  return !junction_edges_from(segment_id).empty();
}

std::optional<std::string> RoadNetwork::junction_of(
    const std::string& segment_id) const {
  for (const auto& e : edges)
    if (e.junction_id && e.from_segment == segment_id) return e.junction_id;
  return std::nullopt;
}

RoadNetwork parse_opendrive(const std::string& document,
                            const std::string& source_name) {
  xml::Node root = xml::parse(document);
  if (root.name != "OpenDRIVE")
    raise(ErrorCode::MalformedDocument,
          "root element is '" + root.name + "', expected OpenDRIVE");

  std::map<std::string, RoadRecord> roads;
  std::vector<JunctionRecord> junctions;
  for (const xml::Node* r : root.find_all("road")) {
    RoadRecord rec = parse_road(*r);
    roads[rec.id] = std::move(rec);
  }
  for (const xml::Node* j : root.find_all("junction"))
    junctions.push_back(parse_junction(*j));

  auto road_at = [&](const std::string& id,
                     const std::string& context) -> const RoadRecord& {
    auto it = roads.find(id);
    if (it == roads.end())
      raise(ErrorCode::DanglingReference,
            context + " references missing road " + id);
    return it->second;
  };

  for (const auto& [id, road] : roads) {
    for (const auto* link : {&road.predecessor, &road.successor}) {
      if (!link->has_value()) continue;
      const LinkRecord& rec = **link;
      if (rec.element_type == "road") {
        road_at(rec.element_id, "road " + id + " link");
      } else if (rec.element_type == "junction") {
        const bool known = std::any_of(
            junctions.begin(), junctions.end(),
            [&](const JunctionRecord& j) { return j.id == rec.element_id; });
        if (!known)
          raise(ErrorCode::DanglingReference,
                "road " + id + " links missing junction " + rec.element_id);
      }
    }
  }

  RoadNetwork network;
  network.source_name = source_name;

  // travel heading at a road's junction-contact end: contact at the road end
  // means incoming travel runs forward (right lanes); contact at the road
  // start means incoming travel runs backward (left lanes).
  auto incoming_heading = [&](const RoadRecord& road,
                              const std::string& junction_id) -> double {
    double x, y, hdg;
    if (road.successor && road.successor->element_type == "junction" &&
        road.successor->element_id == junction_id) {
      refline_pose(road.geom, road.length, x, y, hdg);
      return wrap_angle(hdg);
    }
    refline_pose(road.geom, 0.0, x, y, hdg);
    return wrap_angle(hdg + M_PI);
  };
  auto outgoing_heading = [&](const RoadRecord& road,
                              const std::string& junction_id) -> double {
    double x, y, hdg;
    if (road.predecessor && road.predecessor->element_type == "junction" &&
        road.predecessor->element_id == junction_id) {
      refline_pose(road.geom, 0.0, x, y, hdg);
      return wrap_angle(hdg);
    }
    refline_pose(road.geom, road.length, x, y, hdg);
    return wrap_angle(hdg + M_PI);
  };

  for (const auto& [id, road] : roads) {
    RoadSegment seg;
    seg.id = id;
    seg.name = road.name;
    seg.length = road.length;
    seg.inside_junction = road.junction != "-1";
    const LaneSectionRecord& sec = road.sections.front();
    auto add_lane = [&](const LaneRecord& rec) {
      if (rec.id == 0) return;  // center lane excluded
      LaneInfo info;
      info.lane_id = rec.id;
      info.lane_type = lane_type_from(rec.type);
      info.direction =
          rec.id < 0 ? LaneDirection::Forward : LaneDirection::Backward;
      if (rec.lane_change_declared)
        info.lane_change = rec.lane_change;
      else
        info.lane_change = info.lane_type == LaneType::Driving
                               ? LaneChange::Both
                               : LaneChange::None;
      if (rec.widths.empty() && info.lane_type == LaneType::Driving)
        std::cerr << "warning: road " << id << " lane " << rec.id
                  << " has no width record, assuming " << kDefaultLaneWidth
                  << " m\n";
      seg.lanes.push_back(info);
    };
    for (const auto& rec : sec.left) add_lane(rec);
    for (const auto& rec : sec.right) add_lane(rec);
    std::sort(seg.lanes.begin(), seg.lanes.end(),
              [](const LaneInfo& a, const LaneInfo& b) {
                return a.lane_id > b.lane_id;
              });
    network.segments[id] = std::move(seg);
    network.geometry[id] = road.geom;
  }

  // plain road-to-road edges, one per linked lane in the first section
  for (const auto& [id, road] : roads) {
    if (road.junction != "-1") continue;
    if (!road.successor || road.successor->element_type != "road") continue;
    const RoadRecord& succ = road_at(road.successor->element_id, "road " + id);
    if (succ.junction != "-1") continue;
    for (const auto& [lane_id, link] : road.lane_links) {
      if (!link.has_successor) continue;
      ConnectionEdge edge;
      edge.from_segment = id;
      edge.to_segment = succ.id;
      edge.start_lane_id = lane_id;
      edge.end_lane_id = link.successor;
      network.edges.push_back(edge);
    }
  }

  // junction connections: one edge per lane link, routed to the road the
  // connecting road exits onto
  for (const auto& junction : junctions) {
    for (const auto& conn : junction.connections) {
      const std::string ctx =
          "junction " + junction.id + " connection " + conn.id;
      const RoadRecord& incoming = road_at(conn.incoming_road, ctx);
      const RoadRecord& connecting = road_at(conn.connecting_road, ctx);
      const std::optional<LinkRecord>& exit_link =
          conn.contact_point == "start" ? connecting.successor
                                        : connecting.predecessor;
      if (!exit_link)
        raise(ErrorCode::DanglingReference,
              ctx + ": connecting road has no exit link");
      if (exit_link->element_type != "road")
        raise(ErrorCode::UnsupportedFeature,
              ctx + ": chained junction exits are not supported");
      const RoadRecord& outgoing = road_at(exit_link->element_id, ctx);

      std::optional<SignalAnchor> anchor;
      for (const auto& sig : incoming.signals) {
        if (!sig.dynamic) continue;
        SignalAnchor a;
        double hdg;
        refline_pose(incoming.geom, sig.s, a.x, a.y, hdg);
        a.x += sig.t * std::cos(hdg + M_PI / 2.0);
        a.y += sig.t * std::sin(hdg + M_PI / 2.0);
        a.name = sig.name;
        if (!std::isfinite(a.x) || !std::isfinite(a.y))
          raise(ErrorCode::MalformedDocument,
                ctx + ": non-finite signal position");
        anchor = a;
        break;
      }

      const double h_in = incoming_heading(incoming, junction.id);
      const double h_out = outgoing_heading(outgoing, junction.id);
      const Turn turn = classify_turn(h_in, h_out);

      for (const auto& [from_lane, to_lane] : conn.lane_links) {
        ConnectionEdge edge;
        edge.from_segment = incoming.id;
        edge.to_segment = outgoing.id;
        edge.connecting_road = connecting.id;
        edge.junction_id = junction.id;
        edge.start_lane_id = from_lane;
        edge.end_lane_id = to_lane;
        edge.signal_anchor = anchor;
        network.edges.push_back(edge);

        auto& seg = network.segments[incoming.id];
        for (auto& lane : seg.lanes)
          if (lane.lane_id == from_lane) lane.turn_affordances.insert(turn);
      }
    }
  }

  for (const auto& e : network.edges) {
    network.segment(e.from_segment);
    network.segment(e.to_segment);
    if (e.junction_id && !e.connecting_road)
      raise(ErrorCode::InvariantViolation,
            "junction edge without connecting road");
  }
  return network;
}

std::vector<std::string> filter_segments(const RoadNetwork& network,
                                         const SceneConstraints& constraints) {
  std::vector<std::string> out;
  for (const auto& [id, seg] : network.segments) {
    if (seg.inside_junction) continue;
    const auto fwd = seg.driving_lanes(LaneDirection::Forward);
    const auto bwd = seg.driving_lanes(LaneDirection::Backward);
    if (fwd.empty() && bwd.empty()) continue;
    const int per_direction = int(std::max(fwd.size(), bwd.size()));
    if (per_direction < constraints.min_driving_lanes) continue;
    if (constraints.requires_junction != network.feeds_junction(id)) continue;
    if (!constraints.required_turns.empty()) {
      std::set<Turn> available;
      for (const auto& lane : seg.lanes)
        available.insert(lane.turn_affordances.begin(),
                         lane.turn_affordances.end());
      bool ok = true;
      for (Turn t : constraints.required_turns)
        if (!available.count(t)) ok = false;
      if (!ok) continue;
    }
    out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  if (out.empty())
    raise(ErrorCode::NoCandidate, "no segment satisfies the scene constraints");
  return out;
}

WorldPose resolve_position(const RoadNetwork& network,
                           const std::string& segment_id, int lane_id,
                           double s) {
  const RoadSegment& seg = network.segment(segment_id);
  const LaneInfo* lane = seg.lane(lane_id);
  if (!lane)
    raise(ErrorCode::UnknownLane,
          "segment " + segment_id + " has no lane " + std::to_string(lane_id));
  if (s < 0.0 || s > seg.length)
    raise(ErrorCode::OutOfRange,
          "s=" + format_double(s) + " outside [0, " +
              format_double(seg.length) + "] on segment " + segment_id);
  auto geom_it = network.geometry.find(segment_id);
  if (geom_it == network.geometry.end())
    raise(ErrorCode::Internal, "segment without geometry cache");

  WorldPose pose;
  double hdg = 0.0;
  refline_pose(geom_it->second, s, pose.x, pose.y, hdg);
  const double t = lane_center_t(geom_it->second, segment_id, lane_id, s);
  pose.x += t * std::cos(hdg + M_PI / 2.0);
  pose.y += t * std::sin(hdg + M_PI / 2.0);
  pose.heading = lane->direction == LaneDirection::Forward
                     ? wrap_angle(hdg)
                     : wrap_angle(hdg + M_PI);
  if (!std::isfinite(pose.x) || !std::isfinite(pose.y) ||
      !std::isfinite(pose.heading))
    raise(ErrorCode::InvariantViolation, "non-finite pose");
  return pose;
}

std::string to_json(const RoadNetwork& network) {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["source"] = network.source_name;
  nlohmann::json segments = nlohmann::json::array();
  for (const auto& [id, seg] : network.segments) {
    nlohmann::json lanes = nlohmann::json::array();
    for (const auto& lane : seg.lanes) {
      nlohmann::json turns = nlohmann::json::array();
      for (Turn t : lane.turn_affordances) turns.push_back(to_string(t));
      lanes.push_back({{"id", lane.lane_id},
                       {"type", to_string(lane.lane_type)},
                       {"direction", to_string(lane.direction)},
                       {"lane_change", to_string(lane.lane_change)},
                       {"turns", turns}});
    }
    segments.push_back({{"id", id},
                        {"name", seg.name},
                        {"length", seg.length},
                        {"inside_junction", seg.inside_junction},
                        {"lanes", lanes}});
  }
  doc["segments"] = segments;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : network.edges) {
    nlohmann::json entry = {{"from", e.from_segment},
                            {"to", e.to_segment},
                            {"start_lane", e.start_lane_id},
                            {"end_lane", e.end_lane_id}};
    if (e.connecting_road) entry["connecting_road"] = *e.connecting_road;
    if (e.junction_id) entry["junction"] = *e.junction_id;
    if (e.signal_anchor)
      entry["signal"] = {{"name", e.signal_anchor->name},
                         {"x", e.signal_anchor->x},
                         {"y", e.signal_anchor->y}};
    edges.push_back(entry);
  }
  doc["edges"] = edges;
  return doc.dump(2) + "\n";
}

const char* to_string(LaneType t) {
  switch (t) {
    case LaneType::Driving: return "driving";
    case LaneType::Sidewalk: return "sidewalk";
    case LaneType::Shoulder: return "shoulder";
    case LaneType::Biking: return "biking";
    case LaneType::Other: return "other";
  }
  return "other";
}

const char* to_string(LaneDirection d) {
  return d == LaneDirection::Forward ? "forward" : "backward";
}

const char* to_string(LaneChange c) {
  switch (c) {
    case LaneChange::None: return "none";
    case LaneChange::Left: return "left";
    case LaneChange::Right: return "right";
    case LaneChange::Both: return "both";
  }
  return "none";
}

const char* to_string(Turn t) {
  switch (t) {
    case Turn::Left: return "left";
    case Turn::Right: return "right";
    case Turn::Straight: return "straight";
    case Turn::UTurn: return "u_turn";
  }
  return "straight";
}

}  // namespace scenforge::map_graph
