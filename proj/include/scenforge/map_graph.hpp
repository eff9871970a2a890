#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scenforge::map_graph {

enum class LaneType { Driving, Sidewalk, Shoulder, Biking, Other };
enum class LaneDirection { Forward, Backward };
enum class LaneChange { None, Left, Right, Both };
enum class Turn { Left, Right, Straight, UTurn };

const char* to_string(LaneType t);
const char* to_string(LaneDirection d);
const char* to_string(LaneChange c);
const char* to_string(Turn t);

struct LaneInfo {
  int lane_id = 0;  // signed OpenDRIVE id, never 0
  LaneType lane_type = LaneType::Other;
  LaneDirection direction = LaneDirection::Forward;
  LaneChange lane_change = LaneChange::None;
  std::set<Turn> turn_affordances;
};

struct RoadSegment {
  std::string id;
  std::string name;
  double length = 0.0;
  std::vector<LaneInfo> lanes;
  bool inside_junction = false;  // connecting road of some junction

  const LaneInfo* lane(int lane_id) const;
  /// Drivable lanes for one travel direction, ordered leftmost first
  /// (leftmost = adjacent to the center line).
  std::vector<const LaneInfo*> driving_lanes(LaneDirection dir) const;
};

struct SignalAnchor {
  double x = 0.0;
  double y = 0.0;
  std::string name;
};

struct ConnectionEdge {
  std::string from_segment;
  std::string to_segment;
  std::optional<std::string> connecting_road;
  std::optional<std::string> junction_id;
  int start_lane_id = 0;
  int end_lane_id = 0;
  std::optional<SignalAnchor> signal_anchor;
};

struct WorldPose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // radians in [-pi, pi)
};

namespace detail {

struct GeometryRecord {
  double s = 0.0, x = 0.0, y = 0.0, hdg = 0.0, length = 0.0;
  bool is_arc = false;
  double curvature = 0.0;
};

struct WidthRecord {
  double s_offset = 0.0;
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
};

struct LaneGeometry {
  int id = 0;
  std::vector<WidthRecord> widths;
};

struct SectionGeometry {
  double s0 = 0.0;
  std::vector<LaneGeometry> lanes;
};

/// Per-segment reference-line and lane-width data retained for pose math.
struct SegmentGeometry {
  std::vector<GeometryRecord> primitives;
  std::vector<SectionGeometry> sections;
};

}  // namespace detail

struct RoadNetwork {
  std::map<std::string, RoadSegment> segments;
  std::vector<ConnectionEdge> edges;
  std::string source_name;
  std::map<std::string, detail::SegmentGeometry> geometry;  // pose cache

  const RoadSegment& segment(const std::string& id) const;
  /// Junction edges leaving a segment in its incoming-travel direction.
  std::vector<const ConnectionEdge*> junction_edges_from(
      const std::string& segment_id) const;
  bool feeds_junction(const std::string& segment_id) const;
  /// Junction id a segment feeds, if any.
  std::optional<std::string> junction_of(const std::string& segment_id) const;
};

struct SceneConstraints {
  int min_driving_lanes = 1;  // per travel direction
  bool requires_junction = false;
  std::set<Turn> required_turns;
};

/// Parse an OpenDRIVE document (line/arc geometry subset) into a road graph.
/// Junction connections expand into one ConnectionEdge per lane link.
RoadNetwork parse_opendrive(const std::string& document,
                            const std::string& source_name = "");

/// Segments satisfying every constraint, sorted by id. Throws NoCandidate
/// when the result would be empty.
std::vector<std::string> filter_segments(const RoadNetwork& network,
                                         const SceneConstraints& constraints);

/// Pose on the lane centerline at arclength s; heading follows the lane's
/// travel direction.
WorldPose resolve_position(const RoadNetwork& network,
                           const std::string& segment_id, int lane_id,
                           double s);

/// Inspection dump (schema documented in the README).
std::string to_json(const RoadNetwork& network);

double wrap_angle(double radians);  // into [-pi, pi)

}  // namespace scenforge::map_graph
