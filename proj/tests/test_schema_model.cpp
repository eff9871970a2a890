#include "scenforge/schema_model.hpp"

#include <string>

#include "doctest.h"
#include "scenforge/error.hpp"
#include "scenforge/util.hpp"
#include "scenforge/xml.hpp"

using namespace scenforge;
using namespace scenforge::schema_model;

namespace {

const SchemaGraph& shipped_schema() {
  static SchemaGraph graph = load_schema(
      read_file(std::string(SCENFORGE_DATA_DIR) + "/schema_catalog.json"));
  return graph;
}

}  // namespace

TEST_CASE("shipped catalog holds the operator target elements") {
  const SchemaGraph& g = shipped_schema();
  for (const char* name :
       {"Weather", "Vehicle", "Pedestrian", "MiscObject", "Event",
        "AbsoluteTargetSpeed", "TransitionDynamics", "Performance",
        "TrafficSignalState", "Waypoint"}) {
    INFO(name);
    CHECK(g.element(name) != nullptr);
  }
}

TEST_CASE("attribute domains match the declared value sets") {
  const SchemaGraph& g = shipped_schema();
  const ValueDomain& shape = attribute_domain(g, "TransitionDynamics", "dynamicsShape");
  CHECK(shape.kind == DomainKind::EnumLiterals);
  CHECK(shape.literals ==
        std::vector<std::string>{"cubic", "sinusoidal", "linear"});

  const ValueDomain& state = attribute_domain(g, "TrafficSignalState", "state");
  CHECK(state.literals ==
        std::vector<std::string>{"green", "yellow", "red", "off"});

  // inherited attributes resolve through the base type
  const ValueDomain& inherited =
      attribute_domain(g, "SpeedActionDynamics", "dynamicsShape");
  CHECK(inherited.literals == shape.literals);

  try {
    attribute_domain(g, "Vehicle", "nonexistent");
    FAIL("expected UnknownAttribute");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownAttribute);
  }
}

TEST_CASE("catalog invariant violations are rejected") {
  CHECK_THROWS_AS(load_schema(""), Error);
  try {
    load_schema("{}");
    FAIL("expected CatalogParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CatalogParseError);
  }
  // containment edge to a missing element
  try {
    load_schema(R"({"elements":[
      {"name":"A","kind":"class","children":[{"name":"Missing","min":0,"max":1}]}
    ]})");
    FAIL("expected InvariantViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvariantViolation);
  }
  // inheritance cycle
  try {
    load_schema(R"({"elements":[
      {"name":"A","kind":"class","base":"B"},
      {"name":"B","kind":"class","base":"A"}
    ]})");
    FAIL("expected InvariantViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvariantViolation);
  }
}

TEST_CASE("validate_block accepts a weather block within domains") {
  const SchemaGraph& g = shipped_schema();
  xml::Node env = xml::parse(R"(<Environment name="weather_rainy">
    <TimeOfDay animation="false" dateTime="2020-01-01T12:00:00"/>
    <Weather cloudState="rainy">
      <Sun intensity="1000" azimuth="1.2" elevation="0.5"/>
      <Fog visualRange="300"/>
      <Precipitation precipitationType="rain" intensity="0.7"/>
    </Weather>
    <RoadCondition frictionScaleFactor="0.4"/>
  </Environment>)");
  ValidationReport report = validate_block(g, env);
  INFO(report.summary());
  CHECK(report.ok());

  // idempotent and side-effect free
  ValidationReport again = validate_block(g, env);
  CHECK(again.findings.size() == report.findings.size());
}

TEST_CASE("validate_block flags out-of-domain literals") {
  const SchemaGraph& g = shipped_schema();
  xml::Node dyn = xml::parse(
      R"(<SpeedActionDynamics dynamicsShape="spiral" value="2" dynamicsDimension="time"/>)");
  ValidationReport report = validate_block(g, dyn);
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].kind == FindingKind::Domain);
  CHECK(report.findings[0].subject == "dynamicsShape");
}

TEST_CASE("validate_block flags containment violations") {
  const SchemaGraph& g = shipped_schema();
  xml::Node bad = xml::parse(R"(<Entities>
    <Event name="e" priority="overwrite"><Action name="a"/></Event>
  </Entities>)");
  ValidationReport report = validate_block(g, bad);
  bool containment = false;
  for (const auto& f : report.findings)
    if (f.kind == FindingKind::Containment && f.subject == "Event")
      containment = true;
  CHECK(containment);
}

TEST_CASE("validate_block checks cardinality bounds") {
  const SchemaGraph& g = shipped_schema();
  // Route requires at least two waypoints
  xml::Node route = xml::parse(R"(<Route name="r" closed="false">
    <Waypoint routeStrategy="fastest"><Position><WorldPosition x="0" y="0"/></Position></Waypoint>
  </Route>)");
  ValidationReport report = validate_block(g, route);
  bool cardinality = false;
  for (const auto& f : report.findings)
    if (f.kind == FindingKind::Cardinality && f.subject == "Waypoint")
      cardinality = true;
  CHECK(cardinality);
}

TEST_CASE("numeric range boundaries are inclusive") {
  const SchemaGraph& g = shipped_schema();
  const ValueDomain& intensity = attribute_domain(g, "Precipitation", "intensity");
  CHECK(intensity.contains("0"));
  CHECK(intensity.contains("1"));
  CHECK(intensity.contains("0.7"));
  CHECK_FALSE(intensity.contains("1.0001"));
  CHECK_FALSE(intensity.contains("abc"));
}
