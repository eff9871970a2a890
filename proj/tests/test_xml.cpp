#include "scenforge/xml.hpp"

#include <string>

#include "doctest.h"
#include "scenforge/error.hpp"

using namespace scenforge;

TEST_CASE("parse keeps element order, attributes and comments") {
  const std::string doc = R"(<?xml version="1.0"?>
<Root version="1">
  <!--meta {"id":7}-->
  <First a="1" b="two"/>
  <Second>
    <Inner>payload &amp; more</Inner>
  </Second>
</Root>)";
  xml::Node root = xml::parse(doc);
  CHECK(root.name == "Root");
  CHECK(root.attr_or("version", "") == "1");
  REQUIRE(root.children.size() == 3);
  CHECK(root.children[0].kind == xml::NodeKind::Comment);
  CHECK(root.children[0].text == "meta {\"id\":7}");
  CHECK(root.elements().size() == 2);
  const xml::Node* inner = root.find_path("Second/Inner");
  REQUIRE(inner != nullptr);
  REQUIRE(inner->children.size() == 1);
  CHECK(inner->children[0].text == "payload & more");
}

TEST_CASE("serialize parse round trip is structurally stable") {
  xml::Node root = xml::Node::element("A");
  root.set_attr("x", "1.5");
  root.set_attr("name", "a & b <c>");
  xml::Node child = xml::Node::element("B");
  child.append(xml::Node::text_node("quoted \"text\""));
  root.append(std::move(child));
  root.append(xml::Node::comment("note"));

  const std::string once = xml::serialize(root);
  xml::Node reparsed = xml::parse(once);
  CHECK(xml::structurally_equal(root, reparsed));
  CHECK(xml::serialize(reparsed) == once);
}

TEST_CASE("structural equality ignores comments and attribute order") {
  xml::Node a = xml::parse("<T x=\"1\" y=\"2\"><C/></T>");
  xml::Node b = xml::parse("<T y=\"2\" x=\"1\"><!--hi--><C/></T>");
  xml::Node c = xml::parse("<T y=\"2\" x=\"1\"><C z=\"3\"/></T>");
  CHECK(xml::structurally_equal(a, b));
  CHECK_FALSE(xml::structurally_equal(a, c));
  CHECK(xml::canonical_string(a) == xml::canonical_string(b));
  CHECK(xml::canonical_string(a) != xml::canonical_string(c));
}

TEST_CASE("malformed input reports MalformedDocument") {
  CHECK_THROWS_WITH_AS(xml::parse("<a><b></a>"),
                       doctest::Contains("MalformedDocument"), Error);
  CHECK_THROWS_AS(xml::parse(""), Error);
  CHECK_THROWS_AS(xml::parse("just text"), Error);
  try {
    xml::parse("not xml at all");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedDocument);
  }
}
