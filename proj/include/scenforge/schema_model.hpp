#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scenforge/xml.hpp"

namespace scenforge::schema_model {

enum class ElementKind { Class, Enumeration, Primitive };
enum class SchemaRelation { Containment, Inheritance, HasAttribute };
enum class DomainKind { NumericRange, EnumLiterals, FreeText };

struct ValueDomain {
  DomainKind kind = DomainKind::FreeText;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<std::string> literals;
  std::string units;

  bool contains(const std::string& value) const;
};

struct ChildSpec {
  std::string element;
  int min = 0;
  int max = -1;  // -1 = unbounded
};

struct ElementDef {
  std::string name;
  ElementKind kind = ElementKind::Class;
  std::vector<ChildSpec> children;
  std::vector<std::string> literals;  // Enumeration only
  std::optional<std::string> base;    // inheritance parent
};

struct AttributeDef {
  std::string element;
  std::string name;
  ValueDomain domain;
  bool required = false;
};

struct SchemaEdge {
  std::string from;
  std::string to;
  SchemaRelation relation = SchemaRelation::Containment;
};

enum class FindingKind {
  UnknownElement,
  UnknownAttribute,
  Containment,
  Cardinality,
  Domain,
};

struct Finding {
  FindingKind kind = FindingKind::UnknownElement;
  std::string path;     // element path within the fragment
  std::string subject;  // offending element or attribute
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
  std::string summary() const;
};

struct SchemaGraph {
  std::map<std::string, ElementDef> elements;
  std::map<std::pair<std::string, std::string>, AttributeDef> attributes;
  std::vector<SchemaEdge> edges;

  const ElementDef* element(const std::string& name) const;
  /// Attribute lookup walks the inheritance chain toward the base type.
  const AttributeDef* attribute(const std::string& element,
                                const std::string& attr) const;
  /// Allowed children including those inherited from base types.
  std::vector<ChildSpec> allowed_children(const std::string& element) const;
};

/// Load the schema-subset catalog (JSON). Validates structural invariants:
/// edge endpoints exist, inheritance is acyclic, enumerations are non-empty.
SchemaGraph load_schema(const std::string& catalog_json);

/// Declared domain of (element, attribute); throws UnknownAttribute.
const ValueDomain& attribute_domain(const SchemaGraph& schema,
                                    const std::string& element,
                                    const std::string& attribute);

/// Structural + domain validation of an XML fragment whose root is a known
/// element. Findings are data; the call itself never throws on bad content.
/// A synthetic <Fragment> root validates each child independently.
ValidationReport validate_block(const SchemaGraph& schema,
                                const xml::Node& fragment);

}  // namespace scenforge::schema_model
