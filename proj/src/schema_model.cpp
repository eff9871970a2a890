#include "scenforge/schema_model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nlohmann/json.hpp"
#include "scenforge/error.hpp"
#include "scenforge/util.hpp"

namespace scenforge::schema_model {

using nlohmann::json;

bool ValueDomain::contains(const std::string& value) const {
  switch (kind) {
    case DomainKind::FreeText:
      return true;
    case DomainKind::EnumLiterals:
      return std::find(literals.begin(), literals.end(), value) !=
             literals.end();
    case DomainKind::NumericRange: {
      double v = 0.0;
      if (!parse_double(value, v)) return false;
      return v >= lower && v <= upper;
    }
  }
  return false;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& f : findings)
    out << f.path << ": " << f.message << "\n";
  return out.str();
}

const ElementDef* SchemaGraph::element(const std::string& name) const {
  auto it = elements.find(name);
  return it == elements.end() ? nullptr : &it->second;
}

const AttributeDef* SchemaGraph::attribute(const std::string& element,
                                           const std::string& attr) const {
  std::string cur = element;
  for (int depth = 0; depth < 16; ++depth) {
    auto it = attributes.find({cur, attr});
    if (it != attributes.end()) return &it->second;
    const ElementDef* def = this->element(cur);
    if (!def || !def->base) return nullptr;
    cur = *def->base;
  }
  return nullptr;
}

std::vector<ChildSpec> SchemaGraph::allowed_children(
    const std::string& element) const {
  std::vector<ChildSpec> out;
  std::string cur = element;
  for (int depth = 0; depth < 16; ++depth) {
    const ElementDef* def = this->element(cur);
    if (!def) break;
    out.insert(out.end(), def->children.begin(), def->children.end());
    if (!def->base) break;
    cur = *def->base;
  }
  return out;
}

namespace {

ValueDomain parse_domain(const json& spec, const SchemaGraph& graph,
                         const std::string& where) {
  ValueDomain domain;
  if (spec.contains("enum_ref")) {
    const std::string ref = spec["enum_ref"].get<std::string>();
    const ElementDef* def = graph.element(ref);
    if (!def || def->kind != ElementKind::Enumeration)
      raise(ErrorCode::InvariantViolation,
            where + ": enum_ref '" + ref + "' is not an enumeration element");
    domain.kind = DomainKind::EnumLiterals;
    domain.literals = def->literals;
  } else if (spec.contains("literals")) {
    domain.kind = DomainKind::EnumLiterals;
    for (const auto& l : spec["literals"])
      domain.literals.push_back(l.get<std::string>());
    if (domain.literals.empty())
      raise(ErrorCode::InvariantViolation, where + ": empty literal set");
  } else if (spec.contains("range")) {
    domain.kind = DomainKind::NumericRange;
    domain.lower = spec["range"][0].get<double>();
    domain.upper = spec["range"][1].get<double>();
    if (!(domain.lower < domain.upper))
      raise(ErrorCode::InvariantViolation,
            where + ": numeric range lower must be below upper");
  } else {
    domain.kind = DomainKind::FreeText;
  }
  if (spec.contains("units")) domain.units = spec["units"].get<std::string>();
  return domain;
}

void check_inheritance_acyclic(const SchemaGraph& graph) {
  for (const auto& [name, def] : graph.elements) {
    std::set<std::string> seen{name};
    const ElementDef* cur = &def;
    while (cur->base) {
      if (!seen.insert(*cur->base).second)
        raise(ErrorCode::InvariantViolation,
              "inheritance cycle through '" + *cur->base + "'");
      const ElementDef* next = graph.element(*cur->base);
      if (!next)
        raise(ErrorCode::InvariantViolation,
              "element '" + name + "' inherits missing '" + *cur->base + "'");
      cur = next;
    }
  }
}

}  // namespace

SchemaGraph load_schema(const std::string& catalog_json) {
  json doc;
  try {
    doc = json::parse(catalog_json);
  } catch (const json::exception& e) {
    raise(ErrorCode::CatalogParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("elements"))
    raise(ErrorCode::CatalogParseError, "catalog missing 'elements'");

  SchemaGraph graph;
  // first pass: element shells, so enum_ref and edges can resolve
  for (const auto& el : doc["elements"]) {
    ElementDef def;
    def.name = el.at("name").get<std::string>();
    const std::string kind = el.value("kind", "class");
    if (kind == "class")
      def.kind = ElementKind::Class;
    else if (kind == "enumeration")
      def.kind = ElementKind::Enumeration;
    else if (kind == "primitive")
      def.kind = ElementKind::Primitive;
    else
      raise(ErrorCode::CatalogParseError,
            def.name + ": unknown kind '" + kind + "'");
    if (el.contains("literals"))
      for (const auto& l : el["literals"])
        def.literals.push_back(l.get<std::string>());
    if (def.kind == ElementKind::Enumeration && def.literals.empty())
      raise(ErrorCode::InvariantViolation,
            def.name + ": enumeration without literals");
    if (el.contains("base")) def.base = el["base"].get<std::string>();
    if (graph.elements.count(def.name))
      raise(ErrorCode::CatalogParseError, "duplicate element " + def.name);
    graph.elements[def.name] = def;
  }

  // second pass: children, attributes, edges
  for (const auto& el : doc["elements"]) {
    const std::string name = el.at("name").get<std::string>();
    ElementDef& def = graph.elements[name];
    if (el.contains("children")) {
      for (const auto& child : el["children"]) {
        ChildSpec spec;
        spec.element = child.at("name").get<std::string>();
        spec.min = child.value("min", 0);
        spec.max = child.value("max", -1);
        if (spec.max >= 0 && spec.min > spec.max)
          raise(ErrorCode::InvariantViolation,
                name + ": cardinality lower bound above upper for child " +
                    spec.element);
        if (!graph.elements.count(spec.element))
          raise(ErrorCode::InvariantViolation,
                name + ": containment edge to missing element " + spec.element);
        def.children.push_back(spec);
        graph.edges.push_back({name, spec.element, SchemaRelation::Containment});
      }
    }
    if (def.base) {
      if (!graph.elements.count(*def.base))
        raise(ErrorCode::InvariantViolation,
              name + ": inherits missing element " + *def.base);
      graph.edges.push_back({name, *def.base, SchemaRelation::Inheritance});
    }
    if (el.contains("attributes")) {
      for (const auto& attr : el["attributes"]) {
        AttributeDef adef;
        adef.element = name;
        adef.name = attr.at("name").get<std::string>();
        adef.required = attr.value("required", false);
        adef.domain = parse_domain(attr, graph, name + "." + adef.name);
        const auto key = std::make_pair(name, adef.name);
        if (graph.attributes.count(key))
          raise(ErrorCode::CatalogParseError,
                name + ": duplicate attribute " + adef.name);
        graph.attributes[key] = adef;
        graph.edges.push_back({name, adef.name, SchemaRelation::HasAttribute});
      }
    }
  }

  check_inheritance_acyclic(graph);
  if (graph.elements.empty())
    raise(ErrorCode::CatalogParseError, "catalog has no elements");
  return graph;
}

const ValueDomain& attribute_domain(const SchemaGraph& schema,
                                    const std::string& element,
                                    const std::string& attribute) {
  const AttributeDef* def = schema.attribute(element, attribute);
  if (!def)
    raise(ErrorCode::UnknownAttribute,
          element + " has no attribute '" + attribute + "'");
  return def->domain;
}

namespace {

void validate_element(const SchemaGraph& schema, const xml::Node& node,
                      const std::string& path, ValidationReport& report) {
  const ElementDef* def = schema.element(node.name);
  if (!def) {
    report.findings.push_back({FindingKind::UnknownElement, path, node.name,
                               "element '" + node.name + "' not in schema"});
    return;
  }
  for (const auto& [key, value] : node.attrs) {
    const AttributeDef* adef = schema.attribute(node.name, key);
    if (!adef) {
      report.findings.push_back(
          {FindingKind::UnknownAttribute, path, key,
           node.name + " has no attribute '" + key + "'"});
      continue;
    }
    if (!adef->domain.contains(value))
      report.findings.push_back(
          {FindingKind::Domain, path, key,
           "value '" + value + "' outside domain of " + node.name + "@" + key});
  }
  const auto allowed = schema.allowed_children(node.name);
  std::map<std::string, int> counts;
  for (const xml::Node* child : node.elements()) {
    const std::string child_path = path + "/" + child->name;
    const bool permitted =
        std::any_of(allowed.begin(), allowed.end(),
                    [&](const ChildSpec& c) { return c.element == child->name; });
    if (!permitted) {
      report.findings.push_back(
          {FindingKind::Containment, child_path, child->name,
           "element '" + child->name + "' not allowed under " + node.name});
      // still descend so nested problems surface once
    }
    counts[child->name]++;
    validate_element(schema, *child, child_path, report);
  }
  for (const auto& spec : allowed) {
    const int n = counts.count(spec.element) ? counts[spec.element] : 0;
    if (n < spec.min || (spec.max >= 0 && n > spec.max)) {
      std::ostringstream msg;
      msg << node.name << " expects [" << spec.min << ", "
          << (spec.max < 0 ? std::string("inf") : std::to_string(spec.max))
          << "] of " << spec.element << ", found " << n;
      report.findings.push_back(
          {FindingKind::Cardinality, path, spec.element, msg.str()});
    }
  }
}

}  // namespace

ValidationReport validate_block(const SchemaGraph& schema,
                                const xml::Node& fragment) {
  ValidationReport report;
  if (fragment.name == "Fragment") {
    for (const xml::Node* part : fragment.elements())
      validate_element(schema, *part, part->name, report);
  } else {
    validate_element(schema, fragment, fragment.name, report);
  }
  return report;
}

}  // namespace scenforge::schema_model
