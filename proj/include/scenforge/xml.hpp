#pragma once

#include <optional>
#include <string>
#include <vector>

namespace scenforge::xml {

enum class NodeKind { Element, Comment, Text };

/// Ordered-attribute DOM node. Comments and character data are carried as
/// child nodes so document round-trips keep embedded metadata comments.
struct Node {
  NodeKind kind = NodeKind::Element;
  std::string name;                                        // Element only
  std::vector<std::pair<std::string, std::string>> attrs;  // insertion order
  std::string text;                                        // Comment / Text
  std::vector<Node> children;

  static Node element(std::string tag) {
    Node n;
    n.name = std::move(tag);
    return n;
  }
  static Node comment(std::string body) {
    Node n;
    n.kind = NodeKind::Comment;
    n.text = std::move(body);
    return n;
  }
  static Node text_node(std::string body) {
    Node n;
    n.kind = NodeKind::Text;
    n.text = std::move(body);
    return n;
  }

  bool is_element() const { return kind == NodeKind::Element; }

  std::optional<std::string> attr(const std::string& key) const;
  std::string attr_or(const std::string& key, const std::string& fallback) const;
  void set_attr(const std::string& key, const std::string& value);
  bool has_attr(const std::string& key) const;

  /// First child element with the given tag, or nullptr.
  Node* find(const std::string& tag);
  const Node* find(const std::string& tag) const;

  /// All child elements with the given tag.
  std::vector<Node*> find_all(const std::string& tag);
  std::vector<const Node*> find_all(const std::string& tag) const;

  /// Walk a '/'-separated path of tag names, first match at each level.
  Node* find_path(const std::string& path);
  const Node* find_path(const std::string& path) const;

  /// Child elements in order (skips comments and text).
  std::vector<Node*> elements();
  std::vector<const Node*> elements() const;

  Node& append(Node child) {
    children.push_back(std::move(child));
    return children.back();
  }
};

/// Parse a complete document; returns the root element.
/// Whitespace-only character data is dropped; comments are kept.
/// Throws MalformedDocument with line context on bad input.
Node parse(const std::string& document);

struct WriteOptions {
  bool declaration = true;
  int indent = 2;
};

/// Deterministic writer: fixed indentation, attributes in stored order,
/// '\n' line endings. Equal trees serialize to identical bytes.
std::string serialize(const Node& root, const WriteOptions& options = {});

/// Infoset-style comparison: element names, attribute sets (order
/// insensitive) and the sequence of element/text children; comments ignored.
bool structurally_equal(const Node& a, const Node& b);

/// One-line serialization with sorted attributes and comments stripped;
/// usable as a structural hash key.
std::string canonical_string(const Node& node);

std::string escape_text(const std::string& raw);
std::string escape_attr(const std::string& raw);

}  // namespace scenforge::xml
