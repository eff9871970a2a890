#include "scenforge/xml.hpp"

#include <expat.h>

#include <algorithm>
#include <sstream>

#include "scenforge/error.hpp"
#include "scenforge/util.hpp"

namespace scenforge::xml {

std::optional<std::string> Node::attr(const std::string& key) const {
  for (const auto& [k, v] : attrs)
    if (k == key) return v;
  return std::nullopt;
}

std::string Node::attr_or(const std::string& key,
                          const std::string& fallback) const {
  auto v = attr(key);
  return v ? *v : fallback;
}

void Node::set_attr(const std::string& key, const std::string& value) {
  for (auto& [k, v] : attrs) {
    if (k == key) {
      v = value;
      return;
    }
  }
  attrs.emplace_back(key, value);
}

bool Node::has_attr(const std::string& key) const {
  return attr(key).has_value();
}

Node* Node::find(const std::string& tag) {
  for (auto& c : children)
    if (c.is_element() && c.name == tag) return &c;
  return nullptr;
}

const Node* Node::find(const std::string& tag) const {
  return const_cast<Node*>(this)->find(tag);
}

std::vector<Node*> Node::find_all(const std::string& tag) {
  std::vector<Node*> out;
  for (auto& c : children)
    if (c.is_element() && c.name == tag) out.push_back(&c);
  return out;
}

std::vector<const Node*> Node::find_all(const std::string& tag) const {
  std::vector<const Node*> out;
  for (const auto& c : children)
    if (c.is_element() && c.name == tag) out.push_back(&c);
  return out;
}

Node* Node::find_path(const std::string& path) {
  Node* cur = this;
  std::size_t pos = 0;
  while (cur && pos < path.size()) {
    std::size_t slash = path.find('/', pos);
    if (slash == std::string::npos) slash = path.size();
    cur = cur->find(path.substr(pos, slash - pos));
    pos = slash + 1;
  }
  return cur;
}

const Node* Node::find_path(const std::string& path) const {
  return const_cast<Node*>(this)->find_path(path);
}

std::vector<Node*> Node::elements() {
  std::vector<Node*> out;
  for (auto& c : children)
    if (c.is_element()) out.push_back(&c);
  return out;
}

std::vector<const Node*> Node::elements() const {
  std::vector<const Node*> out;
  for (const auto& c : children)
    if (c.is_element()) out.push_back(&c);
  return out;
}

namespace {

struct ParseState {
  std::vector<Node*> stack;
  Node root;
  std::string pending_text;
  bool have_root = false;

  void flush_text() {
    if (stack.empty() || pending_text.empty()) {
      pending_text.clear();
      return;
    }
    const std::string trimmed = trim(pending_text);
    if (!trimmed.empty()) stack.back()->append(Node::text_node(trimmed));
    pending_text.clear();
  }
};

void XMLCALL on_start(void* ud, const XML_Char* name, const XML_Char** atts) {
  auto* st = static_cast<ParseState*>(ud);
  st->flush_text();
  Node el = Node::element(name);
  for (int i = 0; atts[i]; i += 2) el.attrs.emplace_back(atts[i], atts[i + 1]);
  if (st->stack.empty()) {
    st->root = std::move(el);
    st->have_root = true;
    st->stack.push_back(&st->root);
  } else {
    Node& slot = st->stack.back()->append(std::move(el));
    st->stack.push_back(&slot);
  }
}

void XMLCALL on_end(void* ud, const XML_Char*) {
  auto* st = static_cast<ParseState*>(ud);
  st->flush_text();
  st->stack.pop_back();
}

void XMLCALL on_chars(void* ud, const XML_Char* s, int len) {
  auto* st = static_cast<ParseState*>(ud);
  st->pending_text.append(s, std::size_t(len));
}

void XMLCALL on_comment(void* ud, const XML_Char* data) {
  auto* st = static_cast<ParseState*>(ud);
  if (st->stack.empty()) return;  // prolog comments dropped
  st->flush_text();
  st->stack.back()->append(Node::comment(data));
}

}  // namespace

Node parse(const std::string& document) {
  XML_Parser parser = XML_ParserCreate(nullptr);
  if (!parser) raise(ErrorCode::Internal, "expat parser allocation failed");

  ParseState state;
  XML_SetUserData(parser, &state);
  XML_SetElementHandler(parser, on_start, on_end);
  XML_SetCharacterDataHandler(parser, on_chars);
  XML_SetCommentHandler(parser, on_comment);

  const XML_Status status = XML_Parse(parser, document.data(),
                                      int(document.size()), /*isFinal=*/1);
  if (status == XML_STATUS_ERROR) {
    std::ostringstream msg;
    msg << XML_ErrorString(XML_GetErrorCode(parser)) << " at line "
        << XML_GetCurrentLineNumber(parser) << ", column "
        << XML_GetCurrentColumnNumber(parser);
    XML_ParserFree(parser);
    raise(ErrorCode::MalformedDocument, msg.str());
  }
  XML_ParserFree(parser);
  if (!state.have_root)
    raise(ErrorCode::MalformedDocument, "document has no root element");
  return std::move(state.root);
}

std::string escape_text(const std::string& raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_attr(const std::string& raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#10;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

void write_node(std::string& out, const Node& node, int depth, int indent) {
  const std::string pad(std::size_t(depth * indent), ' ');
  switch (node.kind) {
    case NodeKind::Comment:
      out += pad + "<!--" + node.text + "-->\n";
      return;
    case NodeKind::Text:
      out += pad + escape_text(node.text) + "\n";
      return;
    case NodeKind::Element:
      break;
  }
  out += pad + "<" + node.name;
  for (const auto& [k, v] : node.attrs)
    out += " " + k + "=\"" + escape_attr(v) + "\"";
  if (node.children.empty()) {
    out += "/>\n";
    return;
  }
  // single text child renders inline
  if (node.children.size() == 1 && node.children[0].kind == NodeKind::Text) {
    out += ">" + escape_text(node.children[0].text) + "</" + node.name + ">\n";
    return;
  }
  out += ">\n";
  for (const Node& c : node.children) write_node(out, c, depth + 1, indent);
  out += pad + "</" + node.name + ">\n";
}

}  // namespace

std::string serialize(const Node& root, const WriteOptions& options) {
  std::string out;
  if (options.declaration)
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  write_node(out, root, 0, options.indent);
  return out;
}

namespace {

std::vector<std::pair<std::string, std::string>> sorted_attrs(const Node& n) {
  auto attrs = n.attrs;
  std::sort(attrs.begin(), attrs.end());
  return attrs;
}

}  // namespace

bool structurally_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == NodeKind::Text) return a.text == b.text;
  if (a.kind == NodeKind::Comment) return true;  // not compared
  if (a.name != b.name) return false;
  if (sorted_attrs(a) != sorted_attrs(b)) return false;
  auto next = [](const std::vector<Node>& kids, std::size_t& i) -> const Node* {
    while (i < kids.size() && kids[i].kind == NodeKind::Comment) ++i;
    return i < kids.size() ? &kids[i++] : nullptr;
  };
  std::size_t ia = 0;
  std::size_t ib = 0;
  while (true) {
    const Node* ca = next(a.children, ia);
    const Node* cb = next(b.children, ib);
    if (!ca || !cb) return ca == cb;
    if (!structurally_equal(*ca, *cb)) return false;
  }
}

namespace {

void canonical_rec(std::string& out, const Node& node) {
  if (node.kind == NodeKind::Comment) return;
  if (node.kind == NodeKind::Text) {
    out += escape_text(node.text);
    return;
  }
  out += "<" + node.name;
  for (const auto& [k, v] : sorted_attrs(node))
    out += " " + k + "=\"" + escape_attr(v) + "\"";
  out += ">";
  for (const Node& c : node.children) canonical_rec(out, c);
  out += "</" + node.name + ">";
}

}  // namespace

std::string canonical_string(const Node& node) {
  std::string out;
  canonical_rec(out, node);
  return out;
}

}  // namespace scenforge::xml
