#include "tdt/format.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "tdt/errors.hpp"
#include "tdt/normalizer.hpp"
#include "tdt/util.hpp"

namespace tdt {

using json = nlohmann::json;

const char* to_string(ParseError::Kind kind) noexcept {
  switch (kind) {
    case ParseError::Kind::Syntax: return "SyntaxError";
    case ParseError::Kind::Schema: return "SchemaError";
    case ParseError::Kind::Encoding: return "EncodingError";
    case ParseError::Kind::Invariant: return "InvariantViolation";
  }
  return "?";
}

namespace {

using PE = ParseError;

[[noreturn]] void schema(const std::string& field, const std::string& message,
                         const std::string& node_id = {}) {
  throw PE(PE::Kind::Schema, field + ": " + message, field, 0, 0, node_id);
}

std::pair<std::size_t, std::size_t> position_of(std::string_view bytes, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < bytes.size(); ++i) {
    if (bytes[i] == '\n') {
      ++line;
      col = 1;
    } else if ((static_cast<unsigned char>(bytes[i]) & 0xC0) != 0x80) {
      ++col;
    }
  }
  return {line, col};
}

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys,
               const std::string& node_id = {}) {
  for (const auto& [k, v] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
      schema(where + "." + k, "unknown field", node_id);
    }
  }
}

const json& require(const json& obj, const char* key, const std::string& where,
                    const std::string& node_id = {}) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema(where + "." + key, "required field missing", node_id);
  return *it;
}

std::string get_string(const json& v, const std::string& field, const std::string& node_id = {}) {
  if (!v.is_string()) schema(field, "expected a string", node_id);
  return v.get<std::string>();
}

int get_int(const json& v, const std::string& field, const std::string& node_id = {}) {
  if (!v.is_number_integer()) schema(field, "expected an integer", node_id);
  const auto x = v.get<long long>();
  if (x < -1000000 || x > 1000000) schema(field, "integer out of range", node_id);
  return static_cast<int>(x);
}

std::size_t get_offset(const json& v, const std::string& field, const std::string& node_id = {}) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    schema(field, "expected a non-negative integer", node_id);
  }
  return v.get<std::size_t>();
}

CalendarValue get_calendar(const json& v, const std::string& field, const std::string& node_id = {}) {
  const std::string s = get_string(v, field, node_id);
  try {
    return parse_calendar_value(s);
  } catch (const InvalidCalendar& e) {
    schema(field, e.what(), node_id);
  }
}

TimexSemantics parse_semantics(const json& v, const std::string& where, const std::string& id) {
  if (!v.is_object()) schema(where, "expected an object", id);
  const std::string type = get_string(require(v, "type", where, id), where + ".type", id);
  TimexSemantics out;
  if (type == "absolute") {
    only_keys(v, where, {"type", "value"}, id);
    out = AbsoluteTime{get_calendar(require(v, "value", where, id), where + ".value", id)};
  } else if (type == "partial") {
    only_keys(v, where, {"type", "month", "day", "hour", "minute", "second", "weekday"}, id);
    PartialTime p;
    auto field = [&](const char* key, std::optional<int>& slot) {
      if (const auto it = v.find(key); it != v.end()) slot = get_int(*it, where + "." + key, id);
    };
    field("month", p.fields.month);
    field("day", p.fields.day);
    field("hour", p.fields.hour);
    field("minute", p.fields.minute);
    field("second", p.fields.second);
    if (const auto it = v.find("weekday"); it != v.end()) {
      const std::string w = get_string(*it, where + ".weekday", id);
      p.weekday = weekday_from_string(w);
      if (!p.weekday) schema(where + ".weekday", "unknown weekday '" + w + "'", id);
    }
    out = p;
  } else if (type == "offset") {
    only_keys(v, where, {"type", "sign", "magnitude", "unit"}, id);
    OffsetTime o;
    o.sign = get_int(require(v, "sign", where, id), where + ".sign", id);
    o.magnitude = get_int(require(v, "magnitude", where, id), where + ".magnitude", id);
    const std::string u = get_string(require(v, "unit", where, id), where + ".unit", id);
    const auto unit = offset_unit_from_string(u);
    if (!unit) schema(where + ".unit", "unknown unit '" + u + "'", id);
    o.unit = *unit;
    out = o;
  } else if (type == "symbolic") {
    only_keys(v, where, {"type", "region"}, id);
    const std::string r = get_string(require(v, "region", where, id), where + ".region", id);
    const auto region = region_from_string(r);
    if (!region) schema(where + ".region", "unknown region '" + r + "'", id);
    out = SymbolicTime{*region};
  } else {
    schema(where + ".type", "unknown semantics type '" + type + "'", id);
  }
  try {
    check_semantics(out);
  } catch (const InvalidCalendar& e) {
    schema(where, e.what(), id);
  }
  return out;
}

json semantics_to_json(const TimexSemantics& s) {
  json out = json::object();
  if (const auto* a = std::get_if<AbsoluteTime>(&s)) {
    out["type"] = "absolute";
    out["value"] = format_calendar_value(a->value);
  } else if (const auto* p = std::get_if<PartialTime>(&s)) {
    out["type"] = "partial";
    if (p->weekday) out["weekday"] = to_string(*p->weekday);
    if (p->fields.month) out["month"] = *p->fields.month;
    if (p->fields.day) out["day"] = *p->fields.day;
    if (p->fields.hour) out["hour"] = *p->fields.hour;
    if (p->fields.minute) out["minute"] = *p->fields.minute;
    if (p->fields.second) out["second"] = *p->fields.second;
  } else if (const auto* o = std::get_if<OffsetTime>(&s)) {
    out["type"] = "offset";
    out["sign"] = o->sign;
    out["magnitude"] = o->magnitude;
    out["unit"] = to_string(o->unit);
  } else if (const auto* y = std::get_if<SymbolicTime>(&s)) {
    out["type"] = "symbolic";
    out["region"] = to_string(y->region);
  }
  return out;
}

// Key order is fixed here rather than left to the JSON library.
std::string node_line(const Node& node) {
  std::string out = "{\"id\":" + json(id_of(node).str()).dump();
  if (const auto* t = std::get_if<TimexNode>(&node)) {
    out += ",\"kind\":\"timex\",\"span\":[" + std::to_string(t->span.start) + "," +
           std::to_string(t->span.end) + "],\"class\":\"" + to_string(t->cls) + "\"";
    if (t->semantics) out += ",\"semantics\":" + semantics_to_json(*t->semantics).dump();
  } else if (const auto* e = std::get_if<EventNode>(&node)) {
    out += ",\"kind\":\"event\",\"span\":[" + std::to_string(e->span.start) + "," +
           std::to_string(e->span.end) + "],\"class\":\"" + to_string(e->cls) + "\"";
  } else {
    out += ",\"kind\":\"meta\"";
  }
  return out + "}";
}

}  // namespace

namespace {

struct Parts {
  Document doc;  // header fields only
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::unordered_set<std::string> incident;
};

Parts parse_parts(std::string_view bytes, bool edges_required) {
  if (const auto bad = utf8::find_invalid(bytes)) {
    const auto [line, col] = position_of(bytes, *bad);
    throw PE(PE::Kind::Encoding,
             "invalid UTF-8 at line " + std::to_string(line) + ", column " + std::to_string(col),
             {}, line, col);
  }

  json root;
  try {
    root = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = position_of(bytes, offset);
    throw PE(PE::Kind::Syntax,
             "syntax error at line " + std::to_string(line) + ", column " + std::to_string(col),
             {}, line, col);
  }

  if (!root.is_object()) schema("$", "top level must be an object");
  only_keys(root, "$", {"id", "genre", "text", "sentence_breaks", "dct", "nodes", "edges"});

  Document doc;
  doc.id = get_string(require(root, "id", "$"), "id");
  if (doc.id.empty()) schema("id", "must not be empty");
  const std::string genre = get_string(require(root, "genre", "$"), "genre");
  const auto g = genre_from_string(genre);
  if (!g) schema("genre", "expected \"news\" or \"narrative\", got '" + genre + "'");
  doc.genre = *g;
  doc.text = get_string(require(root, "text", "$"), "text");

  if (const auto it = root.find("sentence_breaks"); it != root.end() && !it->is_null()) {
    if (!it->is_array()) schema("sentence_breaks", "expected an array");
    std::vector<std::size_t> breaks;
    for (std::size_t i = 0; i < it->size(); ++i) {
      breaks.push_back(get_offset((*it)[i], "sentence_breaks[" + std::to_string(i) + "]"));
    }
    doc.sentence_breaks = std::move(breaks);
  }
  if (const auto it = root.find("dct"); it != root.end() && !it->is_null()) {
    doc.dct = get_calendar(*it, "dct");
  }

  const json& jnodes = require(root, "nodes", "$");
  static const json kNoEdges = json::array();
  const json& jedges = edges_required || root.contains("edges") ? require(root, "edges", "$") : kNoEdges;
  if (!jnodes.is_array()) schema("nodes", "expected an array");
  if (!jedges.is_array()) schema("edges", "expected an array");

  Parts parts;
  std::vector<Edge>& edges = parts.edges;
  std::unordered_set<std::string>& incident = parts.incident;
  for (std::size_t i = 0; i < jedges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& je = jedges[i];
    if (!je.is_object()) schema(where, "expected an object");
    only_keys(je, where, {"child", "parent", "label"});
    Edge e;
    e.child = NodeId(get_string(require(je, "child", where), where + ".child"));
    e.parent = NodeId(get_string(require(je, "parent", where), where + ".parent"));
    const std::string label = get_string(require(je, "label", where), where + ".label");
    const auto l = edge_label_from_string(label);
    if (!l) schema(where + ".label", "unknown edge label '" + label + "'", e.child.str());
    e.label = *l;
    incident.insert(e.child.str());
    incident.insert(e.parent.str());
    edges.push_back(std::move(e));
  }

  const std::size_t text_len = utf8::length(doc.text);
  std::vector<Node>& nodes = parts.nodes;
  for (std::size_t i = 0; i < jnodes.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    const json& jn = jnodes[i];
    if (!jn.is_object()) schema(where, "expected an object");
    const std::string id = get_string(require(jn, "id", where), where + ".id");
    if (id.empty()) schema(where + ".id", "must not be empty");
    const std::string kind = get_string(require(jn, "kind", where, id), where + ".kind", id);

    if (kind == "meta") {
      only_keys(jn, where, {"id", "kind"}, id);
      const auto mk = meta_kind_from_id(id);
      if (!mk) schema(where + ".id", "'" + id + "' is not a reserved meta node ID", id);
      nodes.emplace_back(MetaNode{*mk});
      continue;
    }
    if (kind != "timex" && kind != "event") {
      schema(where + ".kind", "expected \"meta\", \"timex\" or \"event\", got '" + kind + "'", id);
    }
    if (kind == "timex") {
      only_keys(jn, where, {"id", "kind", "span", "class", "semantics", "surface"}, id);
    } else {
      only_keys(jn, where, {"id", "kind", "span", "class", "surface"}, id);
    }
    const json& js = require(jn, "span", where, id);
    if (!js.is_array() || js.size() != 2) schema(where + ".span", "expected [start, end]", id);
    Span span{get_offset(js[0], where + ".span[0]", id), get_offset(js[1], where + ".span[1]", id)};
    if (!(span.start < span.end && span.end <= text_len)) {
      schema(where + ".span",
             "span [" + std::to_string(span.start) + "," + std::to_string(span.end) +
                 ") is empty or exceeds text length " + std::to_string(text_len),
             id);
    }
    std::string surface = utf8::substr(doc.text, span.start, span.end);
    if (const auto it = jn.find("surface"); it != jn.end()) {
      if (get_string(*it, where + ".surface", id) != surface) {
        schema(where + ".surface", "does not match the text under the span", id);
      }
    }
    const std::string cls = get_string(require(jn, "class", where, id), where + ".class", id);

    if (kind == "timex") {
      TimexNode t;
      t.id = NodeId(id);
      t.span = span;
      t.surface = std::move(surface);
      const auto c = timex_class_from_string(cls);
      if (!c) schema(where + ".class", "unknown timex class '" + cls + "'", id);
      t.cls = *c;
      if (const auto it = jn.find("semantics"); it != jn.end() && !it->is_null()) {
        t.semantics = parse_semantics(*it, where + ".semantics", id);
        if (!semantics_match_class(*t.semantics, t.cls)) {
          schema(where + ".semantics", std::string("semantics do not fit class ") + to_string(t.cls), id);
        }
      }
      nodes.emplace_back(std::move(t));
    } else {
      EventNode e;
      e.id = NodeId(id);
      e.span = span;
      e.surface = std::move(surface);
      const auto c = event_class_from_string(cls);
      if (!c) schema(where + ".class", "unknown event class '" + cls + "'", id);
      e.cls = *c;
      nodes.emplace_back(std::move(e));
    }
  }

  parts.doc = std::move(doc);
  return parts;
}

}  // namespace

Document parse_document(std::string_view bytes) {
  Parts parts = parse_parts(bytes, true);
  Document doc = std::move(parts.doc);
  std::vector<Node> nodes;
  for (Node& n : parts.nodes) {
    const auto* t = std::get_if<TimexNode>(&n);
    if (t != nullptr && t->cls == TimexClass::Unlocatable && !parts.incident.contains(t->id.str())) {
      doc.unattached.push_back(*t);
    } else {
      nodes.push_back(std::move(n));
    }
  }
  std::sort(doc.unattached.begin(), doc.unattached.end(),
            [](const TimexNode& a, const TimexNode& b) { return a.id < b.id; });
  try {
    doc.tree = build_tree(std::move(nodes), std::move(parts.edges), BuildOptions{.insert_meta = true});
  } catch (const TreeError& e) {
    throw InvariantViolation(e);
  }
  check_document(doc);
  return doc;
}

Markables parse_markables(std::string_view bytes) {
  Parts parts = parse_parts(bytes, false);
  Markables m;
  m.header = std::move(parts.doc);
  std::set<std::string> seen;
  for (Node& n : parts.nodes) {
    if (std::holds_alternative<MetaNode>(n)) continue;
    if (!seen.insert(id_of(n).str()).second) {
      schema("nodes", "duplicate node ID '" + id_of(n).str() + "'", id_of(n).str());
    }
    if (is_reserved_id(id_of(n).str())) {
      schema("nodes", "'" + id_of(n).str() + "' is a reserved ID", id_of(n).str());
    }
    if (auto* t = std::get_if<TimexNode>(&n)) {
      m.timexes.push_back(std::move(*t));
    } else {
      m.events.push_back(std::move(std::get<EventNode>(n)));
    }
  }
  std::sort(m.timexes.begin(), m.timexes.end(),
            [](const TimexNode& a, const TimexNode& b) { return a.id < b.id; });
  std::sort(m.events.begin(), m.events.end(),
            [](const EventNode& a, const EventNode& b) { return a.id < b.id; });
  check_document(m.header);
  return m;
}

Markables markables_of(const Document& doc) {
  Markables m;
  m.header = doc;
  m.header.tree = TemporalDependencyTree();
  m.header.unattached.clear();
  for (Node& n : annotated_nodes(doc)) {
    if (auto* t = std::get_if<TimexNode>(&n)) {
      m.timexes.push_back(std::move(*t));
    } else if (auto* e = std::get_if<EventNode>(&n)) {
      m.events.push_back(std::move(*e));
    }
  }
  return m;
}

std::string serialize_document(const Document& doc) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"id\": " << json(doc.id).dump() << ",\n";
  out << "  \"genre\": \"" << to_string(doc.genre) << "\",\n";
  out << "  \"text\": " << json(doc.text).dump() << ",\n";
  if (doc.sentence_breaks) out << "  \"sentence_breaks\": " << json(*doc.sentence_breaks).dump() << ",\n";
  if (doc.dct) out << "  \"dct\": \"" << format_calendar_value(*doc.dct) << "\",\n";

  std::vector<Node> nodes = doc.tree.nodes();
  for (const TimexNode& t : doc.unattached) nodes.emplace_back(t);
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return id_of(a) < id_of(b); });

  out << "  \"nodes\": [";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << "    " << node_line(nodes[i]);
  }
  out << (nodes.empty() ? "],\n" : "\n  ],\n");

  const auto& edges = doc.tree.edges();
  out << "  \"edges\": [";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"child\":" << json(e.child.str()).dump()
        << ",\"parent\":" << json(e.parent.str()).dump() << ",\"label\":\"" << to_string(e.label)
        << "\"}";
  }
  out << (edges.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path.string() + "'");
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("cannot write '" + path.string() + "'");
}

namespace {

[[noreturn]] void rethrow_with_path(const std::filesystem::path& path) {
  const std::string prefix = path.string() + ": ";
  try {
    throw;
  } catch (const InvariantViolation& e) {
    // Keep the tree kind; only the message gains the path.
    throw InvariantViolation(TreeError(e.tree_kind(), e.node_id(), prefix + e.what()));
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), prefix + e.what(), e.field(), e.line(), e.column(), e.node_id());
  }
}

}  // namespace

Document load_document(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  try {
    return parse_document(bytes);
  } catch (const ParseError&) {
    rethrow_with_path(path);
  }
}

CorpusManifest CorpusManifest::parse(std::string_view text, const std::filesystem::path& base_dir) {
  CorpusManifest m;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string_view::npos ? line.npos : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    const std::string where = "manifest line " + std::to_string(line_no);
    if (fields.size() != 3) {
      throw PE(PE::Kind::Syntax, where + ": expected path<TAB>genre<TAB>annotator", {}, line_no, 1);
    }
    ManifestEntry e;
    e.path = std::filesystem::path(std::string(fields[0]));
    if (e.path.empty()) throw PE(PE::Kind::Schema, where + ": empty path", "path", line_no, 1);
    if (e.path.is_relative()) e.path = base_dir / e.path;
    const auto g = genre_from_string(fields[1]);
    if (!g) {
      throw PE(PE::Kind::Schema, where + ": unknown genre '" + std::string(fields[1]) + "'", "genre",
               line_no, 1);
    }
    e.genre = *g;
    e.annotator = std::string(fields[2]);
    m.entries.push_back(std::move(e));
    if (nl == text.size()) break;
  }
  return m;
}

CorpusManifest CorpusManifest::load(const std::filesystem::path& manifest_path) {
  return parse(read_file(manifest_path), manifest_path.parent_path());
}

std::size_t Corpus::count(Genre genre) const noexcept {
  return static_cast<std::size_t>(std::count_if(documents.begin(), documents.end(), [&](const CorpusDocument& d) {
    return d.source.genre == genre;
  }));
}

std::vector<std::size_t> Corpus::distinct() const {
  std::vector<std::size_t> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < documents.size(); ++i) {
    if (seen.insert(documents[i].doc.id).second) out.push_back(i);
  }
  return out;
}

bool Corpus::is_double_annotated(const std::string& doc_id) const {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const AnnotationPair& p) { return documents[p.first].doc.id == doc_id; });
}

Corpus build_corpus(std::vector<CorpusDocument> documents) {
  Corpus c;
  std::map<std::string, std::vector<std::size_t>> by_id;
  for (std::size_t i = 0; i < documents.size(); ++i) {
    const CorpusDocument& d = documents[i];
    if (d.doc.genre != d.source.genre) {
      throw PE(PE::Kind::Schema,
               d.source.path.string() + ": document genre '" + to_string(d.doc.genre) +
                   "' disagrees with manifest genre '" + to_string(d.source.genre) + "'",
               "genre");
    }
    auto& seen = by_id[d.doc.id];
    for (std::size_t j : seen) {
      if (documents[j].source.annotator == d.source.annotator) {
        throw PE(PE::Kind::Schema,
                 d.source.path.string() + ": document '" + d.doc.id + "' listed twice for annotator '" +
                     d.source.annotator + "'",
                 "annotator");
      }
      c.pairs.push_back(AnnotationPair{j, i});
    }
    seen.push_back(i);
  }
  c.documents = std::move(documents);
  return c;
}

Corpus load_corpus(const std::filesystem::path& manifest_path) {
  const CorpusManifest manifest = CorpusManifest::load(manifest_path);
  std::vector<CorpusDocument> docs;
  docs.reserve(manifest.entries.size());
  for (const ManifestEntry& e : manifest.entries) docs.push_back(CorpusDocument{e, load_document(e.path)});
  return build_corpus(std::move(docs));
}

}  // namespace tdt
