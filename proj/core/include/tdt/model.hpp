#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tdt/calendar.hpp"

namespace tdt {

// Identifier of a node, unique within one document.
class NodeId {
 public:
  NodeId() = default;
  explicit NodeId(std::string value) : value_(std::move(value)) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend bool operator==(const NodeId&, const NodeId&) = default;
  // Natural order, so "t2" sorts before "t10".
  friend bool operator<(const NodeId& a, const NodeId& b) noexcept;

 private:
  std::string value_;
};

enum class NodeKind { Meta, Timex, Event };

enum class MetaNodeKind { Root, Dct, PresentRef, PastRef, FutureRef, Atemporal };

inline constexpr std::array<MetaNodeKind, 6> kMetaNodeKinds = {
    MetaNodeKind::Root,    MetaNodeKind::Dct,      MetaNodeKind::PresentRef,
    MetaNodeKind::PastRef, MetaNodeKind::FutureRef, MetaNodeKind::Atemporal};

enum class TimexClass { AbsoluteConcrete, RelativeConcrete, Vague, Unlocatable };

enum class EventClass {
  Event,
  State,
  Habitual,
  Ongoing,
  Completed,
  Modalized,
  GenericHabitual,
  GenericState,
};

inline constexpr std::array<TimexClass, 4> kTimexClasses = {
    TimexClass::AbsoluteConcrete, TimexClass::RelativeConcrete, TimexClass::Vague,
    TimexClass::Unlocatable};

inline constexpr std::array<EventClass, 8> kEventClasses = {
    EventClass::Event,     EventClass::State,     EventClass::Habitual,
    EventClass::Ongoing,   EventClass::Completed, EventClass::Modalized,
    EventClass::GenericHabitual, EventClass::GenericState};

// Label L on edge (child c, parent p) asserts "p L c".
enum class EdgeLabel { DependOn, Before, After, Overlap, Includes };

inline constexpr std::array<EdgeLabel, 5> kEdgeLabels = {
    EdgeLabel::DependOn, EdgeLabel::Before, EdgeLabel::After, EdgeLabel::Overlap,
    EdgeLabel::Includes};

enum class Genre { News, Narrative };

// Only EVENT advances narrative time; the other seven classes are stative.
constexpr bool is_eventive(EventClass c) noexcept { return c == EventClass::Event; }

const char* to_string(NodeKind k) noexcept;
const char* to_string(MetaNodeKind k) noexcept;  // the reserved node ID
const char* to_string(TimexClass c) noexcept;
const char* to_string(EventClass c) noexcept;
const char* to_string(EdgeLabel l) noexcept;
const char* to_string(Genre g) noexcept;

std::optional<MetaNodeKind> meta_kind_from_id(std::string_view id) noexcept;
std::optional<TimexClass> timex_class_from_string(std::string_view s) noexcept;
std::optional<EventClass> event_class_from_string(std::string_view s) noexcept;
std::optional<EdgeLabel> edge_label_from_string(std::string_view s) noexcept;
std::optional<Genre> genre_from_string(std::string_view s) noexcept;

NodeId meta_id(MetaNodeKind k);
bool is_reserved_id(std::string_view id) noexcept;

// Code-point offsets, start inclusive, end exclusive.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const noexcept { return end - start; }
  bool overlaps(const Span& other) const noexcept {
    return start < other.end && other.start < end;
  }
  friend auto operator<=>(const Span&, const Span&) = default;
};

struct MetaNode {
  MetaNodeKind kind = MetaNodeKind::Root;
  friend bool operator==(const MetaNode&, const MetaNode&) = default;
};

struct TimexNode {
  NodeId id;
  Span span;
  std::string surface;
  TimexClass cls = TimexClass::AbsoluteConcrete;
  std::optional<TimexSemantics> semantics;
  friend bool operator==(const TimexNode&, const TimexNode&) = default;
};

struct EventNode {
  NodeId id;
  Span span;
  std::string surface;
  EventClass cls = EventClass::Event;
  friend bool operator==(const EventNode&, const EventNode&) = default;
};

using Node = std::variant<MetaNode, TimexNode, EventNode>;

NodeId id_of(const Node& node);
NodeKind kind_of(const Node& node) noexcept;
std::optional<Span> span_of(const Node& node) noexcept;

inline bool is_meta(const Node& n, MetaNodeKind k) noexcept {
  const auto* m = std::get_if<MetaNode>(&n);
  return m != nullptr && m->kind == k;
}

struct Edge {
  NodeId child;
  NodeId parent;
  EdgeLabel label = EdgeLabel::DependOn;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct BuildOptions {
  // Add any missing meta node, and a DEPEND_ON edge to ROOT for any non-ROOT
  // meta node that has no parent.
  bool insert_meta = false;
};

// An immutable spanning tree rooted at ROOT. Nodes are kept sorted by ID and
// edges by child ID.
class TemporalDependencyTree {
 public:
  // The minimal tree: the six meta nodes, five of them under ROOT.
  TemporalDependencyTree();

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  bool contains(const NodeId& id) const noexcept;
  const Node* find(const NodeId& id) const noexcept;
  // Throws UnknownNode.
  const Node& node(const NodeId& id) const;
  // Nullptr for ROOT. Throws UnknownNode.
  const Edge* parent_edge(const NodeId& id) const;
  // Throws UnknownNode.
  std::size_t depth(const NodeId& id) const;
  std::vector<NodeId> children(const NodeId& id) const;

  friend bool operator==(const TemporalDependencyTree& a, const TemporalDependencyTree& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  friend TemporalDependencyTree build_tree(std::vector<Node>, std::vector<Edge>, BuildOptions);

  struct Unbuilt {};
  explicit TemporalDependencyTree(Unbuilt) {}

  std::size_t index_of(const NodeId& id) const;

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::optional<std::size_t>> parent_edge_;  // by node index
  std::vector<std::size_t> depth_;                       // by node index
};

// Throws TreeError on duplicate or reserved IDs, dangling endpoints, multiple
// or missing parents, a parented ROOT, cycles, or missing meta nodes.
TemporalDependencyTree build_tree(std::vector<Node> nodes, std::vector<Edge> edges,
                                  BuildOptions options = {});

// Edges from `node` up to ROOT. Throws UnknownNode.
std::vector<Edge> path_to_root(const TemporalDependencyTree& tree, const NodeId& node);

// Deepest node on both root paths. Throws UnknownNode.
NodeId lowest_common_ancestor(const TemporalDependencyTree& tree, const NodeId& a,
                              const NodeId& b);

struct Document {
  std::string id;
  Genre genre = Genre::News;
  std::string text;
  // End offset (exclusive, in code points) of each sentence.
  std::optional<std::vector<std::size_t>> sentence_breaks;
  std::optional<CalendarValue> dct;
  TemporalDependencyTree tree;
  // Unlocatable time expressions recognized in the text but kept out of the
  // tree, sorted by ID.
  std::vector<TimexNode> unattached;

  std::size_t text_length() const noexcept;
  // Zero-based sentence index of a code-point offset. With no sentence
  // metadata the whole text is sentence 0.
  std::size_t sentence_of(std::size_t offset) const noexcept;

  friend bool operator==(const Document&, const Document&) = default;
};

// Every annotated timex and event node, tree and unattached, sorted by ID.
std::vector<Node> annotated_nodes(const Document& doc);

// Throws ParseError(Schema) if a span leaves the text, a surface disagrees
// with the text, an unattached node is not UNLOCATABLE, or sentence breaks
// are not strictly increasing within the text.
void check_document(const Document& doc);

}  // namespace tdt

template <>
struct std::hash<tdt::NodeId> {
  std::size_t operator()(const tdt::NodeId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
