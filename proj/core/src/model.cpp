#include "tdt/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "tdt/errors.hpp"
#include "tdt/util.hpp"

namespace tdt {

bool operator<(const NodeId& a, const NodeId& b) noexcept {
  return natural_less(a.str(), b.str());
}

const char* to_string(TreeError::Kind kind) noexcept {
  switch (kind) {
    case TreeError::Kind::DuplicateId: return "DuplicateId";
    case TreeError::Kind::ReservedId: return "ReservedId";
    case TreeError::Kind::MissingNode: return "MissingNode";
    case TreeError::Kind::MultipleParents: return "MultipleParents";
    case TreeError::Kind::MissingParent: return "MissingParent";
    case TreeError::Kind::RootHasParent: return "RootHasParent";
    case TreeError::Kind::CycleDetected: return "CycleDetected";
    case TreeError::Kind::MissingMetaNode: return "MissingMetaNode";
  }
  return "?";
}

namespace {

constexpr std::array<const char*, 3> kNodeKindNames = {"meta", "timex", "event"};
constexpr std::array<const char*, 6> kMetaNames = {"ROOT",     "DCT",        "PRESENT_REF",
                                                   "PAST_REF", "FUTURE_REF", "ATEMPORAL"};
constexpr std::array<const char*, 4> kTimexNames = {"ABSOLUTE_CONCRETE", "RELATIVE_CONCRETE",
                                                    "VAGUE", "UNLOCATABLE"};
constexpr std::array<const char*, 8> kEventNames = {
    "EVENT",     "STATE",     "HABITUAL",         "ONGOING",
    "COMPLETED", "MODALIZED", "GENERIC_HABITUAL", "GENERIC_STATE"};
constexpr std::array<const char*, 5> kLabelNames = {"DEPEND_ON", "BEFORE", "AFTER", "OVERLAP",
                                                    "INCLUDES"};
constexpr std::array<const char*, 2> kGenreNames = {"news", "narrative"};

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<const char*, N>& names, std::string_view s) {
  for (std::size_t i = 0; i < N; ++i) {
    if (s == names[i]) return static_cast<E>(i);
  }
  return std::nullopt;
}

template <typename E, std::size_t N>
const char* name_of(const std::array<const char*, N>& names, E e) {
  const auto i = static_cast<std::size_t>(e);
  return i < N ? names[i] : "?";
}

}  // namespace

const char* to_string(NodeKind k) noexcept { return name_of(kNodeKindNames, k); }
const char* to_string(MetaNodeKind k) noexcept { return name_of(kMetaNames, k); }
const char* to_string(TimexClass c) noexcept { return name_of(kTimexNames, c); }
const char* to_string(EventClass c) noexcept { return name_of(kEventNames, c); }
const char* to_string(EdgeLabel l) noexcept { return name_of(kLabelNames, l); }
const char* to_string(Genre g) noexcept { return name_of(kGenreNames, g); }

std::optional<MetaNodeKind> meta_kind_from_id(std::string_view id) noexcept {
  return lookup<MetaNodeKind>(kMetaNames, id);
}
std::optional<TimexClass> timex_class_from_string(std::string_view s) noexcept {
  return lookup<TimexClass>(kTimexNames, s);
}
std::optional<EventClass> event_class_from_string(std::string_view s) noexcept {
  return lookup<EventClass>(kEventNames, s);
}
std::optional<EdgeLabel> edge_label_from_string(std::string_view s) noexcept {
  return lookup<EdgeLabel>(kLabelNames, s);
}
std::optional<Genre> genre_from_string(std::string_view s) noexcept {
  return lookup<Genre>(kGenreNames, s);
}

NodeId meta_id(MetaNodeKind k) { return NodeId(to_string(k)); }

bool is_reserved_id(std::string_view id) noexcept { return meta_kind_from_id(id).has_value(); }

NodeId id_of(const Node& node) {
  return std::visit(
      [](const auto& n) -> NodeId {
        if constexpr (std::is_same_v<std::decay_t<decltype(n)>, MetaNode>) {
          return meta_id(n.kind);
        } else {
          return n.id;
        }
      },
      node);
}

NodeKind kind_of(const Node& node) noexcept { return static_cast<NodeKind>(node.index()); }

std::optional<Span> span_of(const Node& node) noexcept {
  if (const auto* t = std::get_if<TimexNode>(&node)) return t->span;
  if (const auto* e = std::get_if<EventNode>(&node)) return e->span;
  return std::nullopt;
}

TemporalDependencyTree::TemporalDependencyTree()
    : TemporalDependencyTree(build_tree({}, {}, BuildOptions{.insert_meta = true})) {}

bool TemporalDependencyTree::contains(const NodeId& id) const noexcept {
  return index_.contains(id.str());
}

const Node* TemporalDependencyTree::find(const NodeId& id) const noexcept {
  const auto it = index_.find(id.str());
  return it == index_.end() ? nullptr : &nodes_[it->second];
}

std::size_t TemporalDependencyTree::index_of(const NodeId& id) const {
  const auto it = index_.find(id.str());
  if (it == index_.end()) throw UnknownNode(id.str());
  return it->second;
}

const Node& TemporalDependencyTree::node(const NodeId& id) const { return nodes_[index_of(id)]; }

const Edge* TemporalDependencyTree::parent_edge(const NodeId& id) const {
  const auto& e = parent_edge_[index_of(id)];
  return e ? &edges_[*e] : nullptr;
}

std::size_t TemporalDependencyTree::depth(const NodeId& id) const { return depth_[index_of(id)]; }

std::vector<NodeId> TemporalDependencyTree::children(const NodeId& id) const {
  index_of(id);
  std::vector<NodeId> out;
  for (const Edge& e : edges_) {
    if (e.parent == id) out.push_back(e.child);
  }
  return out;
}

TemporalDependencyTree build_tree(std::vector<Node> nodes, std::vector<Edge> edges,
                                  BuildOptions options) {
  using K = TreeError::Kind;

  if (options.insert_meta) {
    for (MetaNodeKind k : kMetaNodeKinds) {
      const bool present = std::any_of(nodes.begin(), nodes.end(),
                                       [&](const Node& n) { return is_meta(n, k); });
      if (!present) nodes.emplace_back(MetaNode{k});
    }
  }

  TemporalDependencyTree tree{TemporalDependencyTree::Unbuilt{}};
  std::sort(nodes.begin(), nodes.end(),
            [](const Node& a, const Node& b) { return id_of(a) < id_of(b); });

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeId id = id_of(nodes[i]);
    if (id.empty()) throw TreeError(K::MissingNode, "", "node with empty ID");
    if (kind_of(nodes[i]) != NodeKind::Meta && is_reserved_id(id.str())) {
      throw TreeError(K::ReservedId, id.str(),
                      "reserved ID '" + id.str() + "' used by a non-meta node");
    }
    if (!tree.index_.emplace(id.str(), i).second) {
      throw TreeError(K::DuplicateId, id.str(), "duplicate node ID '" + id.str() + "'");
    }
  }
  for (MetaNodeKind k : kMetaNodeKinds) {
    if (!tree.index_.contains(to_string(k))) {
      throw TreeError(K::MissingMetaNode, to_string(k),
                      std::string("missing meta node ") + to_string(k));
    }
  }

  if (options.insert_meta) {
    std::unordered_set<std::string> has_parent;
    for (const Edge& e : edges) has_parent.insert(e.child.str());
    for (MetaNodeKind k : kMetaNodeKinds) {
      if (k == MetaNodeKind::Root || has_parent.contains(to_string(k))) continue;
      edges.push_back(Edge{meta_id(k), meta_id(MetaNodeKind::Root), EdgeLabel::DependOn});
    }
  }

  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.child == b.child) return a.parent < b.parent;
    return a.child < b.child;
  });

  tree.parent_edge_.assign(nodes.size(), std::nullopt);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    for (const NodeId* end : {&e.child, &e.parent}) {
      if (!tree.index_.contains(end->str())) {
        throw TreeError(K::MissingNode, end->str(),
                        "edge " + e.child.str() + " -> " + e.parent.str() +
                            " references unknown node '" + end->str() + "'");
      }
    }
    if (e.child == meta_id(MetaNodeKind::Root)) {
      throw TreeError(K::RootHasParent, e.child.str(), "ROOT cannot have a parent");
    }
    if (e.child == e.parent) {
      throw TreeError(K::CycleDetected, e.child.str(),
                      "node '" + e.child.str() + "' is its own parent");
    }
    auto& slot = tree.parent_edge_[tree.index_.at(e.child.str())];
    if (slot) {
      throw TreeError(K::MultipleParents, e.child.str(),
                      "node '" + e.child.str() + "' has more than one parent");
    }
    slot = i;
  }

  const std::size_t root = tree.index_.at(to_string(MetaNodeKind::Root));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i != root && !tree.parent_edge_[i]) {
      const std::string id = id_of(nodes[i]).str();
      throw TreeError(K::MissingParent, id, "node '" + id + "' has no parent");
    }
  }

  // Depth by walking up with memoization; a walk that revisits a node on the
  // current stack is a cycle.
  constexpr std::size_t kUnknown = static_cast<std::size_t>(-1);
  constexpr std::size_t kOnStack = static_cast<std::size_t>(-2);
  tree.depth_.assign(nodes.size(), kUnknown);
  tree.depth_[root] = 0;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::size_t cur = i;
    while (tree.depth_[cur] == kUnknown) {
      tree.depth_[cur] = kOnStack;
      stack.push_back(cur);
      cur = tree.index_.at(edges[*tree.parent_edge_[cur]].parent.str());
    }
    if (tree.depth_[cur] == kOnStack) {
      const std::string id = id_of(nodes[cur]).str();
      throw TreeError(K::CycleDetected, id, "cycle through node '" + id + "'");
    }
    std::size_t d = tree.depth_[cur];
    while (!stack.empty()) {
      tree.depth_[stack.back()] = ++d;
      stack.pop_back();
    }
  }

  tree.nodes_ = std::move(nodes);
  tree.edges_ = std::move(edges);
  return tree;
}

std::vector<Edge> path_to_root(const TemporalDependencyTree& tree, const NodeId& node) {
  std::vector<Edge> path;
  path.reserve(tree.depth(node));
  const Edge* e = tree.parent_edge(node);
  while (e != nullptr) {
    path.push_back(*e);
    e = tree.parent_edge(e->parent);
  }
  return path;
}

NodeId lowest_common_ancestor(const TemporalDependencyTree& tree, const NodeId& a,
                              const NodeId& b) {
  NodeId x = a;
  NodeId y = b;
  std::size_t dx = tree.depth(x);
  std::size_t dy = tree.depth(y);
  while (dx > dy) {
    x = tree.parent_edge(x)->parent;
    --dx;
  }
  while (dy > dx) {
    y = tree.parent_edge(y)->parent;
    --dy;
  }
  while (x != y) {
    x = tree.parent_edge(x)->parent;
    y = tree.parent_edge(y)->parent;
  }
  return x;
}

std::size_t Document::text_length() const noexcept { return utf8::length(text); }

std::size_t Document::sentence_of(std::size_t offset) const noexcept {
  if (!sentence_breaks) return 0;
  const auto& b = *sentence_breaks;
  return static_cast<std::size_t>(std::upper_bound(b.begin(), b.end(), offset) - b.begin());
}

std::vector<Node> annotated_nodes(const Document& doc) {
  std::vector<Node> out;
  for (const Node& n : doc.tree.nodes()) {
    if (kind_of(n) != NodeKind::Meta) out.push_back(n);
  }
  for (const TimexNode& t : doc.unattached) out.emplace_back(t);
  std::sort(out.begin(), out.end(), [](const Node& a, const Node& b) { return id_of(a) < id_of(b); });
  return out;
}

void check_document(const Document& doc) {
  using PE = ParseError;
  const std::size_t len = doc.text_length();
  if (doc.sentence_breaks) {
    std::size_t prev = 0;
    for (std::size_t i = 0; i < doc.sentence_breaks->size(); ++i) {
      const std::size_t b = (*doc.sentence_breaks)[i];
      if (b <= prev || b > len) {
        throw PE(PE::Kind::Schema,
                 "sentence break " + std::to_string(b) +
                     " must be strictly increasing, positive and within the text",
                 "sentence_breaks[" + std::to_string(i) + "]");
      }
      prev = b;
    }
  }
  auto check_node = [&](const NodeId& id, const Span& span, const std::string& surface) {
    if (!(span.start < span.end && span.end <= len)) {
      throw PE(PE::Kind::Schema,
               "span [" + std::to_string(span.start) + "," + std::to_string(span.end) +
                   ") of node '" + id.str() + "' is empty or exceeds text length " +
                   std::to_string(len),
               "nodes." + id.str() + ".span");
    }
    if (surface != utf8::substr(doc.text, span.start, span.end)) {
      throw PE(PE::Kind::Schema, "surface of node '" + id.str() + "' does not match its span",
               "nodes." + id.str() + ".surface");
    }
  };
  for (const Node& n : doc.tree.nodes()) {
    if (const auto* t = std::get_if<TimexNode>(&n)) check_node(t->id, t->span, t->surface);
    if (const auto* e = std::get_if<EventNode>(&n)) check_node(e->id, e->span, e->surface);
  }
  for (const TimexNode& t : doc.unattached) {
    check_node(t.id, t.span, t.surface);
    if (t.cls != TimexClass::Unlocatable) {
      throw PE(PE::Kind::Schema, "node '" + t.id.str() + "' is outside the tree but not UNLOCATABLE",
               "nodes." + t.id.str());
    }
    if (doc.tree.contains(t.id)) {
      throw PE(PE::Kind::Invariant, "duplicate node ID '" + t.id.str() + "'",
               "nodes." + t.id.str());
    }
  }
}

}  // namespace tdt
