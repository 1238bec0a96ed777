#include <gtest/gtest.h>

#include "tdt/errors.hpp"
#include "tdt/model.hpp"

namespace tdt {
namespace {

EventNode event(const std::string& id, std::size_t start, EventClass cls = EventClass::Event) {
  return EventNode{NodeId(id), Span{start, start + 1}, "x", cls};
}

const NodeId kRoot = meta_id(MetaNodeKind::Root);
const NodeId kDct = meta_id(MetaNodeKind::Dct);

TEST(NodeId, NaturalOrder) {
  EXPECT_LT(NodeId("t2"), NodeId("t10"));
  EXPECT_FALSE(NodeId("t10") < NodeId("t2"));
}

TEST(Tree, DefaultIsMinimal) {
  const TemporalDependencyTree tree;
  EXPECT_EQ(tree.size(), 6u);
  EXPECT_EQ(tree.edges().size(), 5u);
  EXPECT_EQ(tree.parent_edge(kRoot), nullptr);
  EXPECT_EQ(tree.parent_edge(kDct)->parent, kRoot);
  EXPECT_EQ(tree.depth(kDct), 1u);
}

TEST(Tree, InsertsMetaNodesOnRequest) {
  const auto tree = build_tree({event("e1", 0)}, {Edge{NodeId("e1"), kDct, EdgeLabel::Overlap}},
                               BuildOptions{.insert_meta = true});
  EXPECT_EQ(tree.size(), 7u);
  EXPECT_EQ(tree.depth(NodeId("e1")), 2u);
  EXPECT_THROW(build_tree({event("e1", 0)}, {Edge{NodeId("e1"), kDct, EdgeLabel::Overlap}}),
               TreeError);
}

TreeError::Kind failure(std::vector<Node> nodes, std::vector<Edge> edges) {
  try {
    build_tree(std::move(nodes), std::move(edges), BuildOptions{.insert_meta = true});
  } catch (const TreeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no TreeError";
  return TreeError::Kind::DuplicateId;
}

TEST(Tree, StructuralErrors) {
  const NodeId e1("e1");
  const NodeId e2("e2");
  EXPECT_EQ(failure({event("e1", 0), event("e1", 2)}, {}), TreeError::Kind::DuplicateId);
  EXPECT_EQ(failure({event("DCT", 0)}, {}), TreeError::Kind::ReservedId);
  EXPECT_EQ(failure({event("e1", 0)}, {Edge{e1, NodeId("nope"), EdgeLabel::Before}}),
            TreeError::Kind::MissingNode);
  EXPECT_EQ(failure({event("e1", 0)}, {Edge{e1, kDct, EdgeLabel::Before}, Edge{e1, kRoot, EdgeLabel::Before}}),
            TreeError::Kind::MultipleParents);
  EXPECT_EQ(failure({event("e1", 0)}, {}), TreeError::Kind::MissingParent);
  EXPECT_EQ(failure({}, {Edge{kRoot, kDct, EdgeLabel::DependOn}}), TreeError::Kind::RootHasParent);
  EXPECT_EQ(failure({event("e1", 0), event("e2", 2)},
                    {Edge{e1, e2, EdgeLabel::Before}, Edge{e2, e1, EdgeLabel::Before}}),
            TreeError::Kind::CycleDetected);
}

TEST(Tree, PathsAndAncestors) {
  const NodeId e1("e1"), e2("e2"), e3("e3");
  const auto tree = build_tree(
      {event("e1", 0), event("e2", 2), event("e3", 4)},
      {Edge{e1, kDct, EdgeLabel::Overlap}, Edge{e2, e1, EdgeLabel::Before}, Edge{e3, e1, EdgeLabel::Before}},
      BuildOptions{.insert_meta = true});
  EXPECT_EQ(path_to_root(tree, e2).size(), 3u);
  EXPECT_EQ(lowest_common_ancestor(tree, e2, e3), e1);
  EXPECT_EQ(lowest_common_ancestor(tree, e2, e1), e1);
  EXPECT_EQ(lowest_common_ancestor(tree, e2, meta_id(MetaNodeKind::PastRef)), kRoot);
  EXPECT_EQ(tree.children(e1), (std::vector<NodeId>{e2, e3}));
  EXPECT_THROW(tree.node(NodeId("zz")), UnknownNode);
}

TEST(Document, SentenceOf) {
  Document d;
  d.text = "Ab. Cd. Ef.";
  d.sentence_breaks = std::vector<std::size_t>{3, 7, 11};
  EXPECT_EQ(d.sentence_of(0), 0u);
  EXPECT_EQ(d.sentence_of(2), 0u);
  EXPECT_EQ(d.sentence_of(3), 1u);
  EXPECT_EQ(d.sentence_of(8), 2u);
  d.sentence_breaks.reset();
  EXPECT_EQ(d.sentence_of(8), 0u);
}

TEST(Enums, NamesRoundTrip) {
  for (TimexClass c : kTimexClasses) EXPECT_EQ(timex_class_from_string(to_string(c)), c);
  for (EventClass c : kEventClasses) EXPECT_EQ(event_class_from_string(to_string(c)), c);
  for (EdgeLabel l : kEdgeLabels) EXPECT_EQ(edge_label_from_string(to_string(l)), l);
  for (MetaNodeKind k : kMetaNodeKinds) EXPECT_EQ(meta_kind_from_id(to_string(k)), k);
  EXPECT_FALSE(event_class_from_string("PUNCTUAL"));
  EXPECT_TRUE(is_eventive(EventClass::Event));
  EXPECT_FALSE(is_eventive(EventClass::Completed));
}

}  // namespace
}  // namespace tdt
