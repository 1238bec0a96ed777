#pragma once

#include <string>

#include "tdt/model.hpp"

// A narrative document whose events form one BEFORE chain of length n.
inline tdt::Document chain_document(std::size_t n) {
  using namespace tdt;
  Document d;
  d.id = "chain";
  d.genre = Genre::Narrative;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t start = d.text.size();
    d.text += "went ";
    const NodeId id("e" + std::to_string(i));
    nodes.emplace_back(EventNode{id, Span{start, start + 4}, "went", EventClass::Event});
    edges.push_back(i == 1 ? Edge{id, meta_id(MetaNodeKind::PastRef), EdgeLabel::Overlap}
                           : Edge{id, NodeId("e" + std::to_string(i - 1)), EdgeLabel::Before});
  }
  d.tree = build_tree(std::move(nodes), std::move(edges), BuildOptions{.insert_meta = true});
  return d;
}
