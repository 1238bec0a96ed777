#include <gtest/gtest.h>

#include <random>

#include "tdt/baseline.hpp"
#include "tdt/errors.hpp"
#include "tdt/format.hpp"
#include "tdt/lexicon.hpp"
#include "tdt/validator.hpp"
#include "testing.hpp"

namespace tdt {
namespace {

ParserConfig demo() {
  ParserConfig c;
  c.lexicon = &Lexicon::demo();
  return c;
}

const Edge& parent_of(const Document& d, const char* id) { return *d.tree.parent_edge(NodeId(id)); }

TEST(Worked, NewsTimexesAndEvents) {
  const Document gold = testing::load_fixture("worked/thursday_8am.json");
  const Document pred = predict_tree(gold, demo());
  EXPECT_EQ(pred.tree, gold.tree);
  EXPECT_EQ(parent_of(pred, "t2").parent, NodeId("t1"));
  EXPECT_EQ(parent_of(pred, "e2").label, EdgeLabel::Includes);
}

TEST(Worked, NarrativeChain) {
  const Document gold = testing::load_fixture("worked/arrived_walked_began.json");
  const Document pred = predict_tree(gold, demo());
  EXPECT_EQ(pred.tree, gold.tree);
}

TEST(Worked, YearMonthNextYear) {
  // The heuristic takes the nearest concrete timex, where the annotators chose 2003.
  const Document pred = predict_tree(testing::load_fixture("worked/2003_march_next_year.json"), demo());
  EXPECT_EQ(parent_of(pred, "t1").parent, meta_id(MetaNodeKind::Root));
  EXPECT_EQ(parent_of(pred, "t2").parent, NodeId("t1"));
  EXPECT_EQ(parent_of(pred, "t3").parent, NodeId("t2"));
}

TEST(Worked, VagueAndUnlocatable) {
  EXPECT_EQ(parent_of(predict_tree(testing::load_fixture("worked/in_the_future.json"), demo()), "t1").parent,
            meta_id(MetaNodeKind::FutureRef));
  EXPECT_EQ(parent_of(predict_tree(testing::load_fixture("worked/once_upon_the_time.json"), demo()), "t1").parent,
            meta_id(MetaNodeKind::PastRef));
  const Document p = predict_tree(testing::load_fixture("worked/takes_ten_minutes.json"), demo());
  ASSERT_EQ(p.unattached.size(), 1u);
  EXPECT_FALSE(p.tree.contains(NodeId("t1")));
}

TEST(Worked, GenreDefaults) {
  const Document snowy = testing::load_fixture("worked/snowy_night.json");
  EXPECT_EQ(parent_of(predict_tree(snowy, demo()), "e1").parent, meta_id(MetaNodeKind::PastRef));
  ParserConfig news = demo();
  news.genre_mode = GenreMode::News;
  EXPECT_EQ(parent_of(predict_tree(snowy, news), "e1").parent, meta_id(MetaNodeKind::Dct));
}

TEST(Window, LimitsEventChains) {
  // Three sentences, one event each.
  const Markables m = parse_markables(R"({"id":"w","genre":"narrative","text":"He ran. Then. She sat.",
    "sentence_breaks":[7,13,22],
    "nodes":[{"id":"e1","kind":"event","span":[3,6],"class":"EVENT"},
             {"id":"e2","kind":"event","span":[18,21],"class":"EVENT"}]})");
  ParserConfig c;
  EXPECT_EQ(parent_of(predict_tree(m, c), "e2").parent, NodeId("e1"));
  c.window = 1;
  EXPECT_EQ(parent_of(predict_tree(m, c), "e2").parent, meta_id(MetaNodeKind::PastRef));
  c.window = 0;
  EXPECT_THROW(predict_tree(m, c), std::invalid_argument);
}

TEST(Stative, OverlapsPrecedingEvent) {
  const Markables m = parse_markables(R"({"id":"s","genre":"narrative","text":"He came and was tired.",
    "nodes":[{"id":"e1","kind":"event","span":[3,7],"class":"EVENT"},
             {"id":"e2","kind":"event","span":[12,15],"class":"STATE"}]})");
  const Document p = predict_tree(m);
  EXPECT_EQ(parent_of(p, "e2"), (Edge{NodeId("e2"), NodeId("e1"), EdgeLabel::Overlap}));
  EXPECT_TRUE(validate(p, ValidationMode::Strict).empty());
}

TEST(Input, OnlyMetaNodes) {
  const Markables m = parse_markables(R"({"id":"x","genre":"news","text":"Nothing here.","nodes":[]})");
  const Document p = predict_tree(m);
  EXPECT_EQ(p.tree.size(), 6u);
  EXPECT_EQ(p.tree.edges().size(), 5u);
}

TEST(Input, RelativeWithoutSemanticsOrDct) {
  const Markables m = parse_markables(R"({"id":"x","genre":"news","text":"Later it rained.",
    "nodes":[{"id":"t1","kind":"timex","span":[0,5],"class":"RELATIVE_CONCRETE"}]})");
  EXPECT_THROW(predict_tree(m), MissingSemantics);
  Markables dated = m;
  dated.header.dct = parse_calendar_value("2003-04-05");
  EXPECT_NO_THROW(predict_tree(dated));
}

TEST(Random, OutputIsStrictlyValidAndDeterministic) {
  std::mt19937_64 rng(200);
  for (int i = 0; i < 200; ++i) {
    Document d = testing::random_document(rng, {}, "b" + std::to_string(i));
    if (!d.dct) d.dct = parse_calendar_value("2000-01-01");
    const Document p = predict_tree(d, demo());
    for (const Diagnostic& x : validate(p, ValidationMode::Strict)) ADD_FAILURE() << format_diagnostic(d.id, x);
    EXPECT_EQ(annotated_nodes(p), annotated_nodes(d));
    EXPECT_EQ(serialize_document(predict_tree(d, demo())), serialize_document(p));
  }
}

TEST(Names, GenreModes) {
  EXPECT_EQ(genre_mode_from_string("narrative"), GenreMode::Narrative);
  EXPECT_FALSE(genre_mode_from_string("poetry"));
  EXPECT_STREQ(to_string(GenreMode::Auto), "auto");
}

}  // namespace
}  // namespace tdt
