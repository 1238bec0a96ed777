#include <gtest/gtest.h>

#include <random>

#include "tdt/errors.hpp"
#include "tdt/format.hpp"
#include "testing.hpp"

namespace tdt {
namespace {

constexpr const char* kMinimal = R"({"id":"d","genre":"news","text":"He left.","nodes":[
  {"id":"e1","kind":"event","span":[3,7],"class":"EVENT","surface":"left"}],
  "edges":[{"child":"e1","parent":"DCT","label":"OVERLAP"}]})";

ParseError parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError(ParseError::Kind::Syntax, "");
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

TEST(Parse, MinimalDocumentGetsMetaNodes) {
  const Document d = parse_document(kMinimal);
  EXPECT_EQ(d.tree.size(), 7u);
  EXPECT_EQ(d.tree.edges().size(), 6u);
  EXPECT_EQ(std::get<EventNode>(d.tree.node(NodeId("e1"))).surface, "left");
}

TEST(Parse, SyntaxErrorHasPosition) {
  const ParseError e = parse_error("{\n  \"id\": ,\n}");
  EXPECT_EQ(e.kind(), ParseError::Kind::Syntax);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_GT(e.column(), 0u);
}

TEST(Parse, SchemaErrorsNameTheField) {
  EXPECT_EQ(parse_error(replace(kMinimal, "\"news\"", "\"blog\"")).field(), "genre");
  EXPECT_EQ(parse_error(replace(kMinimal, "[3,7]", "[3,70]")).field(), "nodes[0].span");
  EXPECT_EQ(parse_error(replace(kMinimal, "\"left\"", "\"lift\"")).field(), "nodes[0].surface");
  const ParseError cls = parse_error(replace(kMinimal, "\"EVENT\"", "\"PUNCTUAL\""));
  EXPECT_EQ(cls.field(), "nodes[0].class");
  EXPECT_EQ(cls.node_id(), "e1");
  EXPECT_EQ(parse_error(replace(kMinimal, "\"id\":\"d\"", "\"id\":\"d\",\"extra\":1")).field(), "$.extra");
}

TEST(Parse, TreeErrorsBecomeInvariantViolations) {
  const std::string two = replace(kMinimal, "\"label\":\"OVERLAP\"}",
                                  "\"label\":\"OVERLAP\"},{\"child\":\"e1\",\"parent\":\"PAST_REF\",\"label\":\"BEFORE\"}");
  try {
    parse_document(two);
    FAIL();
  } catch (const InvariantViolation& e) {
    EXPECT_EQ(e.tree_kind(), TreeError::Kind::MultipleParents);
    EXPECT_EQ(e.node_id(), "e1");
  }
}

TEST(Parse, InvalidUtf8) {
  EXPECT_EQ(parse_error(replace(kMinimal, "He left.", "He \xff.")).kind(), ParseError::Kind::Encoding);
}

TEST(Parse, SemanticsMustFitClass) {
  const std::string doc = R"({"id":"d","genre":"news","text":"in 2003","nodes":[
    {"id":"t1","kind":"timex","span":[3,7],"class":"VAGUE","semantics":{"type":"absolute","value":"2003"}}],
    "edges":[{"child":"t1","parent":"PRESENT_REF","label":"DEPEND_ON"}]})";
  EXPECT_EQ(parse_error(doc).field(), "nodes[0].semantics");
}

TEST(Parse, UnlocatableWithoutEdgesStaysOutOfTree) {
  const Document d = testing::load_fixture("worked/takes_ten_minutes.json");
  ASSERT_EQ(d.unattached.size(), 1u);
  EXPECT_EQ(d.unattached[0].surface, "10 minutes");
  EXPECT_FALSE(d.tree.contains(NodeId("t1")));
}

TEST(Parse, CodePointSpans) {
  const std::string doc = R"({"id":"d","genre":"narrative","text":"他说了","nodes":[
    {"id":"e1","kind":"event","span":[1,2],"class":"EVENT","surface":"说"}],
    "edges":[{"child":"e1","parent":"PAST_REF","label":"OVERLAP"}]})";
  EXPECT_EQ(std::get<EventNode>(parse_document(doc).tree.node(NodeId("e1"))).surface, "说");
}

TEST(Markables, EdgesOptional) {
  const Markables m = parse_markables(R"({"id":"d","genre":"news","text":"He left.","nodes":[
    {"id":"e1","kind":"event","span":[3,7],"class":"EVENT"}]})");
  EXPECT_EQ(m.events.size(), 1u);
  EXPECT_EQ(m.header.tree, TemporalDependencyTree());
}

TEST(RoundTrip, FixturesAreCanonicalAndStable) {
  for (const char* dir : {"worked", "mutants"}) {
    for (const auto& path : testing::fixtures_in(dir)) {
      Document d;
      try {
        d = load_document(path);
      } catch (const ParseError&) {
        continue;  // mutants that break parsing on purpose
      }
      const std::string once = serialize_document(d);
      EXPECT_EQ(parse_document(once), d) << path;
      EXPECT_EQ(serialize_document(parse_document(once)), once) << path;
    }
  }
}

TEST(RoundTrip, RandomDocuments) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 96; ++i) {
    const Document d = testing::random_document(rng, {}, "r" + std::to_string(i));
    const std::string text = serialize_document(d);
    EXPECT_EQ(parse_document(text), d);
    EXPECT_EQ(serialize_document(d), text);
  }
}

TEST(Manifest, ParsesLinesAndComments) {
  const CorpusManifest m = CorpusManifest::parse("# comment\n\na.json\tnews\tann1\nsub/b.json\tnarrative\tann2\n", "/base");
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries[0].path, std::filesystem::path("/base/a.json"));
  EXPECT_EQ(m.entries[1].genre, Genre::Narrative);
  EXPECT_EQ(m.entries[1].annotator, "ann2");
  EXPECT_THROW(CorpusManifest::parse("a.json\tpoetry\tx\n", "/"), ParseError);
}

TEST(Corpus, PairsDoubleAnnotations) {
  std::mt19937_64 rng(3);
  const Corpus c = testing::random_corpus(rng, 5, 2);
  EXPECT_EQ(c.documents.size(), 7u);
  EXPECT_EQ(c.pairs.size(), 2u);
  EXPECT_EQ(c.distinct().size(), 5u);
  EXPECT_TRUE(c.is_double_annotated("gen0"));
  EXPECT_FALSE(c.is_double_annotated("gen4"));
}

TEST(Corpus, GenreMustMatchManifest) {
  std::mt19937_64 rng(3);
  Document d = testing::random_document(rng, {.genre = Genre::News});
  EXPECT_THROW(build_corpus({{ManifestEntry{"x.json", Genre::Narrative, "a"}, d}}), ParseError);
}

}  // namespace
}  // namespace tdt
