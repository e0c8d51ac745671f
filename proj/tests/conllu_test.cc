#include "corefkit/conllu.h"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "corefkit/entities.h"
#include "test_util.h"

namespace corefkit {
namespace {

using testing::DataPath;
using testing::Line;
using testing::NewDoc;
using testing::Parse;
using testing::Sent;

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> SpanStrings(const Document &doc, const Entity &entity) {
  std::vector<std::string> out;
  for (const Mention &m : entity.mentions) out.push_back(SpanIds(doc, m.span));
  return out;
}

TEST(ParseConllu, EmptyStreamHasNoDocuments) {
  Corpus corpus = Parse("");
  EXPECT_TRUE(corpus.documents.empty());
}

TEST(ParseConllu, NestedMentions) {
  const std::string text =
      NewDoc("d") +
      Sent("1", {Line("1", "The", "DET", "2", "det", "Entity=(e1-thing-2"),
                 Line("2", "roof", "NOUN", "0", "root"),
                 Line("3", "of", "ADP", "5", "case"),
                 Line("4", "the", "DET", "5", "det", "Entity=(e2-thing-2"),
                 Line("5", "house", "NOUN", "2", "nmod", "Entity=e2)e1)")}) +
      Sent("2", {Line("1", "Rain", "NOUN", "0", "root")});
  Corpus corpus = Parse(text);
  ASSERT_EQ(corpus.documents.size(), 1u);
  const Document &doc = corpus.documents[0];
  ASSERT_EQ(doc.entities.size(), 2u);
  EXPECT_EQ(doc.MentionCount(), 2);
  const Mention &outer = doc.entities[0].mentions[0];
  const Mention &inner = doc.entities[1].mentions[0];
  EXPECT_EQ(outer.entity_id, "e1");
  EXPECT_EQ(SpanIds(doc, outer.span), "1,2,3,4,5");
  EXPECT_EQ(SpanIds(doc, inner.span), "4,5");
  EXPECT_TRUE(std::includes(outer.span.begin(), outer.span.end(),
                            inner.span.begin(), inner.span.end()));
  EXPECT_LT(inner.size(), outer.size());
}

TEST(ParseConllu, NoEntityAnnotation) {
  Corpus corpus = Parse(NewDoc("d") + Sent("1", {Line("1", "Hi", "INTJ", "0", "root")}));
  ASSERT_EQ(corpus.documents.size(), 1u);
  EXPECT_TRUE(corpus.documents[0].entities.empty());
}

TEST(ParseConllu, SingleTokenMention) {
  const std::string text =
      NewDoc("d") + Sent("1", {Line("1", "I", "PRON", "2", "nsubj"),
                               Line("2", "saw", "VERB", "0", "root"),
                               Line("3", "the", "DET", "4", "det"),
                               Line("4", "cat", "NOUN", "2", "obj", "Entity=(e5-animal-1)")});
  const Document doc = Parse(text).documents[0];
  ASSERT_EQ(doc.entities.size(), 1u);
  EXPECT_TRUE(doc.entities[0].singleton());
  EXPECT_EQ(SpanIds(doc, doc.entities[0].mentions[0].span), "4");
}

TEST(ParseConllu, SameTokenOpenAndCloseWithOverlap) {
  // e1 covers 1-2, e2 covers 2-3: crossing spans.
  const std::string text =
      NewDoc("d") +
      Sent("1", {Line("1", "a", "NOUN", "0", "root", "Entity=(e1-x-1"),
                 Line("2", "b", "NOUN", "1", "nmod", "Entity=e1)(e2-x-1"),
                 Line("3", "c", "NOUN", "2", "nmod", "Entity=e2)")});
  const Document doc = Parse(text).documents[0];
  ASSERT_EQ(doc.entities.size(), 2u);
  EXPECT_EQ(SpanIds(doc, doc.entities[0].mentions[0].span), "1,2");
  EXPECT_EQ(SpanIds(doc, doc.entities[1].mentions[0].span), "2,3");
}

TEST(ParseConllu, DiscontinuousMentionOmitsGap) {
  Corpus corpus = LoadCorpus(DataPath("discontinuous.conllu"));
  const Document &doc = corpus.documents[0];
  ASSERT_EQ(doc.entities.size(), 1u);
  const Mention &m = doc.entities[0].mentions[0];
  EXPECT_EQ(m.parts, 2);
  EXPECT_EQ(SpanIds(doc, m.span), "1,2+5");
  EXPECT_EQ(m.head.id.word, 2);
}

TEST(ParseConllu, EmptyNodesAndMultiwordTokens) {
  Corpus corpus = LoadCorpus(DataPath("basic.conllu"));
  ASSERT_EQ(corpus.documents.size(), 2u);
  const Document &doc = corpus.documents[1];
  const Sentence &s = doc.sentences[0];
  ASSERT_EQ(s.multiword.size(), 1u);
  EXPECT_EQ(s.multiword[0].first, 2);
  EXPECT_EQ(s.multiword[0].last, 3);
  EXPECT_EQ(s.SurfaceTokenCount(), 6);
  EXPECT_EQ(s.tokens.size(), 7u);
  EXPECT_TRUE(s.tokens[1].is_empty());
  EXPECT_EQ(s.tokens[1].id.ToString(), "1.1");
  // The zero-pronoun mention is the empty node alone.
  const Mention &zero = doc.entities[0].mentions[0];
  ASSERT_EQ(zero.size(), 1);
  EXPECT_TRUE(zero.head.id.is_empty());
  EXPECT_EQ(Serialize(corpus).find("1.1\t_\t_\tPRON") != std::string::npos, true);
}

TEST(ParseConllu, DocumentsSplitAtNewdoc) {
  Corpus corpus = LoadCorpus(DataPath("basic.conllu"));
  EXPECT_EQ(corpus.dataset, "basic");
  ASSERT_EQ(corpus.documents.size(), 2u);
  EXPECT_EQ(corpus.documents[0].doc_id, "d1_news_1");
  EXPECT_EQ(corpus.documents[1].doc_id, "d2_blog_1");
  EXPECT_EQ(corpus.EntityCount(), 6);
  EXPECT_EQ(corpus.MentionCount(), 10);
}

TEST(ParseConllu, SentencesBeforeNewdocFormUnnamedDocument) {
  Corpus corpus = Parse(Sent("1", {Line("1", "Hi", "INTJ", "0", "root")}));
  ASSERT_EQ(corpus.documents.size(), 1u);
  EXPECT_EQ(corpus.documents[0].doc_id, "");
}

TEST(Serialize, CanonicalFixturesRoundTripByteIdentical) {
  for (const char *name : {"basic.conllu", "discontinuous.conllu",
                           "pred/basic.conllu"}) {
    const std::string original = ReadFile(DataPath(name));
    std::istringstream in(original);
    Corpus corpus = ParseConllu(in, {});
    EXPECT_EQ(Serialize(corpus), original) << name;
  }
}

TEST(Serialize, NonCanonicalInputIsStructurallyStable) {
  std::string text = ReadFile(DataPath("basic.conllu"));
  std::string crlf;
  for (char c : text) {
    if (c == '\n') crlf += " \r\n";
    else crlf += c;
  }
  crlf += "\n\n";
  Corpus first = Parse(crlf);
  Corpus second = Parse(Serialize(first));
  EXPECT_EQ(first, second);
  EXPECT_EQ(Serialize(second), Serialize(Parse(text)));
}

TEST(ParseConllu, RejectsWrongColumnCount) {
  const std::string text = NewDoc("d") + "# sent_id = 1\n1\tHi\tHi\tINTJ\n\n";
  try {
    Parse(text);
    FAIL();
  } catch (const DataError &e) {
    EXPECT_EQ(e.file(), "toy.conllu");
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(ParseConllu, RejectsNonMonotonicIds) {
  const std::string text =
      NewDoc("d") + Sent("1", {Line("1", "a", "X", "0", "root"),
                               Line("3", "b", "X", "1", "dep"),
                               Line("2", "c", "X", "1", "dep")});
  EXPECT_THROW(Parse(text), DataError);
}

TEST(ParseConllu, RejectsHeadOutsideSentence) {
  const std::string text =
      NewDoc("d") + Sent("1", {Line("1", "a", "X", "0", "root"),
                               Line("2", "b", "X", "7", "dep")});
  EXPECT_THROW(Parse(text), DataError);
}

TEST(ParseConllu, RejectsCloseWithoutOpen) {
  const std::string text =
      NewDoc("d") + Sent("1", {Line("1", "a", "X", "0", "root", "Entity=e1)")});
  EXPECT_THROW(Parse(text), DataError);
}

TEST(ParseConllu, UnclosedMentionNamesEntityAndSentence) {
  const std::string text =
      NewDoc("d") + Sent("s-7", {Line("1", "a", "X", "0", "root", "Entity=(e9-x-1")});
  try {
    Parse(text);
    FAIL();
  } catch (const DataError &e) {
    const std::string message = e.what();
    EXPECT_NE(message.find("e9"), std::string::npos) << message;
    EXPECT_NE(message.find("s-7"), std::string::npos) << message;
  }
}

TEST(ParseConllu, DuplicateSentIdIsOnlyAWarning) {
  const std::string text =
      NewDoc("d") + Sent("1", {Line("1", "a", "X", "0", "root")}) +
      Sent("1", {Line("1", "b", "X", "0", "root")});
  Diagnostics diagnostics;
  ParseOptions options;
  Corpus corpus = ParseConllu(std::string_view(text), options, &diagnostics);
  EXPECT_EQ(corpus.documents[0].sentences.size(), 2u);
  EXPECT_EQ(diagnostics.warnings.size(), 1u);
}

TEST(ParseConllu, MissingDiscontinuousPartIsAnError) {
  const std::string text =
      NewDoc("d") + Sent("1", {Line("1", "a", "X", "0", "root", "Entity=(e1[1/2]-x-1)"),
                               Line("2", "b", "X", "1", "dep")});
  EXPECT_THROW(Parse(text), DataError);
}

TEST(EntityValue, SplitsBrackets) {
  std::vector<Bracket> b = ParseEntityValue("(e1-person-1(e2-place-2)e3)");
  ASSERT_EQ(b.size(), 3u);
  EXPECT_TRUE(b[0].open);
  EXPECT_FALSE(b[0].close);
  EXPECT_EQ(b[0].entity_id, "e1");
  EXPECT_TRUE(b[1].open && b[1].close);
  EXPECT_EQ(b[1].fields, (std::vector<std::string>{"place", "2"}));
  EXPECT_TRUE(b[2].close && !b[2].open);
  EXPECT_EQ(b[2].entity_id, "e3");
}

TEST(DatasetFromPath, FollowsReleaseNaming) {
  DatasetName name = DatasetFromPath("x/ca_ancora-corefud-train.conllu");
  EXPECT_EQ(name.dataset, "ca_ancora");
  EXPECT_EQ(name.language, "ca");
  EXPECT_EQ(name.split, "train");
}

TEST(FindConlluFiles, RecursiveSortedAndSplitFiltered) {
  auto files = FindConlluFiles(COREFKIT_TEST_DATA);
  ASSERT_GE(files.size(), 3u);
  EXPECT_TRUE(std::is_sorted(files.begin(), files.end()));
  EXPECT_TRUE(FindConlluFiles(COREFKIT_TEST_DATA, "train").empty());
}

}  // namespace
}  // namespace corefkit
