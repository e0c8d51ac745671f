#include "corefkit/error_analysis.h"

#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "test_util.h"

namespace corefkit {
namespace {

using testing::DataPath;
using testing::Line;
using testing::NewDoc;
using testing::Parse;

// "the big cat saw it"; misc per token.
std::string S(const std::string &id, const std::array<std::string, 5> &m) {
  return testing::Sent(id, {Line("1", "the", "DET", "3", "det", m[0]),
                            Line("2", "big", "ADJ", "3", "amod", m[1]),
                            Line("3", "cat", "NOUN", "4", "nsubj", m[2]),
                            Line("4", "saw", "VERB", "0", "root", m[3]),
                            Line("5", "it", "PRON", "4", "obj", m[4])});
}

const std::string _ = "_";

Document Doc(const std::string &sentences) {
  return Parse(NewDoc("d") + sentences).documents[0];
}

std::string Blank(int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += S(std::to_string(i), {_, _, _, _, _});
  return out;
}

ErrorReport Analyze(const Document &gold, const Document &pred,
                    ErrorAnalysisOptions options = {}) {
  ErrorReport report;
  report.dataset = "toy";
  AnalyzeDocumentErrors(gold, pred, options, &report.tallies);
  return report;
}

double Pct(const ReportRow &row) { return row.value() ? *row.value() : NAN; }

TEST(ErrorAnalysis, IdentityHasNoUnresolvedEntities) {
  const Corpus corpus = LoadCorpus(DataPath("basic.conllu"));
  ErrorReport report{"basic", AnalyzeErrors(corpus, corpus, {})};
  EXPECT_EQ(report.tallies.unresolved, 0);
  EXPECT_DOUBLE_EQ(Pct(report.a_unresolved()), 0.0);
  for (const ReportRow &row : {report.b_two_mention(), report.c_undetected(),
                               report.d_short(), report.e_premodified(),
                               report.f_average_length()}) {
    EXPECT_EQ(row.Rendered(), "n/a") << row.key;
  }
}

TEST(ErrorAnalysis, MentionsSplitAcrossClustersAreUnresolved) {
  Document gold = Doc(S("1", {"Entity=(e1-x-3", _, "Entity=e1)", _, "Entity=(e1-x-1)"}));
  Document pred = Doc(S("1", {"Entity=(e7-x-3", _, "Entity=e7)", _, "Entity=(e8-x-1)"}));
  Alignment alignment = AlignMentions(gold, pred, MatchMode::kExact);
  EXPECT_EQ(UnresolvedEntities(gold, pred, alignment), std::vector<int>{0});
  // Both mentions are detected, so the alternate rule keeps it resolved.
  EXPECT_TRUE(UnresolvedEntities(gold, pred, alignment,
                                 UnresolvedRule::kNoDetectedMention)
                  .empty());
}

TEST(ErrorAnalysis, TwoOfTwoAndThreeMentionEntities) {
  Document gold =
      Doc(S("1", {_, "Entity=(e1-x-2", "Entity=e1)", _, _}) +
          S("2", {_, _, _, _, "Entity=(e1-x-1)"}) +
          S("3", {_, "Entity=(e2-x-2", "Entity=e2)", _, "Entity=(e2-x-1)"}) +
          S("4", {_, _, _, _, "Entity=(e2-x-1)"}));
  ErrorReport report = Analyze(gold, Doc(Blank(4)));
  EXPECT_DOUBLE_EQ(Pct(report.a_unresolved()), 100.0);
  EXPECT_DOUBLE_EQ(Pct(report.b_two_mention()), 50.0);
  EXPECT_DOUBLE_EQ(Pct(report.c_undetected()), 100.0);
  // Undetected: "big cat" (head-final, 2 tokens) and "it".
  EXPECT_DOUBLE_EQ(Pct(report.d_short()), 100.0);
  EXPECT_DOUBLE_EQ(Pct(report.e_premodified()), 50.0);
  EXPECT_DOUBLE_EQ(Pct(report.f_average_length()), 1.5);
}

TEST(ErrorAnalysis, OneOfFourMentionsDetected) {
  Document gold = Doc(S("1", {_, _, "Entity=(e1-x-1)", _, _}) +
                      S("2", {_, _, _, _, "Entity=(e1-x-1)"}) +
                      S("3", {_, _, "Entity=(e2-x-1)", _, _}) +
                      S("4", {_, _, _, _, "Entity=(e2-x-1)"}));
  Document pred = Doc(S("1", {_, _, _, _, _}) + S("2", {_, _, _, _, "Entity=(e9-x-1)"}) +
                      Blank(2));
  ErrorReport report = Analyze(gold, pred);
  EXPECT_EQ(report.tallies.two_mention_mentions, 4);
  EXPECT_DOUBLE_EQ(Pct(report.c_undetected()), 75.0);
}

TEST(ErrorAnalysis, UndetectedHeadFinalMention) {
  Document gold = Doc(S("1", {"Entity=(e1-x-3", _, "Entity=e1)", _, _}) +
                      S("2", {_, _, _, _, "Entity=(e1-x-1)"}));
  Document pred = Doc(S("1", {_, _, _, _, _}) + S("2", {_, _, _, _, "Entity=(e1-x-1)"}));
  ErrorReport report = Analyze(gold, pred);
  EXPECT_EQ(report.tallies.undetected, 1);
  EXPECT_DOUBLE_EQ(Pct(report.d_short()), 0.0);
  EXPECT_DOUBLE_EQ(Pct(report.e_premodified()), 100.0);
  EXPECT_DOUBLE_EQ(Pct(report.f_average_length()), 3.0);
  EXPECT_EQ(report.tallies.undetected_types[static_cast<int>(MentionType::kNominalNoun)], 1);
}

TEST(ErrorAnalysis, MissingLinkProfile) {
  // Both mentions in one sentence, detected but not linked.
  Document gold = Doc(Blank(5) + S("5", {"Entity=(e1-x-3", _, "Entity=e1)", _, "Entity=(e1-x-1)"}));
  Document pred = Doc(Blank(5) + S("5", {"Entity=(e7-x-3", _, "Entity=e7)", _, "Entity=(e8-x-1)"}));
  ErrorReport report = Analyze(gold, pred);
  EXPECT_EQ(report.tallies.missing_links, 1);
  EXPECT_EQ(report.tallies.distance[0], 1);
  EXPECT_EQ((report.tallies.type_pairs.at({MentionType::kNominalNoun,
                                           MentionType::kOvertPronoun})),
            1);
  const CategoryCounts &counts =
      report.tallies.antecedent_categories.at(MentionType::kOvertPronoun);
  EXPECT_EQ(counts[static_cast<int>(UdCategory::kS)], 1);
  DatasetReport rows = report.ToDatasetReport();
  EXPECT_DOUBLE_EQ(*rows.Find("distance.0")->value(), 100.0);
  EXPECT_EQ(rows.Find("antecedent_category.OvertPronoun.S")->numerator, 1);
}

TEST(ErrorAnalysis, DistanceBucketsCapAtThree) {
  Document gold = Doc(S("0", {_, _, "Entity=(e1-x-1)", _, _}) + Blank(5) +
                      S("6", {_, _, _, _, "Entity=(e1-x-1)"}));
  Document pred = Doc(S("0", {_, _, "Entity=(e1-x-1)", _, _}) + Blank(5) +
                      S("6", {_, _, _, _, "Entity=(e2-x-1)"}));
  ErrorReport report = Analyze(gold, pred);
  EXPECT_EQ(report.tallies.distance[3], 1);
}

TEST(ErrorAnalysis, EmptySystemLeavesEverythingUnresolved) {
  const Corpus gold = LoadCorpus(DataPath("basic.conllu"));
  Corpus empty = gold;
  for (Document &doc : empty.documents) doc.entities.clear();
  ErrorReport report{"basic", AnalyzeErrors(gold, empty, {})};
  EXPECT_DOUBLE_EQ(Pct(report.a_unresolved()), 100.0);
  EXPECT_EQ(report.tallies.undetected + 0, report.tallies.two_mention_mentions);
}

TEST(ErrorAnalysis, FixturePair) {
  const Corpus gold = LoadCorpus(DataPath("basic.conllu"));
  const Corpus pred = LoadCorpus(DataPath("pred/basic.conllu"));
  std::vector<UnresolvedEntity> details;
  ErrorReport report{"basic", AnalyzeErrors(gold, pred, {}, &details)};
  EXPECT_EQ(ErrorTableTsv({report}),
            "dataset\tA\tB\tC\tD\tE\tF\n"
            "basic\t50.00\t100.00\t50.00\t0.00\t50.00\t3.00\n");
  ASSERT_EQ(details.size(), 2u);
  EXPECT_EQ(details[0].entity_id, "e2");
  EXPECT_EQ(details[0].detected, (std::vector<bool>{false, true}));
  // Head matching recovers the shortened span, leaving only e2.
  ErrorReport head{"basic", AnalyzeErrors(gold, pred, {MatchMode::kHead})};
  EXPECT_EQ(head.tallies.unresolved, 1);
}

TEST(ErrorAnalysis, InvariantToClusterIdRenaming) {
  const Corpus gold = LoadCorpus(DataPath("basic.conllu"));
  const Corpus pred = LoadCorpus(DataPath("pred/basic.conllu"));
  Corpus renamed = pred;
  for (Document &doc : renamed.documents) {
    for (Entity &entity : doc.entities) {
      entity.entity_id = "z" + entity.entity_id;
      for (Mention &m : entity.mentions) m.entity_id = entity.entity_id;
    }
  }
  ErrorReport a{"x", AnalyzeErrors(gold, pred, {})};
  ErrorReport b{"x", AnalyzeErrors(gold, renamed, {})};
  EXPECT_EQ(ReportsToTsv({a.ToDatasetReport()}), ReportsToTsv({b.ToDatasetReport()}));
}

}  // namespace
}  // namespace corefkit
