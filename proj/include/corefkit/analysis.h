// Corpus-level linguistic statistics over gold coreference annotation.
//
// Every statistic is reported as exact counts so reports of several
// datasets can be merged by summing numerators and denominators.

#ifndef COREFKIT_ANALYSIS_H_
#define COREFKIT_ANALYSIS_H_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "corefkit/document.h"
#include "corefkit/report.h"
#include "corefkit/taxonomy.h"
#include "corefkit/vectors.h"

namespace corefkit {

MentionType TypeOf(const Mention &mention, const Document &doc);

// Multi-token mention whose non-head tokens all precede the head.
bool IsPreModified(const Mention &mention);

// Rows: premodified.multi_token, premodified.all_mentions.
DatasetReport HeadPositionStats(const Corpus &corpus);

// Rows: mention_type.<Type> for all five types.
DatasetReport MentionTypeDistribution(const Corpus &corpus);

using CategoryCounts = std::array<int64_t, kUdCategories.size()>;
using CategoryRanking = std::vector<std::pair<UdCategory, int64_t>>;

// Nonzero categories by descending count, ties in category order.
CategoryRanking RankCategories(const CategoryCounts &counts);

// UD category of the closest antecedent of every non-first mention of
// `type`, counted per category.
CategoryCounts AnaphorAntecedentCounts(const Corpus &corpus, MentionType type);
CategoryRanking AnaphorAntecedentRanking(const Corpus &corpus, MentionType type);

// Rows: anaphor_antecedent.<Type>.<Letter> in ranked order per type.
DatasetReport AnaphorAntecedentReport(const Corpus &corpus);

// Over non-singleton entities. Rows: first_mention.longest,
// first_mention.nominal_or_proper.
DatasetReport FirstMentionStats(const Corpus &corpus);

// Rows: mentions_per_entity.with_singletons,
// mentions_per_entity.without_singletons.
DatasetReport EntitySizeStats(const Corpus &corpus);

enum class PronounKind { kOvert, kZero };

struct CompetingAntecedents {
  int64_t pronouns = 0;     // all mentions of the requested kind
  int64_t valid = 0;        // valid examinations
  int64_t competitors = 0;  // summed over valid examinations

  double valid_fraction() const;
  double mean_competitors() const;
};

CompetingAntecedents CompetingAntecedentStats(const Corpus &corpus,
                                              PronounKind kind);

// Rows: competing.<overt|zero>.valid, competing.<overt|zero>.mean_competitors.
DatasetReport CompetingAntecedentsReport(const Corpus &corpus);

inline constexpr char kDefaultGenrePattern[] = "^[^_]+_([^_]+)";

// First capture group of `pattern` on the document id, or "unknown".
std::string GenreOf(const std::string &doc_id, const std::string &pattern);

struct GenreRate {
  std::string genre;
  int64_t pronouns = 0;
  int64_t tokens = 0;

  double per_8000() const;
};

// Personal pronouns (PRON with PronType=Prs) per 8000 surface tokens, by
// genre in name order.
std::vector<GenreRate> GenrePronounFrequency(
    const Corpus &corpus, const std::string &pattern = kDefaultGenrePattern);

// Rows: pronouns_per_8000.<genre>.
DatasetReport GenreReport(const Corpus &corpus,
                          const std::string &pattern = kDefaultGenrePattern);

// Rows: documents, sentences, tokens, sentences_per_document,
// tokens_per_sentence, entities, mentions, mentions_per_entity.
DatasetReport CorpusStatistics(const Corpus &corpus);

struct DistanceStats {
  int64_t pairs = 0;
  double mean = 0.0;
  double variance = 0.0;  // population variance
};

// Euclidean distances over all unordered mention pairs within each entity.
// Throws DataError listing the mentions without a vector.
DistanceStats SemanticDistance(const Corpus &corpus,
                               const MentionVectors &vectors);
DatasetReport SemanticDistanceReport(const Corpus &corpus,
                                     const MentionVectors &vectors);

// Sums rows with equal keys across reports. Real-valued rows are dropped
// since they have no exact form to merge.
DatasetReport MergeReports(const std::string &name,
                           const std::vector<DatasetReport> &reports);

}  // namespace corefkit

#endif  // COREFKIT_ANALYSIS_H_
