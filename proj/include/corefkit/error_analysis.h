// Diagnosis of gold entities a system fails to resolve.
//
// The analysis narrows step by step: unresolved entities (A), the
// two-mention ones among them (B), their undetected mentions (C), and the
// length and modification profile of those mentions (D, E, F). Two-mention
// entities whose mentions were both detected feed the missing-link profile.

#ifndef COREFKIT_ERROR_ANALYSIS_H_
#define COREFKIT_ERROR_ANALYSIS_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corefkit/alignment.h"
#include "corefkit/analysis.h"
#include "corefkit/document.h"
#include "corefkit/report.h"

namespace corefkit {

enum class UnresolvedRule {
  // No system cluster holds matches of two or more of the entity's mentions.
  kNoRecoveredLink,
  // None of the entity's mentions is matched at all.
  kNoDetectedMention,
};

// Non-singleton gold entities (indices into gold.entities) the system leaves
// unresolved.
std::vector<int> UnresolvedEntities(const Document &gold, const Document &pred,
                                    const Alignment &alignment,
                                    UnresolvedRule rule = UnresolvedRule::kNoRecoveredLink);

inline constexpr int kDistanceBuckets = 4;  // 0, 1, 2, 3+ sentences apart

// Exact tallies; merge by addition across documents and datasets.
struct ErrorTallies {
  int64_t gold_entities = 0;  // non-singleton
  int64_t unresolved = 0;
  int64_t two_mention = 0;
  int64_t two_mention_mentions = 0;
  int64_t undetected = 0;
  int64_t undetected_short = 0;        // <= 2 tokens
  int64_t undetected_premodified = 0;
  int64_t undetected_tokens = 0;
  std::array<int64_t, kMentionTypes.size()> undetected_types{};
  // Two-mention unresolved entities with both mentions detected.
  int64_t missing_links = 0;
  std::array<int64_t, kDistanceBuckets> distance{};
  std::map<std::pair<MentionType, MentionType>, int64_t> type_pairs;
  // Keyed by the second mention's type (NominalNoun or OvertPronoun).
  std::map<MentionType, CategoryCounts> antecedent_categories;

  ErrorTallies &operator+=(const ErrorTallies &other);
};

// Details of one unresolved entity for the JSON dump.
struct UnresolvedEntity {
  std::string doc_id;
  std::string entity_id;
  std::vector<std::string> spans;  // "sentence:ids"
  std::vector<bool> detected;
  std::string diagnosis;
};

struct ErrorAnalysisOptions {
  MatchMode mode = MatchMode::kExact;
  UnresolvedRule rule = UnresolvedRule::kNoRecoveredLink;
};

// Adds one aligned document pair to `tallies`; appends details when
// `details` is given.
void AnalyzeDocumentErrors(const Document &gold, const Document &pred,
                           const ErrorAnalysisOptions &options,
                           ErrorTallies *tallies,
                           std::vector<UnresolvedEntity> *details = nullptr);

ErrorTallies AnalyzeErrors(const Corpus &gold, const Corpus &pred,
                           const ErrorAnalysisOptions &options,
                           std::vector<UnresolvedEntity> *details = nullptr);

struct ErrorReport {
  std::string dataset;
  ErrorTallies tallies;

  ReportRow a_unresolved() const;
  ReportRow b_two_mention() const;
  ReportRow c_undetected() const;
  ReportRow d_short() const;
  ReportRow e_premodified() const;
  ReportRow f_average_length() const;

  // Columns A-F followed by the figure breakdowns.
  DatasetReport ToDatasetReport() const;
};

// TSV with one row per dataset: dataset, A, B, C, D, E, F.
std::string ErrorTableTsv(const std::vector<ErrorReport> &reports);

}  // namespace corefkit

#endif  // COREFKIT_ERROR_ANALYSIS_H_
