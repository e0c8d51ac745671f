#include "corefkit/error_analysis.h"

#include <algorithm>

#include "corefkit/errors.h"

namespace corefkit {
namespace {

// Offset of each entity's first mention in ListMentions order.
std::vector<int> EntityOffsets(const Document &doc) {
  std::vector<int> offsets;
  int offset = 0;
  for (const Entity &entity : doc.entities) {
    offsets.push_back(offset);
    offset += entity.mentions.size();
  }
  return offsets;
}

}  // namespace

std::vector<int> UnresolvedEntities(const Document &gold, const Document &pred,
                                    const Alignment &alignment,
                                    UnresolvedRule rule) {
  const std::vector<int> offsets = EntityOffsets(gold);
  std::vector<int> unresolved;
  for (int e = 0; e < static_cast<int>(gold.entities.size()); ++e) {
    const Entity &entity = gold.entities[e];
    if (entity.singleton()) continue;
    std::map<int, int> per_cluster;
    int detected = 0;
    for (int m = 0; m < static_cast<int>(entity.mentions.size()); ++m) {
      const int p = alignment.gold_to_pred[offsets[e] + m];
      if (p < 0) continue;
      ++detected;
      ++per_cluster[alignment.pred_mentions[p].entity];
    }
    bool is_unresolved;
    if (rule == UnresolvedRule::kNoDetectedMention) {
      is_unresolved = detected == 0;
    } else {
      int best = 0;
      for (const auto &[cluster, n] : per_cluster) best = std::max(best, n);
      is_unresolved = best < 2;
    }
    if (is_unresolved) unresolved.push_back(e);
  }
  (void)pred;
  return unresolved;
}

ErrorTallies &ErrorTallies::operator+=(const ErrorTallies &other) {
  gold_entities += other.gold_entities;
  unresolved += other.unresolved;
  two_mention += other.two_mention;
  two_mention_mentions += other.two_mention_mentions;
  undetected += other.undetected;
  undetected_short += other.undetected_short;
  undetected_premodified += other.undetected_premodified;
  undetected_tokens += other.undetected_tokens;
  for (size_t i = 0; i < undetected_types.size(); ++i) {
    undetected_types[i] += other.undetected_types[i];
  }
  missing_links += other.missing_links;
  for (int i = 0; i < kDistanceBuckets; ++i) distance[i] += other.distance[i];
  for (const auto &[pair, n] : other.type_pairs) type_pairs[pair] += n;
  for (const auto &[type, counts] : other.antecedent_categories) {
    CategoryCounts &target = antecedent_categories[type];
    for (size_t i = 0; i < counts.size(); ++i) target[i] += counts[i];
  }
  return *this;
}

void AnalyzeDocumentErrors(const Document &gold, const Document &pred,
                           const ErrorAnalysisOptions &options,
                           ErrorTallies *tallies,
                           std::vector<UnresolvedEntity> *details) {
  const Alignment alignment = AlignMentions(gold, pred, options.mode);
  const std::vector<int> offsets = EntityOffsets(gold);
  for (const Entity &entity : gold.entities) {
    if (!entity.singleton()) ++tallies->gold_entities;
  }

  for (int e : UnresolvedEntities(gold, pred, alignment, options.rule)) {
    const Entity &entity = gold.entities[e];
    ++tallies->unresolved;
    std::vector<bool> detected;
    for (int m = 0; m < static_cast<int>(entity.mentions.size()); ++m) {
      detected.push_back(alignment.gold_to_pred[offsets[e] + m] >= 0);
    }
    const int detected_count = std::count(detected.begin(), detected.end(), true);
    std::string diagnosis;

    if (entity.mentions.size() == 2) {
      ++tallies->two_mention;
      tallies->two_mention_mentions += 2;
      for (int m = 0; m < 2; ++m) {
        if (detected[m]) continue;
        const Mention &mention = entity.mentions[m];
        ++tallies->undetected;
        if (mention.size() <= 2) ++tallies->undetected_short;
        if (IsPreModified(mention)) ++tallies->undetected_premodified;
        tallies->undetected_tokens += mention.size();
        ++tallies->undetected_types[static_cast<int>(TypeOf(mention, gold))];
      }
      if (detected_count == 2) {
        const Mention &first = entity.mentions[0];
        const Mention &second = entity.mentions[1];
        ++tallies->missing_links;
        const int distance = second.start().sentence - first.start().sentence;
        ++tallies->distance[std::min(distance, kDistanceBuckets - 1)];
        const MentionType t1 = TypeOf(first, gold);
        const MentionType t2 = TypeOf(second, gold);
        ++tallies->type_pairs[{t1, t2}];
        if (t2 == MentionType::kNominalNoun || t2 == MentionType::kOvertPronoun) {
          const UdCategory category = CategoryOf(gold.token(first.head).Relation());
          ++tallies->antecedent_categories[t2][static_cast<int>(category)];
        }
        diagnosis = "two mentions, both detected, link missing";
      } else {
        diagnosis = "two mentions, " + std::to_string(2 - detected_count) +
                    " undetected";
      }
    } else {
      diagnosis = std::to_string(entity.mentions.size()) + " mentions, " +
                  std::to_string(detected_count) + " detected";
    }

    if (details != nullptr) {
      UnresolvedEntity detail;
      detail.doc_id = gold.doc_id;
      detail.entity_id = entity.entity_id;
      for (const Mention &mention : entity.mentions) {
        detail.spans.push_back(std::to_string(mention.start().sentence) + ":" +
                               SpanIds(gold, mention.span));
      }
      detail.detected = std::move(detected);
      detail.diagnosis = std::move(diagnosis);
      details->push_back(std::move(detail));
    }
  }
}

ErrorTallies AnalyzeErrors(const Corpus &gold, const Corpus &pred,
                           const ErrorAnalysisOptions &options,
                           std::vector<UnresolvedEntity> *details) {
  if (gold.documents.size() != pred.documents.size()) {
    throw DataError(gold.dataset + ": gold has " +
                    std::to_string(gold.documents.size()) +
                    " documents, system has " +
                    std::to_string(pred.documents.size()));
  }
  ErrorTallies tallies;
  for (size_t d = 0; d < gold.documents.size(); ++d) {
    AnalyzeDocumentErrors(gold.documents[d], pred.documents[d], options,
                          &tallies, details);
  }
  return tallies;
}

ReportRow ErrorReport::a_unresolved() const {
  return ReportRow::Percent("A_unresolved", tallies.unresolved,
                            tallies.gold_entities);
}

ReportRow ErrorReport::b_two_mention() const {
  return ReportRow::Percent("B_two_mention", tallies.two_mention,
                            tallies.unresolved);
}

ReportRow ErrorReport::c_undetected() const {
  return ReportRow::Percent("C_undetected", tallies.undetected,
                            tallies.two_mention_mentions);
}

ReportRow ErrorReport::d_short() const {
  return ReportRow::Percent("D_short", tallies.undetected_short,
                            tallies.undetected);
}

ReportRow ErrorReport::e_premodified() const {
  return ReportRow::Percent("E_premodified", tallies.undetected_premodified,
                            tallies.undetected);
}

ReportRow ErrorReport::f_average_length() const {
  return ReportRow::Ratio("F_average_length", tallies.undetected_tokens,
                          tallies.undetected);
}

DatasetReport ErrorReport::ToDatasetReport() const {
  DatasetReport report{dataset, {}};
  report.rows = {a_unresolved(), b_two_mention(), c_undetected(),
                 d_short(),      e_premodified(), f_average_length()};
  for (MentionType type : kMentionTypes) {
    report.rows.push_back(ReportRow::Percent(
        "undetected_type." + std::string(MentionTypeName(type)),
        tallies.undetected_types[static_cast<int>(type)], tallies.undetected));
  }
  static constexpr const char *kBuckets[] = {"0", "1", "2", "3+"};
  for (int i = 0; i < kDistanceBuckets; ++i) {
    report.rows.push_back(ReportRow::Percent(
        std::string("distance.") + kBuckets[i], tallies.distance[i],
        tallies.missing_links));
  }
  for (const auto &[pair, n] : tallies.type_pairs) {
    report.rows.push_back(ReportRow::Percent(
        "type_pair." + std::string(MentionTypeName(pair.first)) + "-" +
            std::string(MentionTypeName(pair.second)),
        n, tallies.missing_links));
  }
  for (const auto &[type, counts] : tallies.antecedent_categories) {
    for (const auto &[category, n] : RankCategories(counts)) {
      report.rows.push_back(ReportRow::Count(
          "antecedent_category." + std::string(MentionTypeName(type)) + "." +
              CategoryLetter(category),
          n));
    }
  }
  return report;
}

std::string ErrorTableTsv(const std::vector<ErrorReport> &reports) {
  std::string out = "dataset\tA\tB\tC\tD\tE\tF\n";
  for (const ErrorReport &report : reports) {
    out += report.dataset;
    for (const ReportRow &row :
         {report.a_unresolved(), report.b_two_mention(), report.c_undetected(),
          report.d_short(), report.e_premodified(), report.f_average_length()}) {
      out += '\t';
      out += row.Rendered();
    }
    out += '\n';
  }
  return out;
}

}  // namespace corefkit
