#include "corefkit/analysis.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <regex>

#include "corefkit/errors.h"

namespace corefkit {
namespace {

bool HasGenderNumber(const Token &token) {
  return token.feats.Find("Gender") != nullptr &&
         token.feats.Find("Number") != nullptr;
}

bool Agrees(const Token &a, const Token &b) {
  const std::string *ga = a.feats.Find("Gender");
  const std::string *gb = b.feats.Find("Gender");
  const std::string *na = a.feats.Find("Number");
  const std::string *nb = b.feats.Find("Number");
  return ga && gb && na && nb && *ga == *gb && *na == *nb;
}

}  // namespace

MentionType TypeOf(const Mention &mention, const Document &doc) {
  return ClassifyMentionType(doc.token(mention.head));
}

bool IsPreModified(const Mention &mention) {
  return mention.size() > 1 && mention.head == mention.span.back();
}

DatasetReport HeadPositionStats(const Corpus &corpus) {
  int64_t premodified = 0, multi = 0, all = 0;
  for (const Document &doc : corpus.documents) {
    for (const Entity &entity : doc.entities) {
      for (const Mention &mention : entity.mentions) {
        ++all;
        if (mention.size() > 1) ++multi;
        if (IsPreModified(mention)) ++premodified;
      }
    }
  }
  DatasetReport report{corpus.dataset, {}};
  report.rows.push_back(
      ReportRow::Percent("premodified.multi_token", premodified, multi));
  report.rows.push_back(
      ReportRow::Percent("premodified.all_mentions", premodified, all));
  return report;
}

DatasetReport MentionTypeDistribution(const Corpus &corpus) {
  std::array<int64_t, kMentionTypes.size()> counts{};
  int64_t total = 0;
  for (const Document &doc : corpus.documents) {
    for (const Entity &entity : doc.entities) {
      for (const Mention &mention : entity.mentions) {
        ++counts[static_cast<int>(TypeOf(mention, doc))];
        ++total;
      }
    }
  }
  DatasetReport report{corpus.dataset, {}};
  for (MentionType type : kMentionTypes) {
    report.rows.push_back(ReportRow::Percent(
        "mention_type." + std::string(MentionTypeName(type)),
        counts[static_cast<int>(type)], total));
  }
  return report;
}

CategoryRanking RankCategories(const CategoryCounts &counts) {
  CategoryRanking ranking;
  for (UdCategory category : kUdCategories) {
    int64_t n = counts[static_cast<int>(category)];
    if (n > 0) ranking.emplace_back(category, n);
  }
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  return ranking;
}

CategoryCounts AnaphorAntecedentCounts(const Corpus &corpus, MentionType type) {
  CategoryCounts counts{};
  for (const Document &doc : corpus.documents) {
    for (const Entity &entity : doc.entities) {
      for (size_t i = 1; i < entity.mentions.size(); ++i) {
        if (TypeOf(entity.mentions[i], doc) != type) continue;
        const Token &antecedent_head = doc.token(entity.mentions[i - 1].head);
        ++counts[static_cast<int>(CategoryOf(antecedent_head.Relation()))];
      }
    }
  }
  return counts;
}

CategoryRanking AnaphorAntecedentRanking(const Corpus &corpus, MentionType type) {
  return RankCategories(AnaphorAntecedentCounts(corpus, type));
}

DatasetReport AnaphorAntecedentReport(const Corpus &corpus) {
  DatasetReport report{corpus.dataset, {}};
  for (MentionType type : kMentionTypes) {
    for (const auto &[category, count] : AnaphorAntecedentRanking(corpus, type)) {
      report.rows.push_back(ReportRow::Count(
          "anaphor_antecedent." + std::string(MentionTypeName(type)) + "." +
              CategoryLetter(category),
          count));
    }
  }
  return report;
}

DatasetReport FirstMentionStats(const Corpus &corpus) {
  int64_t entities = 0, longest = 0, nominal = 0;
  for (const Document &doc : corpus.documents) {
    for (const Entity &entity : doc.entities) {
      if (entity.singleton()) continue;
      ++entities;
      const Mention &first = entity.mentions.front();
      bool is_longest = std::all_of(
          entity.mentions.begin() + 1, entity.mentions.end(),
          [&](const Mention &m) { return first.size() >= m.size(); });
      if (is_longest) ++longest;
      MentionType type = TypeOf(first, doc);
      if (type == MentionType::kNominalNoun || type == MentionType::kProperNoun) {
        ++nominal;
      }
    }
  }
  DatasetReport report{corpus.dataset, {}};
  report.rows.push_back(ReportRow::Percent("first_mention.longest", longest, entities));
  report.rows.push_back(
      ReportRow::Percent("first_mention.nominal_or_proper", nominal, entities));
  return report;
}

DatasetReport EntitySizeStats(const Corpus &corpus) {
  int64_t entities = 0, mentions = 0, plural_entities = 0, plural_mentions = 0;
  for (const Document &doc : corpus.documents) {
    for (const Entity &entity : doc.entities) {
      ++entities;
      mentions += entity.mentions.size();
      if (!entity.singleton()) {
        ++plural_entities;
        plural_mentions += entity.mentions.size();
      }
    }
  }
  DatasetReport report{corpus.dataset, {}};
  report.rows.push_back(
      ReportRow::Ratio("mentions_per_entity.with_singletons", mentions, entities));
  report.rows.push_back(ReportRow::Ratio("mentions_per_entity.without_singletons",
                                         plural_mentions, plural_entities));
  return report;
}

double CompetingAntecedents::valid_fraction() const {
  return pronouns == 0 ? 0.0 : static_cast<double>(valid) / pronouns;
}

double CompetingAntecedents::mean_competitors() const {
  return valid == 0 ? 0.0 : static_cast<double>(competitors) / valid;
}

CompetingAntecedents CompetingAntecedentStats(const Corpus &corpus,
                                              PronounKind kind) {
  const MentionType wanted = kind == PronounKind::kOvert
                                 ? MentionType::kOvertPronoun
                                 : MentionType::kZeroPronoun;
  CompetingAntecedents stats;
  for (const Document &doc : corpus.documents) {
    // Mentions by the sentence of their first token.
    std::vector<std::vector<std::pair<int, const Mention *>>> by_sentence(
        doc.sentences.size());
    for (int e = 0; e < static_cast<int>(doc.entities.size()); ++e) {
      for (const Mention &m : doc.entities[e].mentions) {
        by_sentence[m.start().sentence].emplace_back(e, &m);
      }
    }

    for (int e = 0; e < static_cast<int>(doc.entities.size()); ++e) {
      const Entity &entity = doc.entities[e];
      for (size_t i = 0; i < entity.mentions.size(); ++i) {
        const Mention &anaphor = entity.mentions[i];
        if (TypeOf(anaphor, doc) != wanted) continue;
        ++stats.pronouns;
        if (i == 0) continue;
        const Token &head = doc.token(anaphor.head);
        if (!HasGenderNumber(head)) continue;
        const int sentence = anaphor.start().sentence;
        if (sentence - entity.mentions[i - 1].start().sentence > 1) continue;

        ++stats.valid;
        for (int s = std::max(0, sentence - 1); s <= sentence; ++s) {
          for (const auto &[other, candidate] : by_sentence[s]) {
            if (other == e) continue;
            if (!(candidate->start() < anaphor.start())) continue;
            if (std::binary_search(candidate->span.begin(), candidate->span.end(),
                                   anaphor.head)) {
              continue;
            }
            if (Agrees(head, doc.token(candidate->head))) ++stats.competitors;
          }
        }
      }
    }
  }
  return stats;
}

DatasetReport CompetingAntecedentsReport(const Corpus &corpus) {
  DatasetReport report{corpus.dataset, {}};
  for (PronounKind kind : {PronounKind::kOvert, PronounKind::kZero}) {
    const std::string name = kind == PronounKind::kOvert ? "overt" : "zero";
    CompetingAntecedents stats = CompetingAntecedentStats(corpus, kind);
    report.rows.push_back(ReportRow::Percent("competing." + name + ".valid",
                                             stats.valid, stats.pronouns));
    report.rows.push_back(ReportRow::Ratio("competing." + name + ".mean_competitors",
                                           stats.competitors, stats.valid));
  }
  return report;
}

std::string GenreOf(const std::string &doc_id, const std::string &pattern) {
  std::regex re(pattern);
  std::smatch match;
  if (std::regex_search(doc_id, match, re) && match.size() > 1 &&
      match[1].length() > 0) {
    return match[1].str();
  }
  return "unknown";
}

double GenreRate::per_8000() const {
  return tokens == 0 ? 0.0 : 8000.0 * pronouns / tokens;
}

std::vector<GenreRate> GenrePronounFrequency(const Corpus &corpus,
                                             const std::string &pattern) {
  std::regex re(pattern);
  std::map<std::string, GenreRate> rates;
  for (const Document &doc : corpus.documents) {
    std::string genre = "unknown";
    std::smatch match;
    if (std::regex_search(doc.doc_id, match, re) && match.size() > 1 &&
        match[1].length() > 0) {
      genre = match[1].str();
    }
    GenreRate &rate = rates[genre];
    rate.genre = genre;
    for (const Sentence &sentence : doc.sentences) {
      for (const Token &token : sentence.tokens) {
        if (token.is_empty()) continue;
        ++rate.tokens;
        const std::string *type = token.feats.Find("PronType");
        if (token.upos == "PRON" && type != nullptr && *type == "Prs") {
          ++rate.pronouns;
        }
      }
    }
  }
  std::vector<GenreRate> out;
  for (auto &[genre, rate] : rates) out.push_back(rate);
  return out;
}

DatasetReport GenreReport(const Corpus &corpus, const std::string &pattern) {
  DatasetReport report{corpus.dataset, {}};
  for (const GenreRate &rate : GenrePronounFrequency(corpus, pattern)) {
    report.rows.push_back(ReportRow::Ratio("pronouns_per_8000." + rate.genre,
                                           8000 * rate.pronouns, rate.tokens));
  }
  return report;
}

DatasetReport CorpusStatistics(const Corpus &corpus) {
  int64_t docs = corpus.documents.size(), sentences = 0, tokens = 0;
  int64_t entities = 0, mentions = 0;
  for (const Document &doc : corpus.documents) {
    sentences += doc.sentences.size();
    for (const Sentence &sentence : doc.sentences) {
      tokens += sentence.SurfaceTokenCount();
    }
    entities += doc.entities.size();
    mentions += doc.MentionCount();
  }
  DatasetReport report{corpus.dataset, {}};
  report.rows.push_back(ReportRow::Count("documents", docs));
  report.rows.push_back(ReportRow::Count("sentences", sentences));
  report.rows.push_back(ReportRow::Count("tokens", tokens));
  report.rows.push_back(ReportRow::Ratio("sentences_per_document", sentences, docs));
  report.rows.push_back(ReportRow::Ratio("tokens_per_sentence", tokens, sentences));
  report.rows.push_back(ReportRow::Count("entities", entities));
  report.rows.push_back(ReportRow::Count("mentions", mentions));
  report.rows.push_back(ReportRow::Ratio("mentions_per_entity", mentions, entities));
  return report;
}

DistanceStats SemanticDistance(const Corpus &corpus,
                               const MentionVectors &vectors) {
  std::vector<double> distances;
  std::vector<std::string> missing;
  for (const Document &doc : corpus.documents) {
    for (const Entity &entity : doc.entities) {
      if (entity.singleton()) continue;
      std::vector<const std::vector<double> *> found;
      for (const Mention &mention : entity.mentions) {
        const int sentence = mention.start().sentence;
        const std::string ids = SpanIds(doc, mention.span);
        const std::vector<double> *v = vectors.Find(doc.doc_id, sentence, ids);
        if (v == nullptr) {
          missing.push_back(doc.doc_id + " " + std::to_string(sentence) + " " + ids);
        }
        found.push_back(v);
      }
      for (size_t i = 0; i < found.size(); ++i) {
        for (size_t j = i + 1; j < found.size(); ++j) {
          if (found[i] == nullptr || found[j] == nullptr) continue;
          double sum = 0.0;
          for (int k = 0; k < vectors.dimension(); ++k) {
            double d = (*found[i])[k] - (*found[j])[k];
            sum += d * d;
          }
          distances.push_back(std::sqrt(sum));
        }
      }
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (size_t i = 0; i < missing.size() && i < 20; ++i) {
      list += (i ? ", " : "") + missing[i];
    }
    if (missing.size() > 20) list += ", ...";
    throw DataError(corpus.dataset, 0,
                    std::to_string(missing.size()) +
                        " mentions without a vector: " + list);
  }
  DistanceStats stats;
  stats.pairs = distances.size();
  if (distances.empty()) return stats;
  double sum = 0.0;
  for (double d : distances) sum += d;
  stats.mean = sum / distances.size();
  double squares = 0.0;
  for (double d : distances) squares += (d - stats.mean) * (d - stats.mean);
  stats.variance = squares / distances.size();
  return stats;
}

DatasetReport SemanticDistanceReport(const Corpus &corpus,
                                     const MentionVectors &vectors) {
  DistanceStats stats = SemanticDistance(corpus, vectors);
  DatasetReport report{corpus.dataset, {}};
  report.rows.push_back(ReportRow::Count("semantic_distance.pairs", stats.pairs));
  report.rows.push_back(ReportRow::Real("semantic_distance.mean", stats.mean));
  report.rows.push_back(ReportRow::Real("semantic_distance.variance", stats.variance));
  return report;
}

DatasetReport MergeReports(const std::string &name,
                           const std::vector<DatasetReport> &reports) {
  DatasetReport merged{name, {}};
  std::map<std::string, size_t> index;
  for (const DatasetReport &report : reports) {
    for (const ReportRow &row : report.rows) {
      if (row.kind == ReportRow::Kind::kReal) continue;
      auto [it, inserted] = index.emplace(row.key, merged.rows.size());
      if (inserted) {
        merged.rows.push_back(row);
        continue;
      }
      ReportRow &target = merged.rows[it->second];
      target.numerator += row.numerator;
      if (row.kind != ReportRow::Kind::kCount) target.denominator += row.denominator;
    }
  }
  return merged;
}

}  // namespace corefkit
