// Span and document features for downstream coreference models.
//
// Records are JSON lines; the categorical values they use are listed in a
// TSV vocabulary sidecar.

#ifndef COREFKIT_FEATURES_H_
#define COREFKIT_FEATURES_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "corefkit/document.h"
#include "corefkit/taxonomy.h"

namespace corefkit {

enum class WordOrder { kSOV, kSVO, kVSO, kVOS, kOVS, kOSV, kNoDominant };

std::string_view WordOrderName(WordOrder order);
std::optional<WordOrder> ParseWordOrder(std::string_view name);

// Dominant word order per language code.
//
// File format: "language<TAB>order" per line, '#' starts a comment line.
class WordOrderTable {
 public:
  // Throws DataError on malformed rows, unknown orders and duplicates.
  static WordOrderTable Load(std::istream &input, const std::string &file = "");
  static WordOrderTable LoadFile(const std::filesystem::path &path);

  void Add(const std::string &language, WordOrder order);
  // Throws DataError naming the language when it is not in the table.
  WordOrder Lookup(const std::string &language) const;
  size_t size() const { return orders_.size(); }

 private:
  std::map<std::string, WordOrder> orders_;
};

// 1, 2, 3, 4, 5-7, 8-15, 16-31, 32+
std::string_view WidthBucket(int tokens);

struct SpanFeatures {
  std::string width_bucket;
  std::string head_upos;
  std::string head_deprel;  // base relation
  MentionType mention_type = MentionType::kOther;
  UdCategory ud_category = UdCategory::kT;
};

SpanFeatures ExtractSpanFeatures(const Document &doc,
                                 const std::vector<TokenRef> &span,
                                 const TokenRef &head);
SpanFeatures ExtractSpanFeatures(const Mention &mention, const Document &doc);

struct DocFeatures {
  std::string language;
  WordOrder word_order = WordOrder::kNoDominant;
};

DocFeatures ExtractDocFeatures(const Document &doc, const WordOrderTable &table);

struct ExportTarget {
  enum class Kind { kGold, kAllSpans };
  Kind kind = Kind::kGold;
  int max_width = 0;  // all_spans only

  static ExportTarget Gold() { return {Kind::kGold, 0}; }
  static ExportTarget AllSpans(int max_width) {
    return {Kind::kAllSpans, max_width};
  }
};

// Values seen per categorical field.
class FeatureVocabulary {
 public:
  void Add(const std::string &field, const std::string &value);
  void Merge(const FeatureVocabulary &other);
  bool Contains(const std::string &field, const std::string &value) const;
  // "field<TAB>value" rows sorted by field, then value, after a header.
  std::string ToTsv() const;

 private:
  std::map<std::string, std::set<std::string>> values_;
};

// First line of every export; names the target and the head proxy.
std::string ExportHeader(const ExportTarget &target);

// Records of one document, one JSON object per line, in span order. Values
// used are added to `vocabulary`.
std::string ExportDocumentFeatures(const Document &doc,
                                   const WordOrderTable &table,
                                   const ExportTarget &target,
                                   FeatureVocabulary *vocabulary);

// Header followed by the records of every document in corpus order.
void ExportFeatures(const Corpus &corpus, const WordOrderTable &table,
                    const ExportTarget &target, std::ostream &records,
                    FeatureVocabulary *vocabulary);

}  // namespace corefkit

#endif  // COREFKIT_FEATURES_H_
