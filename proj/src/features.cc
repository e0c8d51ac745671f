#include "corefkit/features.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "corefkit/errors.h"
#include "corefkit/mention_head.h"

namespace corefkit {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<WordOrder, std::string_view>, 7> kOrderNames = {{
    {WordOrder::kSOV, "SOV"},
    {WordOrder::kSVO, "SVO"},
    {WordOrder::kVSO, "VSO"},
    {WordOrder::kVOS, "VOS"},
    {WordOrder::kOVS, "OVS"},
    {WordOrder::kOSV, "OSV"},
    {WordOrder::kNoDominant, "NoDominant"},
}};

std::string Trim(const std::string &s) {
  const size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

Json SpanRecord(const Document &doc, const std::vector<TokenRef> &span,
                const SpanFeatures &span_features,
                const DocFeatures &doc_features, const std::string *entity_id,
                FeatureVocabulary *vocabulary) {
  Json record;
  record["doc_id"] = doc.doc_id;
  record["sentence"] = span.front().sentence;
  record["span"] = SpanIds(doc, span);
  record["width"] = span.size();
  if (entity_id != nullptr) record["entity_id"] = *entity_id;

  const std::string mention_type(MentionTypeName(span_features.mention_type));
  const std::string category(1, CategoryLetter(span_features.ud_category));
  const std::string order(WordOrderName(doc_features.word_order));
  record["width_bucket"] = span_features.width_bucket;
  record["head_upos"] = span_features.head_upos;
  record["head_deprel"] = span_features.head_deprel;
  record["mention_type"] = mention_type;
  record["ud_category"] = category;
  record["language"] = doc_features.language;
  record["word_order"] = order;

  vocabulary->Add("width_bucket", span_features.width_bucket);
  vocabulary->Add("head_upos", span_features.head_upos);
  vocabulary->Add("head_deprel", span_features.head_deprel);
  vocabulary->Add("mention_type", mention_type);
  vocabulary->Add("ud_category", category);
  vocabulary->Add("language", doc_features.language);
  vocabulary->Add("word_order", order);
  return record;
}

}  // namespace

std::string_view WordOrderName(WordOrder order) {
  for (const auto &[value, name] : kOrderNames) {
    if (value == order) return name;
  }
  return "NoDominant";
}

std::optional<WordOrder> ParseWordOrder(std::string_view name) {
  for (const auto &[value, text] : kOrderNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

WordOrderTable WordOrderTable::Load(std::istream &input,
                                    const std::string &file) {
  WordOrderTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw DataError(file, line_no, "expected two tab-separated columns");
    }
    const std::string language = Trim(line.substr(0, tab));
    const std::string order_name = Trim(line.substr(tab + 1));
    std::optional<WordOrder> order = ParseWordOrder(order_name);
    if (!order) {
      throw DataError(file, line_no, "unknown word order '" + order_name + "'");
    }
    if (table.orders_.count(language) != 0) {
      throw DataError(file, line_no, "duplicate language '" + language + "'");
    }
    table.Add(language, *order);
  }
  return table;
}

WordOrderTable WordOrderTable::LoadFile(const std::filesystem::path &path) {
  std::ifstream input(path);
  if (!input) throw DataError(path.string(), 0, "cannot open word order table");
  return Load(input, path.string());
}

void WordOrderTable::Add(const std::string &language, WordOrder order) {
  if (!orders_.emplace(language, order).second) {
    throw DataError("duplicate language '" + language + "' in word order table");
  }
}

WordOrder WordOrderTable::Lookup(const std::string &language) const {
  auto it = orders_.find(language);
  if (it == orders_.end()) {
    throw DataError("language '" + language + "' missing from word order table");
  }
  return it->second;
}

std::string_view WidthBucket(int tokens) {
  if (tokens <= 1) return "1";
  if (tokens <= 4) {
    static constexpr std::string_view kSmall[] = {"2", "3", "4"};
    return kSmall[tokens - 2];
  }
  if (tokens <= 7) return "5-7";
  if (tokens <= 15) return "8-15";
  if (tokens <= 31) return "16-31";
  return "32+";
}

SpanFeatures ExtractSpanFeatures(const Document &doc,
                                 const std::vector<TokenRef> &span,
                                 const TokenRef &head) {
  const Token &token = doc.token(head);
  SpanFeatures features;
  features.width_bucket = WidthBucket(static_cast<int>(span.size()));
  features.head_upos = token.upos;
  features.head_deprel = BaseRelation(token.Relation());
  features.mention_type = ClassifyMentionType(token);
  features.ud_category = CategoryOf(token.Relation());
  return features;
}

SpanFeatures ExtractSpanFeatures(const Mention &mention, const Document &doc) {
  return ExtractSpanFeatures(doc, mention.span, mention.head);
}

DocFeatures ExtractDocFeatures(const Document &doc, const WordOrderTable &table) {
  return {doc.language, table.Lookup(doc.language)};
}

void FeatureVocabulary::Add(const std::string &field, const std::string &value) {
  values_[field].insert(value);
}

void FeatureVocabulary::Merge(const FeatureVocabulary &other) {
  for (const auto &[field, values] : other.values_) {
    values_[field].insert(values.begin(), values.end());
  }
}

bool FeatureVocabulary::Contains(const std::string &field,
                                 const std::string &value) const {
  auto it = values_.find(field);
  return it != values_.end() && it->second.count(value) != 0;
}

std::string FeatureVocabulary::ToTsv() const {
  std::string out = "field\tvalue\n";
  for (const auto &[field, values] : values_) {
    for (const std::string &value : values) out += field + '\t' + value + '\n';
  }
  return out;
}

std::string ExportHeader(const ExportTarget &target) {
  Json header;
  header["format"] = "corefkit-features";
  header["target"] =
      target.kind == ExportTarget::Kind::kGold ? "gold" : "all_spans";
  if (target.kind == ExportTarget::Kind::kAllSpans) {
    header["max_width"] = target.max_width;
  }
  header["head"] = "syntactic";
  header["note"] =
      "head features use the dependency head of the span in place of the "
      "model's maximum-attention token";
  return header.dump() + '\n';
}

std::string ExportDocumentFeatures(const Document &doc,
                                   const WordOrderTable &table,
                                   const ExportTarget &target,
                                   FeatureVocabulary *vocabulary) {
  const DocFeatures doc_features = ExtractDocFeatures(doc, table);
  std::string out;
  if (target.kind == ExportTarget::Kind::kGold) {
    std::vector<std::pair<const Mention *, const Entity *>> mentions;
    for (const Entity &entity : doc.entities) {
      for (const Mention &mention : entity.mentions) {
        mentions.emplace_back(&mention, &entity);
      }
    }
    std::stable_sort(mentions.begin(), mentions.end(),
                     [](const auto &x, const auto &y) {
                       return MentionOrder(*x.first, *y.first);
                     });
    for (const auto &[mention, entity] : mentions) {
      // Same head proxy as all_spans, whatever rule the parser applied.
      const TokenRef head = SyntacticHead(doc, mention->span);
      out += SpanRecord(doc, mention->span,
                        ExtractSpanFeatures(doc, mention->span, head),
                        doc_features, &entity->entity_id, vocabulary)
                 .dump();
      out += '\n';
    }
    return out;
  }

  for (int s = 0; s < static_cast<int>(doc.sentences.size()); ++s) {
    std::vector<TokenRef> surface;
    for (const Token &token : doc.sentences[s].tokens) {
      if (!token.is_empty()) surface.push_back({s, token.id});
    }
    const int n = static_cast<int>(surface.size());
    for (int start = 0; start < n; ++start) {
      for (int width = 1; width <= target.max_width && start + width <= n;
           ++width) {
        std::vector<TokenRef> span(surface.begin() + start,
                                   surface.begin() + start + width);
        const TokenRef head = SyntacticHead(doc, span);
        out += SpanRecord(doc, span, ExtractSpanFeatures(doc, span, head),
                          doc_features, nullptr, vocabulary)
                   .dump();
        out += '\n';
      }
    }
  }
  return out;
}

void ExportFeatures(const Corpus &corpus, const WordOrderTable &table,
                    const ExportTarget &target, std::ostream &records,
                    FeatureVocabulary *vocabulary) {
  records << ExportHeader(target);
  for (const Document &doc : corpus.documents) {
    records << ExportDocumentFeatures(doc, table, target, vocabulary);
  }
}

}  // namespace corefkit
