#include "corefkit/taxonomy.h"

#include <iostream>
#include <mutex>
#include <set>
#include <string>

namespace corefkit {

std::string_view MentionTypeName(MentionType type) {
  switch (type) {
    case MentionType::kNominalNoun: return "NominalNoun";
    case MentionType::kProperNoun: return "ProperNoun";
    case MentionType::kOvertPronoun: return "OvertPronoun";
    case MentionType::kZeroPronoun: return "ZeroPronoun";
    case MentionType::kOther: return "Other";
  }
  return "Other";
}

std::optional<MentionType> ParseMentionType(std::string_view name) {
  for (MentionType type : kMentionTypes) {
    if (MentionTypeName(type) == name) return type;
  }
  return std::nullopt;
}

char CategoryLetter(UdCategory category) {
  return "SODNCMFRWLPT"[static_cast<int>(category)];
}

std::string_view CategoryName(UdCategory category) {
  static constexpr std::string_view kNames[] = {
      "core arguments_subject", "core arguments_object",
      "non-core dependents_nominals", "nominal dependents_nominals",
      "clauses", "modifier words", "function words", "coordination",
      "MWE", "loose", "special", "other"};
  return kNames[static_cast<int>(category)];
}

MentionType ClassifyMentionType(const Token &head) {
  if (head.is_empty()) return MentionType::kZeroPronoun;
  if (head.upos == "NOUN") return MentionType::kNominalNoun;
  if (head.upos == "PROPN") return MentionType::kProperNoun;
  if (head.upos == "PRON") return MentionType::kOvertPronoun;
  return MentionType::kOther;
}

std::string_view BaseRelation(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

const std::array<std::pair<std::string_view, UdCategory>, 37> &RelationTable() {
  using C = UdCategory;
  static const std::array<std::pair<std::string_view, UdCategory>, 37> table = {{
      {"nsubj", C::kS},
      {"obj", C::kO}, {"iobj", C::kO},
      {"obl", C::kD}, {"vocative", C::kD}, {"expl", C::kD}, {"dislocated", C::kD},
      {"nmod", C::kN}, {"appos", C::kN}, {"nummod", C::kN},
      {"csubj", C::kC}, {"ccomp", C::kC}, {"xcomp", C::kC}, {"advcl", C::kC},
      {"acl", C::kC},
      {"advmod", C::kM}, {"discourse", C::kM}, {"amod", C::kM},
      {"aux", C::kF}, {"cop", C::kF}, {"mark", C::kF}, {"det", C::kF},
      {"clf", C::kF}, {"case", C::kF},
      {"conj", C::kR}, {"cc", C::kR},
      {"fixed", C::kW}, {"flat", C::kW}, {"compound", C::kW},
      {"list", C::kL}, {"parataxis", C::kL},
      {"orphan", C::kP}, {"goeswith", C::kP}, {"reparandum", C::kP},
      {"punct", C::kT}, {"root", C::kT}, {"dep", C::kT},
  }};
  return table;
}

UdCategory CategoryOf(std::string_view deprel, bool *unknown) {
  std::string_view base = BaseRelation(deprel);
  for (const auto &[relation, category] : RelationTable()) {
    if (relation == base) {
      if (unknown != nullptr) *unknown = false;
      return category;
    }
  }
  if (unknown != nullptr) {
    *unknown = true;
  } else {
    static std::mutex mu;
    static std::set<std::string, std::less<>> warned;
    std::lock_guard<std::mutex> lock(mu);
    if (warned.insert(std::string(base)).second) {
      std::cerr << "warning: unknown dependency relation '" << base
                << "' counted as T\n";
    }
  }
  return UdCategory::kT;
}

std::string RelationTableTsv() {
  std::string out = "relation\tcategory\tcategory_name\n";
  for (const auto &[relation, category] : RelationTable()) {
    out += relation;
    out += '\t';
    out += CategoryLetter(category);
    out += '\t';
    out += CategoryName(category);
    out += '\n';
  }
  return out;
}

}  // namespace corefkit
