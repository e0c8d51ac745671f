// Mention types and universal dependency categories.

#ifndef COREFKIT_TAXONOMY_H_
#define COREFKIT_TAXONOMY_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "corefkit/document.h"

namespace corefkit {

enum class MentionType {
  kNominalNoun,
  kProperNoun,
  kOvertPronoun,
  kZeroPronoun,
  kOther,
};

inline constexpr std::array<MentionType, 5> kMentionTypes = {
    MentionType::kNominalNoun, MentionType::kProperNoun,
    MentionType::kOvertPronoun, MentionType::kZeroPronoun, MentionType::kOther};

// Grouping of dependency relations. Declaration order is the display and
// tie-break order.
enum class UdCategory { kS, kO, kD, kN, kC, kM, kF, kR, kW, kL, kP, kT };

inline constexpr std::array<UdCategory, 12> kUdCategories = {
    UdCategory::kS, UdCategory::kO, UdCategory::kD, UdCategory::kN,
    UdCategory::kC, UdCategory::kM, UdCategory::kF, UdCategory::kR,
    UdCategory::kW, UdCategory::kL, UdCategory::kP, UdCategory::kT};

std::string_view MentionTypeName(MentionType type);
std::optional<MentionType> ParseMentionType(std::string_view name);

char CategoryLetter(UdCategory category);
std::string_view CategoryName(UdCategory category);

// Empty node -> zero pronoun; otherwise by UPOS of the head.
MentionType ClassifyMentionType(const Token &head);

// Strips a subtype ("nsubj:pass" -> "nsubj").
std::string_view BaseRelation(std::string_view deprel);

// Unknown base relations map to kT; they are reported through `unknown` when
// given, otherwise logged to stderr once per label.
UdCategory CategoryOf(std::string_view deprel, bool *unknown = nullptr);

// The 37 base relations with their categories, in table order.
const std::array<std::pair<std::string_view, UdCategory>, 37> &RelationTable();

// Tab-separated dump of the relation table with a header line.
std::string RelationTableTsv();

}  // namespace corefkit

#endif  // COREFKIT_TAXONOMY_H_
