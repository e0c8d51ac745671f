// Decoding of the CorefUD "Entity" MISC attribute into mentions and
// entities.
//
// Brackets on one token are concatenated: "(e1-person-1" opens a mention of
// e1, "e1)" closes it and "(e5-place-1)" is a one-token mention. Parts of a
// discontinuous mention carry "[i/n]" after the entity id and are merged
// into one gapped mention once the last part closes.

#ifndef COREFKIT_ENTITIES_H_
#define COREFKIT_ENTITIES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corefkit/document.h"

namespace corefkit {

struct Bracket {
  bool open = false;
  bool close = false;
  std::string entity_id;
  int part = 0;  // 0 when the mention is continuous
  int part_total = 0;
  std::vector<std::string> fields;  // after the id, split on '-'
};

// Splits an Entity attribute value into brackets. Throws DataError on text
// that is not a sequence of brackets.
std::vector<Bracket> ParseEntityValue(std::string_view value);

// Default opening-bracket layout when no "# global.Entity" line is given.
const std::vector<std::string> &DefaultEntityFields();

// Decodes every mention of the document from its tokens' MISC columns.
// Mention heads are left at the span start; see AssignHeads.
std::vector<Entity> ResolveEntities(const Document &doc,
                                    const std::string &file = "");

}  // namespace corefkit

#endif  // COREFKIT_ENTITIES_H_
