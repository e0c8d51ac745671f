#ifndef COREFKIT_MENTION_HEAD_H_
#define COREFKIT_MENTION_HEAD_H_

#include <vector>

#include "corefkit/document.h"

namespace corefkit {

enum class HeadRule {
  // Use the CorefUD head attribute of the mention when present, otherwise
  // fall back to the syntactic rule.
  kAnnotatedThenSyntactic,
  // Ignore annotated heads.
  kSyntactic,
};

// The span token whose syntactic parent lies outside the span. Several
// candidates: the one closest to the root, then the leftmost. No candidate
// (cycles, degenerate trees): the leftmost span token.
TokenRef SyntacticHead(const Document &doc, const std::vector<TokenRef> &span);

TokenRef MentionHead(const Mention &mention, const Document &doc,
                     HeadRule rule = HeadRule::kAnnotatedThenSyntactic);

// Recomputes the head of every mention in the document.
void AssignHeads(Document &doc, HeadRule rule);

}  // namespace corefkit

#endif  // COREFKIT_MENTION_HEAD_H_
