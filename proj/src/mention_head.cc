#include "corefkit/mention_head.h"

#include <algorithm>
#include <limits>

namespace corefkit {
namespace {

// Arcs to the root, or max() when the path is cyclic or leaves the sentence.
int Depth(const Sentence &sentence, TokenId id) {
  const int limit = static_cast<int>(sentence.tokens.size()) + 1;
  int depth = 0;
  while (depth <= limit) {
    const Token *token = sentence.Find(id);
    if (token == nullptr) return std::numeric_limits<int>::max();
    auto parent = token->SyntacticHead();
    if (!parent) return std::numeric_limits<int>::max();
    ++depth;
    if (*parent == TokenId{0, 0}) return depth;
    id = *parent;
  }
  return std::numeric_limits<int>::max();
}

}  // namespace

TokenRef SyntacticHead(const Document &doc, const std::vector<TokenRef> &span) {
  if (span.size() == 1) return span.front();

  std::vector<TokenRef> candidates;
  for (const TokenRef &ref : span) {
    const Token *token = doc.FindToken(ref);
    if (token == nullptr) continue;
    auto parent = token->SyntacticHead();
    if (!parent || *parent == TokenId{0, 0} ||
        !std::binary_search(span.begin(), span.end(),
                            TokenRef{ref.sentence, *parent})) {
      candidates.push_back(ref);
    }
  }
  if (candidates.empty()) return span.front();
  if (candidates.size() == 1) return candidates.front();

  TokenRef best = candidates.front();
  int best_depth = Depth(doc.sentences[best.sentence], best.id);
  for (size_t i = 1; i < candidates.size(); ++i) {
    int depth = Depth(doc.sentences[candidates[i].sentence], candidates[i].id);
    if (depth < best_depth) {
      best = candidates[i];
      best_depth = depth;
    }
  }
  return best;
}

TokenRef MentionHead(const Mention &mention, const Document &doc,
                     HeadRule rule) {
  if (rule == HeadRule::kAnnotatedThenSyntactic && mention.annotated_head) {
    return mention.span[*mention.annotated_head - 1];
  }
  return SyntacticHead(doc, mention.span);
}

void AssignHeads(Document &doc, HeadRule rule) {
  for (Entity &entity : doc.entities) {
    for (Mention &mention : entity.mentions) {
      mention.head = MentionHead(mention, doc, rule);
    }
  }
}

}  // namespace corefkit
