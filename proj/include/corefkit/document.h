// Typed document model for CoNLL-U files carrying CorefUD coreference
// annotation.

#ifndef COREFKIT_DOCUMENT_H_
#define COREFKIT_DOCUMENT_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace corefkit {

// Token identifier within a sentence. Surface words have empty == 0; empty
// nodes ("3.1") have a nonzero minor part anchored after word 3.
struct TokenId {
  int word = 0;
  int empty = 0;

  bool is_empty() const { return empty != 0; }
  std::string ToString() const;
  static std::optional<TokenId> Parse(std::string_view text);

  auto operator<=>(const TokenId &) const = default;
};

// Document position of a token: sentence ordinal (0-based) plus token id.
// Lexicographic order is document order.
struct TokenRef {
  int sentence = 0;
  TokenId id;

  auto operator<=>(const TokenRef &) const = default;
};

// Ordered '|'-separated attribute column (FEATS, MISC). Items without '='
// keep an absent value so the column serializes back verbatim.
struct Attribute {
  std::string key;
  std::optional<std::string> value;

  bool operator==(const Attribute &) const = default;
};

class AttributeList {
 public:
  AttributeList() = default;

  static AttributeList Parse(std::string_view column);
  std::string ToString() const;

  const std::string *Find(std::string_view key) const;
  void Set(std::string_view key, std::string_view value);

  const std::vector<Attribute> &items() const { return items_; }
  bool empty() const { return items_.empty(); }

  bool operator==(const AttributeList &) const = default;

 private:
  std::vector<Attribute> items_;
};

struct Token {
  TokenId id;
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos;
  AttributeList feats;
  std::optional<TokenId> head;  // absent when the HEAD column is "_"
  std::string deprel;
  std::string deps;  // enhanced graph, kept raw
  AttributeList misc;

  bool is_empty() const { return id.is_empty(); }

  // Parent in the basic tree, or the first enhanced head for empty nodes.
  std::optional<TokenId> SyntacticHead() const;
  // DEPREL, or the first enhanced relation for empty nodes.
  std::string Relation() const;

  bool operator==(const Token &) const = default;
};

// A multiword-token range line ("1-2 del _ ..."). Stored for round trip,
// never indexed.
struct MultiwordToken {
  int first = 0;
  int last = 0;
  std::string line;

  bool operator==(const MultiwordToken &) const = default;
};

struct Sentence {
  std::vector<std::string> comments;  // raw lines, including '#'
  std::string sent_id;
  std::optional<std::string> text;
  std::vector<Token> tokens;  // file order, empty nodes interleaved
  std::vector<MultiwordToken> multiword;

  const Token *Find(TokenId id) const;
  int SurfaceTokenCount() const;

  bool operator==(const Sentence &) const = default;
};

struct Mention {
  std::string entity_id;
  std::vector<TokenRef> span;  // sorted, gaps allowed
  int parts = 1;               // number of discontinuous parts merged
  TokenRef head;
  std::optional<int> annotated_head;  // 1-based position within span
  std::vector<std::pair<std::string, std::string>> attributes;

  TokenRef start() const { return span.front(); }
  TokenRef end() const { return span.back(); }
  int size() const { return static_cast<int>(span.size()); }

  bool operator==(const Mention &) const = default;
};

struct Entity {
  std::string entity_id;
  std::vector<Mention> mentions;  // by start, then earlier end

  bool singleton() const { return mentions.size() == 1; }

  bool operator==(const Entity &) const = default;
};

struct Document {
  std::string doc_id;
  std::vector<Sentence> sentences;
  std::vector<Entity> entities;
  std::optional<std::string> genre;
  std::string language;
  std::string dataset;
  // Field layout of the opening brackets, from "# global.Entity".
  std::vector<std::string> entity_fields;

  const Token &token(const TokenRef &ref) const;
  const Token *FindToken(const TokenRef &ref) const;
  int MentionCount() const;

  bool operator==(const Document &) const = default;
};

struct Corpus {
  std::string dataset;
  std::string language;
  std::vector<Document> documents;

  int MentionCount() const;
  int EntityCount() const;

  bool operator==(const Corpus &) const = default;
};

// Orders mentions by start position, shorter first on ties.
bool MentionOrder(const Mention &a, const Mention &b);

// Token ids of a span relative to its first sentence: comma-joined within a
// contiguous part, parts joined by '+'. Tokens of later sentences are written
// "<sentence>:<id>". Stable across files sharing sentence segmentation.
std::string SpanIds(const Document &doc, const std::vector<TokenRef> &span);

}  // namespace corefkit

#endif  // COREFKIT_DOCUMENT_H_
