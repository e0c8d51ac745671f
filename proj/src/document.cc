#include "corefkit/document.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "corefkit/errors.h"

namespace corefkit {
namespace {

bool ParseInt(std::string_view text, int *out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  return ec == std::errc() && ptr == text.data() + text.size() && *out >= 0;
}

// First "head:rel" pair of an enhanced DEPS column.
bool FirstEnhancedArc(const std::string &deps, std::string_view *head,
                      std::string_view *rel) {
  if (deps.empty() || deps == "_") return false;
  std::string_view arc(deps);
  arc = arc.substr(0, arc.find('|'));
  size_t colon = arc.find(':');
  if (colon == std::string_view::npos) return false;
  *head = arc.substr(0, colon);
  *rel = arc.substr(colon + 1);
  return true;
}

}  // namespace

std::string TokenId::ToString() const {
  if (empty == 0) return std::to_string(word);
  return std::to_string(word) + "." + std::to_string(empty);
}

std::optional<TokenId> TokenId::Parse(std::string_view text) {
  TokenId id;
  size_t dot = text.find('.');
  if (dot == std::string_view::npos) {
    if (!ParseInt(text, &id.word)) return std::nullopt;
    return id;
  }
  if (!ParseInt(text.substr(0, dot), &id.word)) return std::nullopt;
  if (!ParseInt(text.substr(dot + 1), &id.empty) || id.empty == 0) {
    return std::nullopt;
  }
  return id;
}

AttributeList AttributeList::Parse(std::string_view column) {
  AttributeList list;
  if (column == "_") return list;
  size_t pos = 0;
  while (true) {
    size_t bar = column.find('|', pos);
    std::string_view item = column.substr(
        pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
    Attribute attr;
    size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      attr.key = std::string(item);
    } else {
      attr.key = std::string(item.substr(0, eq));
      attr.value = std::string(item.substr(eq + 1));
    }
    list.items_.push_back(std::move(attr));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return list;
}

std::string AttributeList::ToString() const {
  if (items_.empty()) return "_";
  std::string out;
  for (size_t i = 0; i < items_.size(); ++i) {
    if (i > 0) out += '|';
    out += items_[i].key;
    if (items_[i].value) {
      out += '=';
      out += *items_[i].value;
    }
  }
  return out;
}

const std::string *AttributeList::Find(std::string_view key) const {
  for (const Attribute &attr : items_) {
    if (attr.key == key && attr.value) return &*attr.value;
  }
  return nullptr;
}

void AttributeList::Set(std::string_view key, std::string_view value) {
  for (Attribute &attr : items_) {
    if (attr.key == key) {
      attr.value = std::string(value);
      return;
    }
  }
  items_.push_back({std::string(key), std::string(value)});
}

std::optional<TokenId> Token::SyntacticHead() const {
  if (head) return head;
  std::string_view h, rel;
  if (!FirstEnhancedArc(deps, &h, &rel)) return std::nullopt;
  return TokenId::Parse(h);
}

std::string Token::Relation() const {
  if (!deprel.empty() && deprel != "_") return deprel;
  std::string_view h, rel;
  if (FirstEnhancedArc(deps, &h, &rel)) return std::string(rel);
  return deprel;
}

const Token *Sentence::Find(TokenId id) const {
  auto it = std::lower_bound(
      tokens.begin(), tokens.end(), id,
      [](const Token &t, const TokenId &key) { return t.id < key; });
  if (it == tokens.end() || it->id != id) return nullptr;
  return &*it;
}

int Sentence::SurfaceTokenCount() const {
  return static_cast<int>(std::count_if(
      tokens.begin(), tokens.end(), [](const Token &t) { return !t.is_empty(); }));
}

const Token *Document::FindToken(const TokenRef &ref) const {
  if (ref.sentence < 0 || ref.sentence >= static_cast<int>(sentences.size())) {
    return nullptr;
  }
  return sentences[ref.sentence].Find(ref.id);
}

const Token &Document::token(const TokenRef &ref) const {
  const Token *token = FindToken(ref);
  if (token == nullptr) {
    throw DataError("document " + doc_id + ": no token " + ref.id.ToString() +
                    " in sentence " + std::to_string(ref.sentence));
  }
  return *token;
}

int Document::MentionCount() const {
  int count = 0;
  for (const Entity &entity : entities) count += entity.mentions.size();
  return count;
}

int Corpus::MentionCount() const {
  int count = 0;
  for (const Document &doc : documents) count += doc.MentionCount();
  return count;
}

int Corpus::EntityCount() const {
  int count = 0;
  for (const Document &doc : documents) count += doc.entities.size();
  return count;
}

bool MentionOrder(const Mention &a, const Mention &b) {
  if (a.start() != b.start()) return a.start() < b.start();
  if (a.end() != b.end()) return a.end() < b.end();
  return a.span.size() < b.span.size();
}

std::string SpanIds(const Document &doc, const std::vector<TokenRef> &span) {
  std::string out;
  if (span.empty()) return out;
  const int first_sentence = span.front().sentence;
  for (size_t i = 0; i < span.size(); ++i) {
    const TokenRef &ref = span[i];
    if (i > 0) {
      const TokenRef &prev = span[i - 1];
      bool adjacent = false;
      if (prev.sentence == ref.sentence) {
        const Sentence &sentence = doc.sentences[ref.sentence];
        const Token *a = sentence.Find(prev.id);
        const Token *b = sentence.Find(ref.id);
        adjacent = a != nullptr && b != nullptr && b - a == 1;
      }
      out += adjacent ? ',' : '+';
    }
    if (ref.sentence != first_sentence) {
      out += std::to_string(ref.sentence) + ":";
    }
    out += ref.id.ToString();
  }
  return out;
}

}  // namespace corefkit
