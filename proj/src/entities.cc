#include "corefkit/entities.h"

#include <algorithm>
#include <charconv>
#include <map>

#include "corefkit/errors.h"

namespace corefkit {
namespace {

// "e1" or "e1[2/3]".
void ParseEntityRef(std::string_view text, std::string_view value,
                    Bracket *bracket) {
  size_t lb = text.find('[');
  if (lb == std::string_view::npos) {
    bracket->entity_id = std::string(text);
  } else {
    bracket->entity_id = std::string(text.substr(0, lb));
    std::string_view parts = text.substr(lb + 1);
    size_t slash = parts.find('/');
    size_t rb = parts.find(']');
    if (slash == std::string_view::npos || rb == std::string_view::npos ||
        rb != parts.size() - 1 || slash > rb) {
      throw DataError("malformed part index in Entity=" + std::string(value));
    }
    auto parse = [&](std::string_view digits, int *out) {
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), *out);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || *out < 1) {
        throw DataError("malformed part index in Entity=" + std::string(value));
      }
    };
    parse(parts.substr(0, slash), &bracket->part);
    parse(parts.substr(slash + 1, rb - slash - 1), &bracket->part_total);
    if (bracket->part > bracket->part_total) {
      throw DataError("part index beyond total in Entity=" + std::string(value));
    }
  }
  if (bracket->entity_id.empty()) {
    throw DataError("empty entity id in Entity=" + std::string(value));
  }
}

std::string StackKey(const Bracket &b) {
  if (b.part_total == 0) return b.entity_id;
  return b.entity_id + "[" + std::to_string(b.part) + "/" +
         std::to_string(b.part_total) + "]";
}

struct OpenMention {
  Bracket bracket;
  std::string key;
  std::vector<TokenRef> span;
  std::string sent_id;
  bool opened_here = false;
};

struct PendingParts {
  std::vector<OpenMention> parts;
};

}  // namespace

const std::vector<std::string> &DefaultEntityFields() {
  static const std::vector<std::string> fields = {"eid", "etype", "head",
                                                  "other"};
  return fields;
}

std::vector<Bracket> ParseEntityValue(std::string_view value) {
  std::vector<Bracket> brackets;
  size_t pos = 0;
  while (pos < value.size()) {
    Bracket bracket;
    if (value[pos] == '(') {
      size_t end = value.find_first_of("()", pos + 1);
      std::string_view content = value.substr(
          pos + 1, end == std::string_view::npos ? std::string_view::npos
                                                 : end - pos - 1);
      if (content.empty()) {
        throw DataError("empty bracket in Entity=" + std::string(value));
      }
      bracket.open = true;
      if (end != std::string_view::npos && value[end] == ')') {
        bracket.close = true;
        pos = end + 1;
      } else {
        pos = end == std::string_view::npos ? value.size() : end;
      }
      size_t dash = content.find('-');
      ParseEntityRef(content.substr(0, dash), value, &bracket);
      while (dash != std::string_view::npos) {
        size_t next = content.find('-', dash + 1);
        bracket.fields.emplace_back(content.substr(
            dash + 1,
            next == std::string_view::npos ? std::string_view::npos : next - dash - 1));
        dash = next;
      }
    } else {
      size_t end = value.find_first_of("()", pos);
      if (end == std::string_view::npos || value[end] != ')') {
        throw DataError("unterminated closing bracket in Entity=" +
                        std::string(value));
      }
      bracket.close = true;
      ParseEntityRef(value.substr(pos, end - pos), value, &bracket);
      pos = end + 1;
    }
    brackets.push_back(std::move(bracket));
  }
  return brackets;
}

std::vector<Entity> ResolveEntities(const Document &doc,
                                    const std::string &file) {
  const std::vector<std::string> &layout =
      doc.entity_fields.empty() ? DefaultEntityFields() : doc.entity_fields;

  std::vector<OpenMention> active;
  std::map<std::string, PendingParts> pending;  // eid/total -> closed parts
  std::vector<Mention> mentions;

  auto make_mention = [&](std::vector<OpenMention> parts) {
    Mention mention;
    mention.entity_id = parts.front().bracket.entity_id;
    mention.parts = static_cast<int>(parts.size());
    for (const OpenMention &part : parts) {
      mention.span.insert(mention.span.end(), part.span.begin(), part.span.end());
    }
    std::sort(mention.span.begin(), mention.span.end());
    mention.span.erase(std::unique(mention.span.begin(), mention.span.end()),
                       mention.span.end());
    mention.head = mention.span.front();

    // Attributes come from the first part that carries any.
    const Bracket *source = &parts.front().bracket;
    for (const OpenMention &part : parts) {
      if (!part.bracket.fields.empty()) {
        source = &part.bracket;
        break;
      }
    }
    const std::vector<std::string> &fields = source->fields;
    for (size_t i = 0; i < fields.size(); ++i) {
      size_t slot = std::min(i + 1, layout.size() - 1);
      if (slot == 0) break;
      std::string name = layout[slot];
      std::string value = fields[i];
      if (i + 1 > slot) {
        // Overflowing fields belong to the last declared one.
        mention.attributes.back().second += "-" + value;
        continue;
      }
      mention.attributes.emplace_back(std::move(name), std::move(value));
    }
    for (const auto &[name, value] : mention.attributes) {
      if (name != "head" || value.empty()) continue;
      int head = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), head);
      if (ec == std::errc() && ptr == value.data() + value.size() && head >= 1 &&
          head <= mention.size()) {
        mention.annotated_head = head;
      }
    }
    mentions.push_back(std::move(mention));
  };

  auto finalize = [&](size_t index) {
    OpenMention open = std::move(active[index]);
    active.erase(active.begin() + index);
    if (open.bracket.part_total == 0) {
      make_mention({std::move(open)});
      return;
    }
    std::string key =
        open.bracket.entity_id + "/" + std::to_string(open.bracket.part_total);
    PendingParts &group = pending[key];
    group.parts.push_back(std::move(open));
    if (static_cast<int>(group.parts.size()) == group.parts.front().bracket.part_total) {
      std::vector<OpenMention> parts = std::move(group.parts);
      pending.erase(key);
      std::sort(parts.begin(), parts.end(),
                [](const OpenMention &a, const OpenMention &b) {
                  return a.bracket.part < b.bracket.part;
                });
      make_mention(std::move(parts));
    }
  };

  for (int s = 0; s < static_cast<int>(doc.sentences.size()); ++s) {
    const Sentence &sentence = doc.sentences[s];
    for (const Token &token : sentence.tokens) {
      const std::string *value = token.misc.Find("Entity");
      std::vector<Bracket> brackets;
      if (value != nullptr) {
        try {
          brackets = ParseEntityValue(*value);
        } catch (const DataError &e) {
          throw DataError(file, 0,
                          "sentence " + sentence.sent_id + " token " +
                              token.id.ToString() + ": " + e.what());
        }
      }
      const TokenRef ref{s, token.id};

      for (const Bracket &b : brackets) {
        if (!b.open) continue;
        OpenMention open;
        open.bracket = b;
        open.key = StackKey(b);
        open.sent_id = sentence.sent_id;
        open.opened_here = true;
        active.push_back(std::move(open));
      }
      for (OpenMention &open : active) open.span.push_back(ref);

      for (const Bracket &b : brackets) {
        if (!b.close) continue;
        const std::string key = StackKey(b);
        std::optional<size_t> match;
        if (b.open) {
          for (size_t i = active.size(); i-- > 0;) {
            if (active[i].key == key && active[i].opened_here &&
                active[i].bracket.close) {
              match = i;
              break;
            }
          }
        } else {
          for (size_t i = active.size(); i-- > 0;) {
            if (active[i].key == key && !active[i].opened_here) {
              match = i;
              break;
            }
          }
          if (!match) {
            for (size_t i = active.size(); i-- > 0;) {
              if (active[i].key == key && !active[i].bracket.close) {
                match = i;
                break;
              }
            }
          }
        }
        if (!match) {
          throw DataError(file, 0,
                          "closing bracket of entity " + b.entity_id +
                              " without opening in sentence " +
                              sentence.sent_id + " token " +
                              token.id.ToString() + " of document " +
                              doc.doc_id);
        }
        finalize(*match);
      }
      for (OpenMention &open : active) open.opened_here = false;
    }
  }

  if (!active.empty()) {
    const OpenMention &open = active.front();
    throw DataError(file, 0,
                    "mention of entity " + open.bracket.entity_id +
                        " opened in sentence " + open.sent_id +
                        " is never closed in document " + doc.doc_id);
  }
  if (!pending.empty()) {
    const OpenMention &part = pending.begin()->second.parts.front();
    throw DataError(file, 0,
                    "discontinuous mention of entity " + part.bracket.entity_id +
                        " in sentence " + part.sent_id +
                        " is missing parts in document " + doc.doc_id);
  }

  std::map<std::string, Entity> by_id;
  for (Mention &mention : mentions) {
    Entity &entity = by_id[mention.entity_id];
    entity.entity_id = mention.entity_id;
    entity.mentions.push_back(std::move(mention));
  }
  std::vector<Entity> entities;
  entities.reserve(by_id.size());
  for (auto &[id, entity] : by_id) {
    std::sort(entity.mentions.begin(), entity.mentions.end(), MentionOrder);
    entities.push_back(std::move(entity));
  }
  std::sort(entities.begin(), entities.end(),
            [](const Entity &a, const Entity &b) {
              const Mention &ma = a.mentions.front();
              const Mention &mb = b.mentions.front();
              if (MentionOrder(ma, mb)) return true;
              if (MentionOrder(mb, ma)) return false;
              return a.entity_id < b.entity_id;
            });
  return entities;
}

}  // namespace corefkit
