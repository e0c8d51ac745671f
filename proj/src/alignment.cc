#include "corefkit/alignment.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "corefkit/errors.h"

namespace corefkit {

std::vector<MentionIndex> ListMentions(const Document &doc) {
  std::vector<MentionIndex> out;
  for (int e = 0; e < static_cast<int>(doc.entities.size()); ++e) {
    for (int m = 0; m < static_cast<int>(doc.entities[e].mentions.size()); ++m) {
      out.push_back({e, m});
    }
  }
  return out;
}

const Mention &MentionAt(const Document &doc, MentionIndex index) {
  return doc.entities[index.entity].mentions[index.mention];
}

int Alignment::matched() const {
  return static_cast<int>(std::count_if(pred_to_gold.begin(), pred_to_gold.end(),
                                        [](int g) { return g >= 0; }));
}

void CheckSameSegmentation(const Document &gold, const Document &pred) {
  if (gold.doc_id != pred.doc_id) {
    throw DataError("document mismatch: gold " + gold.doc_id + " vs system " +
                    pred.doc_id);
  }
  if (gold.sentences.size() != pred.sentences.size()) {
    throw DataError("document " + gold.doc_id + ": gold has " +
                    std::to_string(gold.sentences.size()) +
                    " sentences, system has " +
                    std::to_string(pred.sentences.size()));
  }
  for (size_t s = 0; s < gold.sentences.size(); ++s) {
    if (gold.sentences[s].SurfaceTokenCount() !=
        pred.sentences[s].SurfaceTokenCount()) {
      throw DataError("document " + gold.doc_id + ": sentence " +
                      gold.sentences[s].sent_id +
                      " has different tokenization in the system file");
    }
  }
}

Alignment AlignMentions(const Document &gold, const Document &pred,
                        MatchMode mode) {
  CheckSameSegmentation(gold, pred);
  Alignment a;
  a.gold_mentions = ListMentions(gold);
  a.pred_mentions = ListMentions(pred);
  a.pred_to_gold.assign(a.pred_mentions.size(), -1);
  a.gold_to_pred.assign(a.gold_mentions.size(), -1);

  // Candidate gold mentions by span (exact) or by head token (head mode).
  std::map<std::vector<TokenRef>, std::vector<int>> by_span;
  std::map<TokenRef, std::vector<int>> by_head;
  for (int g = 0; g < static_cast<int>(a.gold_mentions.size()); ++g) {
    const Mention &mention = MentionAt(gold, a.gold_mentions[g]);
    if (mode == MatchMode::kExact) {
      by_span[mention.span].push_back(g);
    } else {
      by_head[mention.head].push_back(g);
    }
  }
  auto smaller_gold = [&](int x, int y) {
    const Mention &mx = MentionAt(gold, a.gold_mentions[x]);
    const Mention &my = MentionAt(gold, a.gold_mentions[y]);
    if (mx.size() != my.size()) return mx.size() < my.size();
    if (MentionOrder(mx, my)) return true;
    if (MentionOrder(my, mx)) return false;
    return x < y;
  };

  std::vector<int> order(a.pred_mentions.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const Mention &mx = MentionAt(pred, a.pred_mentions[x]);
    const Mention &my = MentionAt(pred, a.pred_mentions[y]);
    if (mx.size() != my.size()) return mx.size() < my.size();
    return MentionOrder(mx, my);
  });

  for (int p : order) {
    const Mention &mention = MentionAt(pred, a.pred_mentions[p]);
    std::vector<int> candidates;
    if (mode == MatchMode::kExact) {
      auto it = by_span.find(mention.span);
      if (it != by_span.end()) candidates = it->second;
    } else {
      for (const TokenRef &ref : mention.span) {
        auto it = by_head.find(ref);
        if (it == by_head.end()) continue;
        for (int g : it->second) {
          const Mention &gm = MentionAt(gold, a.gold_mentions[g]);
          if (std::includes(gm.span.begin(), gm.span.end(), mention.span.begin(),
                            mention.span.end())) {
            candidates.push_back(g);
          }
        }
      }
    }
    int best = -1;
    for (int g : candidates) {
      if (a.gold_to_pred[g] >= 0) continue;
      if (best < 0 || smaller_gold(g, best)) best = g;
    }
    if (best >= 0) {
      a.pred_to_gold[p] = best;
      a.gold_to_pred[best] = p;
    }
  }
  return a;
}

namespace {

// doc_id|sentence|ids, with "#k" appended to repeated spans.
std::vector<MentionKey> SpanKeys(const Document &doc,
                                 const std::vector<MentionIndex> &mentions,
                                 const std::string &prefix) {
  std::vector<MentionKey> keys;
  std::map<MentionKey, int> seen;
  for (const MentionIndex &index : mentions) {
    const Mention &mention = MentionAt(doc, index);
    MentionKey key = prefix + doc.doc_id + "|" +
                     std::to_string(mention.start().sentence) + "|" +
                     SpanIds(doc, mention.span);
    int repeat = seen[key]++;
    if (repeat > 0) key += "#" + std::to_string(repeat);
    keys.push_back(std::move(key));
  }
  return keys;
}

}  // namespace

void BuildClusterSets(const Document &gold, const Document &pred,
                      const Alignment &alignment, SingletonPolicy policy,
                      ClusterSet *gold_set, ClusterSet *pred_set) {
  const std::vector<MentionKey> gold_keys =
      SpanKeys(gold, alignment.gold_mentions, "");
  const std::vector<MentionKey> pred_keys =
      SpanKeys(pred, alignment.pred_mentions, "sys:");
  std::vector<std::vector<MentionKey>> gold_clusters(gold.entities.size());
  for (size_t g = 0; g < gold_keys.size(); ++g) {
    gold_clusters[alignment.gold_mentions[g].entity].push_back(gold_keys[g]);
  }
  std::vector<std::vector<MentionKey>> pred_clusters(pred.entities.size());
  for (size_t p = 0; p < alignment.pred_mentions.size(); ++p) {
    const int g = alignment.pred_to_gold[p];
    pred_clusters[alignment.pred_mentions[p].entity].push_back(
        g >= 0 ? gold_keys[g] : pred_keys[p]);
  }
  *gold_set = ClusterSet(std::move(gold_clusters), policy);
  *pred_set = ClusterSet(std::move(pred_clusters), policy);
}

ScoreReport ScoreCorpus(const Corpus &gold, const Corpus &pred, MatchMode mode,
                        SingletonPolicy policy) {
  if (gold.documents.size() != pred.documents.size()) {
    throw DataError(gold.dataset + ": gold has " +
                    std::to_string(gold.documents.size()) +
                    " documents, system has " +
                    std::to_string(pred.documents.size()));
  }
  Scorer scorer;
  for (size_t d = 0; d < gold.documents.size(); ++d) {
    const Document &g = gold.documents[d];
    const Document &p = pred.documents[d];
    Alignment alignment = AlignMentions(g, p, mode);
    ClusterSet gold_set, pred_set;
    BuildClusterSets(g, p, alignment, policy, &gold_set, &pred_set);
    scorer.Add(gold_set, pred_set);
  }
  return scorer.Report(mode, policy);
}

}  // namespace corefkit
