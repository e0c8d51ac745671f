// Gold/system mention alignment and document-level scoring.

#ifndef COREFKIT_ALIGNMENT_H_
#define COREFKIT_ALIGNMENT_H_

#include <vector>

#include "corefkit/document.h"
#include "corefkit/metrics.h"

namespace corefkit {

// Position of a mention inside Document::entities.
struct MentionIndex {
  int entity = -1;
  int mention = -1;

  bool valid() const { return entity >= 0; }
  auto operator<=>(const MentionIndex &) const = default;
};

// All mentions of a document in entity order.
std::vector<MentionIndex> ListMentions(const Document &doc);
const Mention &MentionAt(const Document &doc, MentionIndex index);

struct Alignment {
  // Parallel to ListMentions(pred) and ListMentions(gold).
  std::vector<MentionIndex> pred_mentions;
  std::vector<MentionIndex> gold_mentions;
  std::vector<int> pred_to_gold;  // index into gold_mentions or -1
  std::vector<int> gold_to_pred;  // index into pred_mentions or -1

  int matched() const;
};

// Throws DataError when the documents differ in id or sentence segmentation
// (sentence count or surface tokens per sentence).
void CheckSameSegmentation(const Document &gold, const Document &pred);

// Exact: identical token sets. Head: the system span contains the gold head
// and lies inside the gold span. Each mention is matched at most once;
// system mentions are visited by ascending span length and take the
// smallest eligible gold mention.
Alignment AlignMentions(const Document &gold, const Document &pred,
                        MatchMode mode);

// Cluster sets over shared keys: gold mentions keyed by position, system
// mentions by their aligned gold key or a system-only key.
void BuildClusterSets(const Document &gold, const Document &pred,
                      const Alignment &alignment, SingletonPolicy policy,
                      ClusterSet *gold_set, ClusterSet *pred_set);

// Scores aligned corpora document by document (documents paired by
// position, ids must agree).
ScoreReport ScoreCorpus(const Corpus &gold, const Corpus &pred, MatchMode mode,
                        SingletonPolicy policy);

}  // namespace corefkit

#endif  // COREFKIT_ALIGNMENT_H_
