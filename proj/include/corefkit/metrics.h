// Coreference evaluation: MUC, B-cubed, CEAFe and the CoNLL average.
//
// Each metric is computed as recall and precision numerators/denominators
// so per-document results can be summed into dataset-level scores.

#ifndef COREFKIT_METRICS_H_
#define COREFKIT_METRICS_H_

#include <string>
#include <vector>

namespace corefkit {

using MentionKey = std::string;

enum class SingletonPolicy { kInclude, kExclude };

class ClusterSet {
 public:
  ClusterSet() = default;

  // Throws DataError when clusters overlap or one is empty. Under kExclude
  // clusters of size one are dropped.
  ClusterSet(std::vector<std::vector<MentionKey>> clusters,
             SingletonPolicy policy = SingletonPolicy::kInclude);

  const std::vector<std::vector<MentionKey>> &clusters() const {
    return clusters_;
  }
  size_t size() const { return clusters_.size(); }
  size_t mention_count() const;

 private:
  std::vector<std::vector<MentionKey>> clusters_;
};

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Harmonic mean, 0 when both are 0.
double F1(double precision, double recall);

struct MetricCounts {
  double recall_num = 0.0;
  double recall_den = 0.0;
  double precision_num = 0.0;
  double precision_den = 0.0;

  Prf Score() const;
  MetricCounts &operator+=(const MetricCounts &other);
};

MetricCounts MucCounts(const ClusterSet &gold, const ClusterSet &pred);
MetricCounts BCubedCounts(const ClusterSet &gold, const ClusterSet &pred);
MetricCounts CeafeCounts(const ClusterSet &gold, const ClusterSet &pred);

inline Prf Muc(const ClusterSet &gold, const ClusterSet &pred) {
  return MucCounts(gold, pred).Score();
}
inline Prf BCubed(const ClusterSet &gold, const ClusterSet &pred) {
  return BCubedCounts(gold, pred).Score();
}
inline Prf Ceafe(const ClusterSet &gold, const ClusterSet &pred) {
  return CeafeCounts(gold, pred).Score();
}

// Entity similarity 2|K∩R| / (|K|+|R|).
double EntitySimilarity(const std::vector<MentionKey> &key,
                        const std::vector<MentionKey> &response);

// Optimal one-to-one assignment maximizing the summed weight of a
// rectangular matrix of non-negative weights (Hungarian method). Returns the
// column of each row, or -1 for rows left unassigned.
std::vector<int> MaxWeightAssignment(
    const std::vector<std::vector<double>> &weights);

enum class MatchMode { kExact, kHead };

struct ScoreReport {
  Prf muc;
  Prf b_cubed;
  Prf ceafe;
  double conll_f1 = 0.0;
  MatchMode mode = MatchMode::kExact;
  SingletonPolicy singletons = SingletonPolicy::kExclude;
};

// Accumulates per-document counts into one report.
class Scorer {
 public:
  void Add(const ClusterSet &gold, const ClusterSet &pred);
  ScoreReport Report(MatchMode mode, SingletonPolicy singletons) const;

 private:
  MetricCounts muc_, b_cubed_, ceafe_;
};

double ConllF1(const ScoreReport &report);
double ConllF1(double muc_f1, double b_cubed_f1, double ceafe_f1);

// Unweighted mean. Throws std::invalid_argument on an empty list.
double MacroAverage(const std::vector<double> &values);

}  // namespace corefkit

#endif  // COREFKIT_METRICS_H_
