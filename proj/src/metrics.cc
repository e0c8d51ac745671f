#include "corefkit/metrics.h"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "corefkit/errors.h"

namespace corefkit {
namespace {

using ClusterIndex = std::unordered_map<std::string_view, int>;

ClusterIndex IndexClusters(const ClusterSet &set) {
  ClusterIndex index;
  for (int c = 0; c < static_cast<int>(set.size()); ++c) {
    for (const MentionKey &key : set.clusters()[c]) index.emplace(key, c);
  }
  return index;
}

// Sum over clusters of (|c| - partitions(c)) and (|c| - 1).
void MucSide(const ClusterSet &side, const ClusterIndex &other, double *num,
             double *den) {
  for (const auto &cluster : side.clusters()) {
    std::unordered_set<int> parts;
    int unmatched = 0;
    for (const MentionKey &key : cluster) {
      auto it = other.find(key);
      if (it == other.end()) {
        ++unmatched;
      } else {
        parts.insert(it->second);
      }
    }
    const double size = cluster.size();
    *num += size - (parts.size() + unmatched);
    *den += size - 1;
  }
}

void BCubedSide(const ClusterSet &side, const ClusterIndex &other, double *num,
                double *den) {
  for (const auto &cluster : side.clusters()) {
    std::unordered_map<int, int> overlap;
    for (const MentionKey &key : cluster) {
      auto it = other.find(key);
      if (it != other.end()) ++overlap[it->second];
    }
    double sum = 0.0;
    for (const auto &[c, n] : overlap) sum += static_cast<double>(n) * n;
    *num += sum / cluster.size();
    *den += cluster.size();
  }
}

}  // namespace

ClusterSet::ClusterSet(std::vector<std::vector<MentionKey>> clusters,
                       SingletonPolicy policy) {
  std::unordered_set<std::string_view> seen;
  for (const auto &cluster : clusters) {
    if (cluster.empty()) throw DataError("empty cluster");
    for (const MentionKey &key : cluster) {
      if (!seen.insert(key).second) {
        throw DataError("mention " + key + " appears in more than one cluster");
      }
    }
  }
  for (auto &cluster : clusters) {
    if (policy == SingletonPolicy::kExclude && cluster.size() == 1) continue;
    clusters_.push_back(std::move(cluster));
  }
}

size_t ClusterSet::mention_count() const {
  size_t n = 0;
  for (const auto &cluster : clusters_) n += cluster.size();
  return n;
}

double F1(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

Prf MetricCounts::Score() const {
  Prf prf;
  prf.recall = recall_den == 0.0 ? 0.0 : recall_num / recall_den;
  prf.precision = precision_den == 0.0 ? 0.0 : precision_num / precision_den;
  prf.f1 = F1(prf.precision, prf.recall);
  return prf;
}

MetricCounts &MetricCounts::operator+=(const MetricCounts &other) {
  recall_num += other.recall_num;
  recall_den += other.recall_den;
  precision_num += other.precision_num;
  precision_den += other.precision_den;
  return *this;
}

MetricCounts MucCounts(const ClusterSet &gold, const ClusterSet &pred) {
  MetricCounts counts;
  MucSide(gold, IndexClusters(pred), &counts.recall_num, &counts.recall_den);
  MucSide(pred, IndexClusters(gold), &counts.precision_num, &counts.precision_den);
  return counts;
}

MetricCounts BCubedCounts(const ClusterSet &gold, const ClusterSet &pred) {
  MetricCounts counts;
  BCubedSide(gold, IndexClusters(pred), &counts.recall_num, &counts.recall_den);
  BCubedSide(pred, IndexClusters(gold), &counts.precision_num,
             &counts.precision_den);
  return counts;
}

double EntitySimilarity(const std::vector<MentionKey> &key,
                        const std::vector<MentionKey> &response) {
  if (key.empty() && response.empty()) return 0.0;
  std::unordered_set<std::string_view> keys(key.begin(), key.end());
  int common = 0;
  for (const MentionKey &m : response) common += keys.count(m);
  return 2.0 * common / (key.size() + response.size());
}

std::vector<int> MaxWeightAssignment(
    const std::vector<std::vector<double>> &weights) {
  const int rows = static_cast<int>(weights.size());
  if (rows == 0) return {};
  const int cols = static_cast<int>(weights.front().size());
  if (cols == 0) return std::vector<int>(rows, -1);

  // Square cost matrix (padded with zero weights), minimized with
  // potentials; 1-based as in the classical formulation.
  const int n = std::max(rows, cols);
  double max_weight = 0.0;
  for (const auto &row : weights) {
    for (double w : row) max_weight = std::max(max_weight, w);
  }
  auto cost = [&](int i, int j) {
    double w = (i <= rows && j <= cols) ? weights[i - 1][j - 1] : 0.0;
    return max_weight - w;
  };

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = match[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> assignment(rows, -1);
  for (int j = 1; j <= n; ++j) {
    const int i = match[j];
    if (i >= 1 && i <= rows && j <= cols) assignment[i - 1] = j - 1;
  }
  return assignment;
}

MetricCounts CeafeCounts(const ClusterSet &gold, const ClusterSet &pred) {
  MetricCounts counts;
  counts.recall_den = gold.size();
  counts.precision_den = pred.size();
  if (gold.size() == 0 || pred.size() == 0) return counts;

  // Nonzero similarities only; the optimum decomposes over connected
  // components of the overlap graph.
  const ClusterIndex pred_index = IndexClusters(pred);
  const int num_gold = static_cast<int>(gold.size());
  std::vector<std::vector<std::pair<int, double>>> edges(num_gold);
  std::vector<int> parent(num_gold + pred.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int g = 0; g < num_gold; ++g) {
    std::unordered_map<int, int> overlap;
    for (const MentionKey &key : gold.clusters()[g]) {
      auto it = pred_index.find(key);
      if (it != pred_index.end()) ++overlap[it->second];
    }
    for (const auto &[p, common] : overlap) {
      edges[g].emplace_back(
          p, 2.0 * common /
                 (gold.clusters()[g].size() + pred.clusters()[p].size()));
      parent[find(g)] = find(num_gold + p);
    }
    std::sort(edges[g].begin(), edges[g].end());
  }

  std::map<int, std::pair<std::vector<int>, std::vector<int>>> components;
  for (int g = 0; g < num_gold; ++g) {
    if (!edges[g].empty()) components[find(g)].first.push_back(g);
  }
  for (int p = 0; p < static_cast<int>(pred.size()); ++p) {
    auto it = components.find(find(num_gold + p));
    if (it != components.end()) it->second.second.push_back(p);
  }

  double total = 0.0;
  for (const auto &[root, members] : components) {
    const auto &[rows, cols] = members;
    std::unordered_map<int, int> col_of;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) col_of[cols[j]] = j;
    std::vector<std::vector<double>> weights(rows.size(),
                                             std::vector<double>(cols.size(), 0.0));
    for (size_t i = 0; i < rows.size(); ++i) {
      for (const auto &[p, w] : edges[rows[i]]) weights[i][col_of[p]] = w;
    }
    std::vector<int> assignment = MaxWeightAssignment(weights);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (assignment[i] >= 0) total += weights[i][assignment[i]];
    }
  }
  counts.recall_num = total;
  counts.precision_num = total;
  return counts;
}

void Scorer::Add(const ClusterSet &gold, const ClusterSet &pred) {
  muc_ += MucCounts(gold, pred);
  b_cubed_ += BCubedCounts(gold, pred);
  ceafe_ += CeafeCounts(gold, pred);
}

ScoreReport Scorer::Report(MatchMode mode, SingletonPolicy singletons) const {
  ScoreReport report;
  report.muc = muc_.Score();
  report.b_cubed = b_cubed_.Score();
  report.ceafe = ceafe_.Score();
  report.conll_f1 = ConllF1(report);
  report.mode = mode;
  report.singletons = singletons;
  return report;
}

double ConllF1(double muc_f1, double b_cubed_f1, double ceafe_f1) {
  return (muc_f1 + b_cubed_f1 + ceafe_f1) / 3.0;
}

double ConllF1(const ScoreReport &report) {
  return ConllF1(report.muc.f1, report.b_cubed.f1, report.ceafe.f1);
}

double MacroAverage(const std::vector<double> &values) {
  if (values.empty()) {
    throw std::invalid_argument("macro average of an empty report list");
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / values.size();
}

}  // namespace corefkit
