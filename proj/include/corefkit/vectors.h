#ifndef COREFKIT_VECTORS_H_
#define COREFKIT_VECTORS_H_

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace corefkit {

// Externally computed mention embeddings, keyed by document, sentence index
// (0-based within the document) and span ids as rendered by SpanIds.
//
// File format: one row per mention, tab-separated:
//   doc_id  sentence  ids  v1 ... vd
class MentionVectors {
 public:
  static MentionVectors Load(std::istream &input, const std::string &file = "");

  // Throws DataError on dimension mismatch, non-finite values or duplicates.
  void Add(const std::string &doc_id, int sentence, const std::string &ids,
           std::vector<double> vector);

  const std::vector<double> *Find(const std::string &doc_id, int sentence,
                                  const std::string &ids) const;

  int dimension() const { return dimension_; }
  size_t size() const { return vectors_.size(); }

 private:
  static std::string Key(const std::string &doc_id, int sentence,
                         const std::string &ids);

  int dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

}  // namespace corefkit

#endif  // COREFKIT_VECTORS_H_
