#include "corefkit/vectors.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>

#include "corefkit/errors.h"

namespace corefkit {

std::string MentionVectors::Key(const std::string &doc_id, int sentence,
                                const std::string &ids) {
  return doc_id + '\t' + std::to_string(sentence) + '\t' + ids;
}

void MentionVectors::Add(const std::string &doc_id, int sentence,
                         const std::string &ids, std::vector<double> vector) {
  if (vector.empty()) throw DataError("mention " + ids + ": empty vector");
  if (dimension_ == 0) dimension_ = static_cast<int>(vector.size());
  if (static_cast<int>(vector.size()) != dimension_) {
    throw DataError("mention " + doc_id + " " + std::to_string(sentence) + " " +
                    ids + ": dimension " + std::to_string(vector.size()) +
                    " differs from " + std::to_string(dimension_));
  }
  for (double v : vector) {
    if (!std::isfinite(v)) {
      throw DataError("mention " + doc_id + " " + std::to_string(sentence) +
                      " " + ids + ": non-finite component");
    }
  }
  if (!vectors_.emplace(Key(doc_id, sentence, ids), std::move(vector)).second) {
    throw DataError("duplicate vector for mention " + doc_id + " " +
                    std::to_string(sentence) + " " + ids);
  }
}

const std::vector<double> *MentionVectors::Find(const std::string &doc_id,
                                                int sentence,
                                                const std::string &ids) const {
  auto it = vectors_.find(Key(doc_id, sentence, ids));
  return it == vectors_.end() ? nullptr : &it->second;
}

MentionVectors MentionVectors::Load(std::istream &input,
                                    const std::string &file) {
  MentionVectors vectors;
  std::string line;
  int line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      cols.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos
                                                                : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (cols.size() < 4) {
      throw DataError(file, line_no, "expected doc_id, sentence, ids and values");
    }
    int sentence = 0;
    auto [p, ec] = std::from_chars(cols[1].data(), cols[1].data() + cols[1].size(),
                                   sentence);
    if (ec != std::errc() || p != cols[1].data() + cols[1].size()) {
      throw DataError(file, line_no, "bad sentence index " + cols[1]);
    }
    std::vector<double> values;
    values.reserve(cols.size() - 3);
    for (size_t i = 3; i < cols.size(); ++i) {
      char *end = nullptr;
      double v = std::strtod(cols[i].c_str(), &end);
      if (cols[i].empty() || end != cols[i].c_str() + cols[i].size()) {
        throw DataError(file, line_no, "bad vector component " + cols[i]);
      }
      values.push_back(v);
    }
    try {
      vectors.Add(cols[0], sentence, cols[2], std::move(values));
    } catch (const DataError &e) {
      throw DataError(file, line_no, e.detail());
    }
  }
  return vectors;
}

}  // namespace corefkit
