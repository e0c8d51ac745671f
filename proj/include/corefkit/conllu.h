// CoNLL-U reader and writer with CorefUD entity decoding.

#ifndef COREFKIT_CONLLU_H_
#define COREFKIT_CONLLU_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "corefkit/document.h"
#include "corefkit/errors.h"
#include "corefkit/mention_head.h"

namespace corefkit {

struct ParseOptions {
  std::string dataset;
  std::string language;
  std::string file;  // used in error messages only
  HeadRule head_rule = HeadRule::kAnnotatedThenSyntactic;
};

// Parses a whole CoNLL-U stream. Sentences preceding the first
// "# newdoc" line form a document with an empty id. Throws DataError on
// malformed input; non-fatal findings go to `diagnostics` when given.
Corpus ParseConllu(std::istream &input, const ParseOptions &options,
                   Diagnostics *diagnostics = nullptr);
Corpus ParseConllu(std::string_view text, const ParseOptions &options,
                   Diagnostics *diagnostics = nullptr);

// Writes the corpus back in CoNLL-U. Byte-identical to the parsed input when
// that input was canonical (LF endings, no trailing whitespace, exactly one
// blank line after each sentence).
void Serialize(const Corpus &corpus, std::ostream &output);
std::string Serialize(const Corpus &corpus);

// Dataset naming follows the CorefUD release layout:
// "ca_ancora-corefud-train.conllu" -> dataset "ca_ancora", language "ca",
// split "train".
struct DatasetName {
  std::string dataset;
  std::string language;
  std::string split;
};
DatasetName DatasetFromPath(const std::filesystem::path &path);

// Reads and parses one file; dataset and language come from its name.
Corpus LoadCorpus(const std::filesystem::path &path,
                  HeadRule head_rule = HeadRule::kAnnotatedThenSyntactic,
                  Diagnostics *diagnostics = nullptr);

// Joins corpora of the same dataset, keeping first-seen dataset order and
// document order within each dataset.
std::vector<Corpus> JoinByDataset(std::vector<Corpus> parsed);

// All *.conllu files below `root` (or `root` itself), sorted by path.
std::vector<std::filesystem::path> FindConlluFiles(
    const std::filesystem::path &root, std::string_view split = "");

}  // namespace corefkit

#endif  // COREFKIT_CONLLU_H_
