#include "corefkit/conllu.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "corefkit/entities.h"

namespace corefkit {
namespace {

constexpr int kColumns = 10;

std::string_view StripTrailing(std::string_view line) {
  while (!line.empty() &&
         (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.remove_suffix(1);
  }
  return line;
}

// Value of a "# key = value" comment, or nullopt when the key differs.
std::optional<std::string_view> CommentValue(std::string_view line,
                                             std::string_view key) {
  std::string_view body = line.substr(1);
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  if (body.substr(0, key.size()) != key) return std::nullopt;
  body.remove_prefix(key.size());
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  if (body.empty()) return std::string_view();
  if (body.front() != '=') return std::nullopt;
  body.remove_prefix(1);
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  return body;
}

std::vector<std::string> SplitFields(std::string_view text, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = text.find(sep, pos);
    out.emplace_back(text.substr(pos, next == std::string_view::npos
                                          ? std::string_view::npos
                                          : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

class Parser {
 public:
  Parser(const ParseOptions &options, Diagnostics *diagnostics)
      : options_(options), diagnostics_(diagnostics) {
    corpus_.dataset = options.dataset;
    corpus_.language = options.language;
    entity_fields_ = DefaultEntityFields();
  }

  void Feed(int line_no, std::string_view line) {
    line = StripTrailing(line);
    if (line.empty()) {
      if (!sentence_.tokens.empty()) FinishSentence(line_no);
      return;
    }
    if (line.front() == '#') {
      if (!sentence_.tokens.empty()) {
        throw DataError(options_.file, line_no,
                        "comment line inside sentence " + sentence_.sent_id);
      }
      Comment(line_no, line);
      return;
    }
    if (sentence_.tokens.empty() && sentence_.multiword.empty()) {
      sentence_line_ = line_no;
    }
    TokenLine(line_no, line);
  }

  Corpus Finish(int line_no) {
    if (!sentence_.tokens.empty()) FinishSentence(line_no);
    if (!sentence_.comments.empty()) {
      throw DataError(options_.file, line_no,
                      "comment lines after the last sentence");
    }
    FinishDocument();
    return std::move(corpus_);
  }

 private:
  void Comment(int line_no, std::string_view line) {
    std::optional<std::string_view> id = CommentValue(line, "newdoc id");
    if (!id) id = CommentValue(line, "newdoc");
    if (id) {
      pending_newdoc_ = true;
      pending_doc_id_ = std::string(*id);
      if (pending_doc_id_.empty()) {
        pending_doc_id_ = "doc" + std::to_string(corpus_.documents.size() + 1);
      }
    } else if (auto fields = CommentValue(line, "global.Entity")) {
      entity_fields_ = SplitFields(*fields, '-');
      if (entity_fields_.empty() || entity_fields_.front() != "eid") {
        throw DataError(options_.file, line_no,
                        "global.Entity must start with eid");
      }
    } else if (auto sent_id = CommentValue(line, "sent_id")) {
      sentence_.sent_id = std::string(*sent_id);
    } else if (auto text = CommentValue(line, "text")) {
      sentence_.text = std::string(*text);
    }
    sentence_.comments.emplace_back(line);
  }

  void TokenLine(int line_no, std::string_view line) {
    std::array<std::string_view, kColumns> cols;
    int n = 0;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      if (n == kColumns) {
        throw DataError(options_.file, line_no,
                        "expected 10 tab-separated columns, found more");
      }
      cols[n++] = line.substr(
          pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos);
      if (tab == std::string_view::npos) break;
      pos = tab + 1;
    }
    if (n != kColumns) {
      throw DataError(options_.file, line_no,
                      "expected 10 tab-separated columns, found " +
                          std::to_string(n));
    }

    size_t dash = cols[0].find('-');
    if (dash != std::string_view::npos) {
      auto first = TokenId::Parse(cols[0].substr(0, dash));
      auto last = TokenId::Parse(cols[0].substr(dash + 1));
      if (!first || !last || first->is_empty() || last->is_empty() ||
          first->word != last_word_ + 1 || last->word < first->word) {
        throw DataError(options_.file, line_no,
                        "bad multiword token range " + std::string(cols[0]));
      }
      sentence_.multiword.push_back(
          {first->word, last->word, std::string(line)});
      return;
    }

    auto id = TokenId::Parse(cols[0]);
    if (!id) {
      throw DataError(options_.file, line_no,
                      "bad token id " + std::string(cols[0]));
    }
    bool monotonic;
    if (id->is_empty()) {
      monotonic = id->word == last_word_ &&
                  id->empty == (last_empty_word_ == last_word_ ? last_empty_ + 1 : 1);
    } else {
      monotonic = id->word == last_word_ + 1;
    }
    if (!monotonic) {
      throw DataError(options_.file, line_no,
                      "non-monotonic token id " + id->ToString() +
                          " in sentence " + sentence_.sent_id);
    }
    if (id->is_empty()) {
      last_empty_word_ = id->word;
      last_empty_ = id->empty;
    } else {
      last_word_ = id->word;
    }

    Token token;
    token.id = *id;
    token.form = std::string(cols[1]);
    token.lemma = std::string(cols[2]);
    token.upos = std::string(cols[3]);
    token.xpos = std::string(cols[4]);
    token.feats = AttributeList::Parse(cols[5]);
    if (cols[6] != "_") {
      auto head = TokenId::Parse(cols[6]);
      if (!head || head->is_empty()) {
        throw DataError(options_.file, line_no,
                        "bad head " + std::string(cols[6]));
      }
      token.head = *head;
    }
    token.deprel = std::string(cols[7]);
    token.deps = std::string(cols[8]);
    token.misc = AttributeList::Parse(cols[9]);
    sentence_.tokens.push_back(std::move(token));
  }

  void FinishSentence(int line_no) {
    const int words = last_word_;
    for (const Token &token : sentence_.tokens) {
      if (token.head && token.head->word > words) {
        throw DataError(options_.file, sentence_line_,
                        "token " + token.id.ToString() + " of sentence " +
                            sentence_.sent_id + " has head " +
                            token.head->ToString() + " outside the sentence");
      }
    }
    for (const MultiwordToken &mwt : sentence_.multiword) {
      if (mwt.last > words) {
        throw DataError(options_.file, sentence_line_,
                        "multiword range past the end of sentence " +
                            sentence_.sent_id);
      }
    }
    if (words == 0) {
      throw DataError(options_.file, line_no,
                      "sentence without surface tokens");
    }

    if (pending_newdoc_ || (corpus_.documents.empty() && !has_sentences_)) {
      if (has_sentences_) FinishDocument();
      doc_ = Document();
      doc_.doc_id = pending_newdoc_ ? pending_doc_id_ : "";
      doc_.dataset = options_.dataset;
      doc_.language = options_.language;
      sent_ids_.clear();
      pending_newdoc_ = false;
    }
    if (!sentence_.sent_id.empty() && !sent_ids_.insert(sentence_.sent_id).second) {
      if (diagnostics_ != nullptr) {
        diagnostics_->Warn(options_.file, sentence_line_,
                           "duplicated sent_id " + sentence_.sent_id +
                               " in document " + doc_.doc_id);
      }
    }
    doc_.entity_fields = entity_fields_;
    doc_.sentences.push_back(std::move(sentence_));
    has_sentences_ = true;
    sentence_ = Sentence();
    last_word_ = 0;
    last_empty_word_ = -1;
    last_empty_ = 0;
  }

  void FinishDocument() {
    if (!has_sentences_) return;
    doc_.entities = ResolveEntities(doc_, options_.file);
    AssignHeads(doc_, options_.head_rule);
    corpus_.documents.push_back(std::move(doc_));
    doc_ = Document();
    has_sentences_ = false;
  }

  const ParseOptions &options_;
  Diagnostics *diagnostics_;
  Corpus corpus_;
  Document doc_;
  Sentence sentence_;
  std::set<std::string> sent_ids_;
  std::vector<std::string> entity_fields_;
  bool has_sentences_ = false;
  bool pending_newdoc_ = false;
  std::string pending_doc_id_;
  int sentence_line_ = 0;
  int last_word_ = 0;
  int last_empty_word_ = -1;
  int last_empty_ = 0;
};

void WriteToken(const Token &token, std::string &out) {
  out += token.id.ToString();
  for (const std::string *col : {&token.form, &token.lemma, &token.upos,
                                 &token.xpos}) {
    out += '\t';
    out += *col;
  }
  out += '\t';
  out += token.feats.ToString();
  out += '\t';
  out += token.head ? token.head->ToString() : "_";
  out += '\t';
  out += token.deprel;
  out += '\t';
  out += token.deps;
  out += '\t';
  out += token.misc.ToString();
  out += '\n';
}

}  // namespace

Corpus ParseConllu(std::string_view text, const ParseOptions &options,
                   Diagnostics *diagnostics) {
  Parser parser(options, diagnostics);
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    parser.Feed(++line_no, text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return parser.Finish(line_no);
}

Corpus ParseConllu(std::istream &input, const ParseOptions &options,
                   Diagnostics *diagnostics) {
  std::string text(std::istreambuf_iterator<char>(input), {});
  return ParseConllu(std::string_view(text), options, diagnostics);
}

std::string Serialize(const Corpus &corpus) {
  std::string out;
  for (const Document &doc : corpus.documents) {
    for (const Sentence &sentence : doc.sentences) {
      for (const std::string &comment : sentence.comments) {
        out += comment;
        out += '\n';
      }
      auto mwt = sentence.multiword.begin();
      for (const Token &token : sentence.tokens) {
        while (mwt != sentence.multiword.end() && !token.is_empty() &&
               mwt->first == token.id.word) {
          out += mwt->line;
          out += '\n';
          ++mwt;
        }
        WriteToken(token, out);
      }
      out += '\n';
    }
  }
  return out;
}

void Serialize(const Corpus &corpus, std::ostream &output) {
  output << Serialize(corpus);
}

DatasetName DatasetFromPath(const std::filesystem::path &path) {
  DatasetName name;
  std::string stem = path.stem().string();
  size_t dash = stem.find('-');
  name.dataset = stem.substr(0, dash);
  if (dash != std::string::npos) {
    size_t last = stem.rfind('-');
    if (last != dash) name.split = stem.substr(last + 1);
  }
  name.language = name.dataset.substr(0, name.dataset.find('_'));
  return name;
}

Corpus LoadCorpus(const std::filesystem::path &path, HeadRule head_rule,
                  Diagnostics *diagnostics) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string(), 0, "cannot open file");
  DatasetName name = DatasetFromPath(path);
  ParseOptions options;
  options.dataset = name.dataset;
  options.language = name.language;
  options.file = path.string();
  options.head_rule = head_rule;
  return ParseConllu(in, options, diagnostics);
}

std::vector<Corpus> JoinByDataset(std::vector<Corpus> parsed) {
  std::vector<Corpus> corpora;
  std::map<std::string, size_t> index;
  for (Corpus &corpus : parsed) {
    auto [it, inserted] = index.emplace(corpus.dataset, corpora.size());
    if (inserted) {
      corpora.push_back(std::move(corpus));
    } else {
      auto &docs = corpora[it->second].documents;
      std::move(corpus.documents.begin(), corpus.documents.end(),
                std::back_inserter(docs));
    }
  }
  return corpora;
}

std::vector<std::filesystem::path> FindConlluFiles(
    const std::filesystem::path &root, std::string_view split) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  auto accept = [&](const fs::path &p) {
    if (p.extension() != ".conllu") return;
    if (!split.empty() && DatasetFromPath(p).split != split) return;
    files.push_back(p);
  };
  if (fs::is_regular_file(root)) {
    files.push_back(root);
  } else if (fs::is_directory(root)) {
    for (const auto &entry : fs::recursive_directory_iterator(root)) {
      if (entry.is_regular_file()) accept(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace corefkit
