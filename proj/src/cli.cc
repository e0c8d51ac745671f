#include "corefkit/cli.h"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corefkit/alignment.h"
#include "corefkit/analysis.h"
#include "corefkit/conllu.h"
#include "corefkit/error_analysis.h"
#include "corefkit/features.h"
#include "corefkit/report.h"
#include "corefkit/taxonomy.h"

namespace corefkit {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "tsv";
  int jobs = 1;
  std::string split;
  std::string head_rule = "annotated";

  // analyze
  std::vector<std::string> stats;
  std::string vectors;
  std::string figure_data;
  std::string genre_pattern = kDefaultGenrePattern;

  // score, errors
  std::string gold;
  std::string pred;
  std::string match = "exact";
  std::string singletons = "exclude";
  std::string rule = "no-link";
  std::string details;

  // export-features
  std::string word_order;
  std::string target = "gold";
  int max_width = 10;
  std::string vocabulary;
};

// Runs fn(0..n-1) on up to `jobs` threads; results keep index order and the
// first failure by index is rethrown.
template <typename T, typename F>
std::vector<T> ParallelMap(size_t n, int jobs, F fn) {
  std::vector<T> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const size_t threads = std::min<size_t>(std::max(jobs, 1), n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread &thread : pool) thread.join();
  }
  for (const std::exception_ptr &error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return results;
}

HeadRule ParseHeadRule(const std::string &name) {
  return name == "syntactic" ? HeadRule::kSyntactic
                             : HeadRule::kAnnotatedThenSyntactic;
}

MatchMode ParseMatch(const std::string &name) {
  return name == "head" ? MatchMode::kHead : MatchMode::kExact;
}

std::vector<fs::path> ResolveFiles(std::vector<std::string> inputs,
                                   const std::string &split) {
  if (inputs.empty()) {
    const char *root = std::getenv("COREFUD_DATA");
    if (root == nullptr || *root == '\0') {
      throw UsageError("no input given and COREFUD_DATA is not set");
    }
    inputs.push_back(root);
  }
  std::vector<fs::path> files;
  for (const std::string &input : inputs) {
    if (!fs::exists(input)) throw UsageError("no such file or directory: " + input);
    std::vector<fs::path> found = FindConlluFiles(input, split);
    if (found.empty()) throw UsageError("no .conllu files under " + input);
    files.insert(files.end(), found.begin(), found.end());
  }
  return files;
}

void PrintWarnings(const Diagnostics &diagnostics) {
  for (const std::string &warning : diagnostics.warnings) {
    std::cerr << "warning: " << warning << '\n';
  }
}

// Parses files in parallel; files of the same dataset are joined in path
// order.
std::vector<Corpus> LoadCorpora(const std::vector<fs::path> &files,
                                const Options &options) {
  const HeadRule rule = ParseHeadRule(options.head_rule);
  std::vector<Diagnostics> diagnostics(files.size());
  std::vector<Corpus> parsed = ParallelMap<Corpus>(
      files.size(), options.jobs,
      [&](size_t i) { return LoadCorpus(files[i], rule, &diagnostics[i]); });
  for (const Diagnostics &d : diagnostics) PrintWarnings(d);

  return JoinByDataset(std::move(parsed));
}

void WriteFile(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void Emit(const Options &options, const std::string &text) {
  if (options.output.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    WriteFile(options.output, text);
  }
}

std::string RenderReports(const Options &options,
                          const std::vector<DatasetReport> &reports) {
  return options.format == "json" ? ReportsToJson(reports)
                                  : ReportsToTsv(reports);
}

int RunValidate(const Options &options) {
  const std::vector<fs::path> files = ResolveFiles(options.inputs, options.split);
  const HeadRule rule = ParseHeadRule(options.head_rule);
  struct Outcome {
    std::string line;
    std::string error;
    Diagnostics diagnostics;
  };
  std::vector<Outcome> outcomes =
      ParallelMap<Outcome>(files.size(), options.jobs, [&](size_t i) {
        Outcome outcome;
        try {
          Corpus corpus = LoadCorpus(files[i], rule, &outcome.diagnostics);
          int64_t sentences = 0;
          for (const Document &doc : corpus.documents) {
            sentences += doc.sentences.size();
          }
          outcome.line = files[i].string() + "\t" +
                         std::to_string(corpus.documents.size()) + "\t" +
                         std::to_string(sentences) + "\t" +
                         std::to_string(corpus.EntityCount()) + "\t" +
                         std::to_string(corpus.MentionCount()) + "\tok\n";
        } catch (const DataError &e) {
          outcome.error = e.what();
          outcome.line = files[i].string() + "\t\t\t\t\tinvalid\n";
        }
        return outcome;
      });
  std::string text = "file\tdocuments\tsentences\tentities\tmentions\tstatus\n";
  int code = kExitOk;
  for (const Outcome &outcome : outcomes) {
    PrintWarnings(outcome.diagnostics);
    if (!outcome.error.empty()) {
      std::cerr << "error: " << outcome.error << '\n';
      code = kExitData;
    }
    text += outcome.line;
  }
  Emit(options, text);
  return code;
}

int RunStats(const Options &options) {
  std::vector<DatasetReport> reports;
  for (const Corpus &corpus :
       LoadCorpora(ResolveFiles(options.inputs, options.split), options)) {
    reports.push_back(CorpusStatistics(corpus));
  }
  Emit(options, RenderReports(options, reports));
  return kExitOk;
}

const std::vector<std::string> kStatNames = {
    "head-position", "mention-types", "anaphor-antecedent", "first-mention",
    "entity-size",   "competing",     "genre",              "semantic-distance",
    "all"};

int RunAnalyze(const Options &options) {
  std::vector<std::string> stats = options.stats;
  if (stats.empty()) stats = {"all"};
  auto wants = [&](const std::string &name) {
    for (const std::string &s : stats) {
      if (s == name || s == "all") return true;
    }
    return false;
  };
  bool distance_explicit = false;
  for (const std::string &s : stats) {
    if (s == "semantic-distance") distance_explicit = true;
  }
  if (distance_explicit && options.vectors.empty()) {
    throw UsageError("semantic-distance needs --vectors");
  }
  std::optional<MentionVectors> vectors;
  if (!options.vectors.empty()) {
    std::ifstream input(options.vectors);
    if (!input) throw UsageError("cannot open " + options.vectors);
    vectors = MentionVectors::Load(input, options.vectors);
  }

  const std::vector<Corpus> corpora =
      LoadCorpora(ResolveFiles(options.inputs, options.split), options);
  std::vector<DatasetReport> reports =
      ParallelMap<DatasetReport>(corpora.size(), options.jobs, [&](size_t i) {
        const Corpus &corpus = corpora[i];
        DatasetReport report{corpus.dataset, {}};
        if (wants("head-position")) report.Append(HeadPositionStats(corpus));
        if (wants("mention-types")) report.Append(MentionTypeDistribution(corpus));
        if (wants("anaphor-antecedent")) {
          report.Append(AnaphorAntecedentReport(corpus));
        }
        if (wants("first-mention")) report.Append(FirstMentionStats(corpus));
        if (wants("entity-size")) report.Append(EntitySizeStats(corpus));
        if (wants("competing")) report.Append(CompetingAntecedentsReport(corpus));
        if (wants("genre")) {
          report.Append(GenreReport(corpus, options.genre_pattern));
        }
        if (wants("semantic-distance") && vectors) {
          report.Append(SemanticDistanceReport(corpus, *vectors));
        }
        return report;
      });
  if (!options.figure_data.empty()) {
    WriteFile(options.figure_data, ReportsToFigureData(reports));
  }
  Emit(options, RenderReports(options, reports));
  return kExitOk;
}

// Gold and system corpora paired by dataset name, in gold order.
std::vector<std::pair<Corpus, Corpus>> LoadPairs(const Options &options) {
  if (options.gold.empty() || options.pred.empty()) {
    throw UsageError("--gold and --pred are required");
  }
  std::vector<fs::path> gold_files = ResolveFiles({options.gold}, options.split);
  std::vector<fs::path> pred_files = ResolveFiles({options.pred}, options.split);
  std::vector<Corpus> gold = LoadCorpora(gold_files, options);
  std::vector<Corpus> pred = LoadCorpora(pred_files, options);
  std::map<std::string, Corpus *> by_name;
  for (Corpus &corpus : pred) by_name[corpus.dataset] = &corpus;
  std::vector<std::pair<Corpus, Corpus>> pairs;
  for (Corpus &corpus : gold) {
    auto it = by_name.find(corpus.dataset);
    if (it == by_name.end()) {
      throw DataError(options.pred, 0, "no system file for dataset " + corpus.dataset);
    }
    pairs.emplace_back(std::move(corpus), std::move(*it->second));
    by_name.erase(it);
  }
  for (const auto &[name, corpus] : by_name) {
    std::cerr << "warning: system dataset " << name << " has no gold file\n";
  }
  return pairs;
}

int RunScore(const Options &options) {
  const MatchMode mode = ParseMatch(options.match);
  const SingletonPolicy policy = options.singletons == "include"
                                     ? SingletonPolicy::kInclude
                                     : SingletonPolicy::kExclude;
  const auto pairs = LoadPairs(options);
  std::vector<ScoreReport> scores =
      ParallelMap<ScoreReport>(pairs.size(), options.jobs, [&](size_t i) {
        return ScoreCorpus(pairs[i].first, pairs[i].second, mode, policy);
      });

  auto values = [](const ScoreReport &s) {
    return std::vector<double>{s.muc.recall,     s.muc.precision,
                               s.muc.f1,         s.b_cubed.recall,
                               s.b_cubed.precision, s.b_cubed.f1,
                               s.ceafe.recall,   s.ceafe.precision,
                               s.ceafe.f1,       s.conll_f1};
  };
  static const std::vector<std::string> kColumns = {
      "muc_recall",   "muc_precision",   "muc_f1",   "bcubed_recall",
      "bcubed_precision", "bcubed_f1",   "ceafe_recall", "ceafe_precision",
      "ceafe_f1",     "conll_f1"};
  std::vector<std::string> names;
  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < pairs.size(); ++i) {
    names.push_back(pairs[i].first.dataset);
    rows.push_back(values(scores[i]));
  }
  std::vector<double> macro;
  for (size_t c = 0; c < kColumns.size(); ++c) {
    std::vector<double> column;
    for (const auto &row : rows) column.push_back(row[c]);
    macro.push_back(MacroAverage(column));
  }
  names.push_back("macro");
  rows.push_back(macro);

  std::string text;
  if (options.format == "json") {
    Json root;
    root["match"] = options.match;
    root["singletons"] = options.singletons;
    Json datasets = Json::array();
    for (size_t r = 0; r < rows.size(); ++r) {
      Json entry;
      entry["dataset"] = names[r];
      for (size_t c = 0; c < kColumns.size(); ++c) {
        entry[kColumns[c]] = FormatFixed(rows[r][c], 6);
      }
      datasets.push_back(std::move(entry));
    }
    root["datasets"] = std::move(datasets);
    text = root.dump(2) + "\n";
  } else {
    text = "dataset";
    for (const std::string &column : kColumns) text += "\t" + column;
    text += "\n";
    for (size_t r = 0; r < rows.size(); ++r) {
      text += names[r];
      for (double v : rows[r]) text += "\t" + FormatFixed(v, 6);
      text += "\n";
    }
  }
  Emit(options, text);
  return kExitOk;
}

int RunErrors(const Options &options) {
  ErrorAnalysisOptions analysis;
  analysis.mode = ParseMatch(options.match);
  analysis.rule = options.rule == "no-mention" ? UnresolvedRule::kNoDetectedMention
                                               : UnresolvedRule::kNoRecoveredLink;
  const auto pairs = LoadPairs(options);
  struct Result {
    ErrorReport report;
    std::vector<UnresolvedEntity> details;
  };
  std::vector<Result> results =
      ParallelMap<Result>(pairs.size(), options.jobs, [&](size_t i) {
        Result result;
        result.report.dataset = pairs[i].first.dataset;
        result.report.tallies =
            AnalyzeErrors(pairs[i].first, pairs[i].second, analysis,
                          options.details.empty() ? nullptr : &result.details);
        return result;
      });

  std::vector<ErrorReport> reports;
  std::vector<DatasetReport> breakdown;
  for (const Result &result : results) {
    reports.push_back(result.report);
    breakdown.push_back(result.report.ToDatasetReport());
  }
  if (!options.figure_data.empty()) {
    WriteFile(options.figure_data, ReportsToFigureData(breakdown));
  }
  if (!options.details.empty()) {
    Json root = Json::array();
    for (const Result &result : results) {
      for (const UnresolvedEntity &entity : result.details) {
        Json entry;
        entry["dataset"] = result.report.dataset;
        entry["doc_id"] = entity.doc_id;
        entry["entity_id"] = entity.entity_id;
        entry["spans"] = entity.spans;
        entry["detected"] = entity.detected;
        entry["diagnosis"] = entity.diagnosis;
        root.push_back(std::move(entry));
      }
    }
    WriteFile(options.details, root.dump(2) + "\n");
  }
  Emit(options, options.format == "json" ? ReportsToJson(breakdown)
                                         : ErrorTableTsv(reports));
  return kExitOk;
}

int RunExportFeatures(const Options &options) {
  if (options.word_order.empty()) throw UsageError("--word-order is required");
  if (options.target == "all-spans" && options.max_width < 1) {
    throw UsageError("--max-width must be positive");
  }
  std::string vocabulary_path = options.vocabulary;
  if (vocabulary_path.empty()) {
    if (options.output.empty()) {
      throw UsageError("--vocabulary is required when records go to stdout");
    }
    vocabulary_path = options.output + ".vocab.tsv";
  }
  const WordOrderTable table = WordOrderTable::LoadFile(options.word_order);
  const ExportTarget target = options.target == "all-spans"
                                  ? ExportTarget::AllSpans(options.max_width)
                                  : ExportTarget::Gold();
  const std::vector<Corpus> corpora =
      LoadCorpora(ResolveFiles(options.inputs, options.split), options);
  std::vector<const Document *> docs;
  for (const Corpus &corpus : corpora) {
    for (const Document &doc : corpus.documents) docs.push_back(&doc);
  }
  struct Chunk {
    std::string records;
    FeatureVocabulary vocabulary;
  };
  std::vector<Chunk> chunks =
      ParallelMap<Chunk>(docs.size(), options.jobs, [&](size_t i) {
        Chunk chunk;
        chunk.records =
            ExportDocumentFeatures(*docs[i], table, target, &chunk.vocabulary);
        return chunk;
      });
  std::string text = ExportHeader(target);
  FeatureVocabulary vocabulary;
  for (const Chunk &chunk : chunks) {
    text += chunk.records;
    vocabulary.Merge(chunk.vocabulary);
  }
  Emit(options, text);
  WriteFile(vocabulary_path, vocabulary.ToTsv());
  return kExitOk;
}

int RunTaxonomy(const Options &options) {
  if (options.format == "json") {
    Json root = Json::array();
    for (const auto &[relation, category] : RelationTable()) {
      root.push_back({{"relation", relation},
                      {"category", std::string(1, CategoryLetter(category))},
                      {"category_name", CategoryName(category)}});
    }
    Emit(options, root.dump(2) + "\n");
  } else {
    Emit(options, RelationTableTsv());
  }
  return kExitOk;
}

void AddOutputOptions(CLI::App *app, Options &o) {
  app->add_option("-o,--output", o.output, "Output file (default: stdout)");
  app->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"tsv", "json"}));
}

void AddLoadOptions(CLI::App *app, Options &o) {
  app->add_option("-j,--jobs", o.jobs, "Parallel workers")
      ->check(CLI::PositiveNumber);
  app->add_option("--split", o.split, "Only files of this split (train, dev, ...)");
  app->add_option("--head-rule", o.head_rule, "Mention head rule")
      ->check(CLI::IsMember({"annotated", "syntactic"}));
}

void AddPairOptions(CLI::App *app, Options &o) {
  app->add_option("--gold", o.gold, "Gold file or directory")->required();
  app->add_option("--pred", o.pred, "System file or directory")->required();
  app->add_option("--match", o.match, "Mention matching")
      ->check(CLI::IsMember({"exact", "head"}));
}

}  // namespace

int RunCli(int argc, const char *const *argv) {
  Options o;
  CLI::App app{"Corpus analysis, scoring and error analysis for CorefUD data",
               "corefkit"};
  app.require_subcommand(1);

  CLI::App *validate = app.add_subcommand("validate", "Parse and check files");
  validate->add_option("inputs", o.inputs, "Files or directories");
  AddOutputOptions(validate, o);
  AddLoadOptions(validate, o);

  CLI::App *stats = app.add_subcommand("stats", "Corpus size statistics");
  stats->add_option("inputs", o.inputs, "Files or directories");
  AddOutputOptions(stats, o);
  AddLoadOptions(stats, o);

  CLI::App *analyze = app.add_subcommand("analyze", "Linguistic statistics");
  analyze->add_option("inputs", o.inputs, "Files or directories");
  analyze->add_option("--stat", o.stats, "Statistics to compute (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(kStatNames));
  analyze->add_option("--vectors", o.vectors, "Mention embedding TSV");
  analyze->add_option("--figure-data", o.figure_data, "Long-format TSV for plots");
  analyze->add_option("--genre-pattern", o.genre_pattern,
                      "Regex whose first group extracts the genre from doc ids");
  AddOutputOptions(analyze, o);
  AddLoadOptions(analyze, o);

  CLI::App *score = app.add_subcommand("score", "MUC, B3, CEAFe and CoNLL F1");
  AddPairOptions(score, o);
  score->add_option("--singletons", o.singletons, "Singleton entities")
      ->check(CLI::IsMember({"include", "exclude"}));
  AddOutputOptions(score, o);
  AddLoadOptions(score, o);

  CLI::App *errors = app.add_subcommand("errors", "Unresolved entity analysis");
  AddPairOptions(errors, o);
  errors->add_option("--mode", o.match, "Alias of --match")
      ->check(CLI::IsMember({"exact", "head"}));
  errors->add_option("--rule", o.rule, "Unresolved entity rule")
      ->check(CLI::IsMember({"no-link", "no-mention"}));
  errors->add_option("--details", o.details, "JSON dump of unresolved entities");
  errors->add_option("--figure-data", o.figure_data, "Long-format TSV for plots");
  AddOutputOptions(errors, o);
  AddLoadOptions(errors, o);

  CLI::App *features =
      app.add_subcommand("export-features", "Span and document features");
  features->add_option("inputs", o.inputs, "Files or directories");
  features->add_option("--word-order", o.word_order, "Language to word order TSV");
  features->add_option("--target", o.target, "Spans to export")
      ->check(CLI::IsMember({"gold", "all-spans"}));
  features->add_option("--max-width", o.max_width, "Longest all-spans candidate");
  features->add_option("--vocabulary", o.vocabulary,
                       "Vocabulary TSV (default: <output>.vocab.tsv)");
  features->add_option("-o,--output", o.output, "Records file (default: stdout)");
  AddLoadOptions(features, o);

  CLI::App *taxonomy = app.add_subcommand("taxonomy", "Relation to category table");
  AddOutputOptions(taxonomy, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return RunValidate(o);
    if (*stats) return RunStats(o);
    if (*analyze) return RunAnalyze(o);
    if (*score) return RunScore(o);
    if (*errors) return RunErrors(o);
    if (*features) return RunExportFeatures(o);
    if (*taxonomy) return RunTaxonomy(o);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::regex_error &e) {
    std::cerr << "usage error: bad --genre-pattern: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace corefkit
