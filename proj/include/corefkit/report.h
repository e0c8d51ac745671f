// Per-dataset statistic reports and their TSV/JSON renderings.

#ifndef COREFKIT_REPORT_H_
#define COREFKIT_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace corefkit {

struct ReportRow {
  enum class Kind {
    kCount,    // numerator only
    kPercent,  // 100 * numerator / denominator
    kRatio,    // numerator / denominator
    kReal,     // real-valued, no rational form
  };

  // Keys are "statistic" or "statistic.category"; the category part becomes
  // its own column in long-format figure data.
  std::string key;
  Kind kind = Kind::kCount;
  int64_t numerator = 0;
  int64_t denominator = 1;
  double real = 0.0;

  static ReportRow Count(std::string key, int64_t n);
  static ReportRow Percent(std::string key, int64_t num, int64_t den);
  static ReportRow Ratio(std::string key, int64_t num, int64_t den);
  static ReportRow Real(std::string key, double value);

  // nullopt when the denominator is zero.
  std::optional<double> value() const;
  // Fixed formatting: 2 decimals for percentages and ratios, 6 for reals,
  // "n/a" for undefined values.
  std::string Rendered() const;
};

struct DatasetReport {
  std::string dataset;
  std::vector<ReportRow> rows;

  const ReportRow *Find(const std::string &key) const;
  void Append(const DatasetReport &other);
};

// Columns: dataset, statistic, value, numerator, denominator.
std::string ReportsToTsv(const std::vector<DatasetReport> &reports);
std::string ReportsToJson(const std::vector<DatasetReport> &reports);
// Long format for plotting: dataset, statistic, category, value.
std::string ReportsToFigureData(const std::vector<DatasetReport> &reports);

// printf("%.*f") with "-0.00" normalized to "0.00".
std::string FormatFixed(double value, int decimals);

}  // namespace corefkit

#endif  // COREFKIT_REPORT_H_
