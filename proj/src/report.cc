#include "corefkit/report.h"

#include <cstdio>

#include "json.hpp"

namespace corefkit {

ReportRow ReportRow::Count(std::string key, int64_t n) {
  ReportRow row;
  row.key = std::move(key);
  row.kind = Kind::kCount;
  row.numerator = n;
  return row;
}

ReportRow ReportRow::Percent(std::string key, int64_t num, int64_t den) {
  ReportRow row;
  row.key = std::move(key);
  row.kind = Kind::kPercent;
  row.numerator = num;
  row.denominator = den;
  return row;
}

ReportRow ReportRow::Ratio(std::string key, int64_t num, int64_t den) {
  ReportRow row = Percent(std::move(key), num, den);
  row.kind = Kind::kRatio;
  return row;
}

ReportRow ReportRow::Real(std::string key, double value) {
  ReportRow row;
  row.key = std::move(key);
  row.kind = Kind::kReal;
  row.real = value;
  return row;
}

std::optional<double> ReportRow::value() const {
  switch (kind) {
    case Kind::kCount:
      return static_cast<double>(numerator);
    case Kind::kReal:
      return real;
    case Kind::kPercent:
      if (denominator == 0) return std::nullopt;
      return 100.0 * numerator / denominator;
    case Kind::kRatio:
      if (denominator == 0) return std::nullopt;
      return static_cast<double>(numerator) / denominator;
  }
  return std::nullopt;
}

std::string ReportRow::Rendered() const {
  auto v = value();
  if (!v) return "n/a";
  switch (kind) {
    case Kind::kCount:
      return std::to_string(numerator);
    case Kind::kReal:
      return FormatFixed(*v, 6);
    default:
      return FormatFixed(*v, 2);
  }
}

const ReportRow *DatasetReport::Find(const std::string &key) const {
  for (const ReportRow &row : rows) {
    if (row.key == key) return &row;
  }
  return nullptr;
}

void DatasetReport::Append(const DatasetReport &other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  std::string out(buf);
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

std::string ReportsToTsv(const std::vector<DatasetReport> &reports) {
  std::string out = "dataset\tstatistic\tvalue\tnumerator\tdenominator\n";
  for (const DatasetReport &report : reports) {
    for (const ReportRow &row : report.rows) {
      out += report.dataset + "\t" + row.key + "\t" + row.Rendered() + "\t";
      if (row.kind == ReportRow::Kind::kReal) {
        out += "\t\n";
      } else {
        out += std::to_string(row.numerator) + "\t" +
               std::to_string(row.denominator) + "\n";
      }
    }
  }
  return out;
}

std::string ReportsToJson(const std::vector<DatasetReport> &reports) {
  nlohmann::ordered_json root = nlohmann::ordered_json::array();
  for (const DatasetReport &report : reports) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ReportRow &row : report.rows) {
      nlohmann::ordered_json r;
      r["statistic"] = row.key;
      r["value"] = row.Rendered();
      if (row.kind != ReportRow::Kind::kReal) {
        r["numerator"] = row.numerator;
        r["denominator"] = row.denominator;
      }
      rows.push_back(std::move(r));
    }
    root.push_back({{"dataset", report.dataset}, {"rows", std::move(rows)}});
  }
  return root.dump(2) + "\n";
}

std::string ReportsToFigureData(const std::vector<DatasetReport> &reports) {
  std::string out = "dataset\tstatistic\tcategory\tvalue\n";
  for (const DatasetReport &report : reports) {
    for (const ReportRow &row : report.rows) {
      size_t dot = row.key.find('.');
      std::string statistic = row.key.substr(0, dot);
      std::string category =
          dot == std::string::npos ? "" : row.key.substr(dot + 1);
      out += report.dataset + "\t" + statistic + "\t" + category + "\t" +
             row.Rendered() + "\n";
    }
  }
  return out;
}

}  // namespace corefkit
