#include "growthlab/cli/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>

#include "growthlab/error.hpp"

#ifndef GROWTHLAB_VERSION
#define GROWTHLAB_VERSION "0.0.0"
#endif

namespace growthlab::cli {

Series& GrowthReport::column(const std::string& name) {
  for (auto& [n, s] : columns)
    if (n == name) return s;
  columns.emplace_back(name, Series(keys.size()));
  return columns.back().second;
}

const Series* GrowthReport::find(const std::string& name) const {
  for (const auto& [n, s] : columns)
    if (n == name) return &s;
  return nullptr;
}

void GrowthReport::set(const std::string& name, std::size_t row, double value) {
  auto& s = column(name);
  if (s.size() < keys.size()) s.resize(keys.size());
  s.at(row) = value == 0.0 ? 0.0 : value;  // no negative zero in output
}

void GrowthReport::check_shape() const {
  for (const auto& [n, s] : columns)
    if (s.size() != keys.size())
      fail(ErrorKind::InvalidArgument, "column " + n + " has " + std::to_string(s.size()) + " rows, expected " +
                                           std::to_string(keys.size()));
}

std::string format_number(double x) {
  if (std::isnan(x)) return "";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> ordered_names(const GrowthReport& r) {
  std::vector<std::string> names;
  if (r.fixed_columns) names = fixed_column_names();
  for (const auto& [n, s] : r.columns)
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  return names;
}

}  // namespace

void write_csv(std::ostream& out, const GrowthReport& report) {
  report.check_shape();
  const auto names = ordered_names(report);
  out << report.key_column;
  for (const auto& n : names) out << "," << n;
  out << "\n";
  for (std::size_t i = 0; i < report.keys.size(); ++i) {
    out << format_number(report.keys[i]);
    for (const auto& n : names) {
      out << ",";
      const auto* s = report.find(n);
      if (s != nullptr && (*s)[i] && !std::isnan(*(*s)[i])) out << format_number(*(*s)[i]);
    }
    out << "\n";
  }
}

nlohmann::json to_json(const GrowthReport& report) {
  report.check_shape();
  nlohmann::json cols = nlohmann::json::object();
  for (const auto& n : ordered_names(report)) {
    nlohmann::json arr = nlohmann::json::array();
    const auto* s = report.find(n);
    for (std::size_t i = 0; i < report.keys.size(); ++i) {
      if (s != nullptr && (*s)[i] && std::isfinite(*(*s)[i])) arr.push_back(*(*s)[i]);
      else if (s != nullptr && (*s)[i] && std::isinf(*(*s)[i])) arr.push_back(format_number(*(*s)[i]));
      else arr.push_back(nullptr);
    }
    cols[n] = std::move(arr);
  }
  return {
      {"schema_version", kSchemaVersion},
      {"command", report.command},
      {"descriptor", report.descriptor},
      {"key", report.key_column},
      {report.key_column, report.keys},
      {"columns", std::move(cols)},
      {"warnings", report.warnings},
      {"metadata", report.metadata},
  };
}

nlohmann::json make_metadata(const nlohmann::json& config) {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) now = static_cast<std::time_t>(std::atoll(epoch));
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return {{"tool", "growthlab"}, {"version", GROWTHLAB_VERSION}, {"timestamp", stamp}, {"config", config}};
}

}  // namespace growthlab::cli
