#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace growthlab::cli {

inline constexpr int kSchemaVersion = 1;

using Series = std::vector<std::optional<double>>;

/// A per-radius table. Growth tables always carry the fixed columns
/// lnM, C, B, T, NZ, bound_ln (empty where not computed), followed by
/// any extra columns in insertion order.
struct GrowthReport {
  std::string command;
  std::string descriptor;
  std::string key_column = "r";
  bool fixed_columns = true;
  std::vector<double> keys;
  std::vector<std::pair<std::string, Series>> columns;
  std::vector<std::string> warnings;
  nlohmann::json metadata = nlohmann::json::object();

  Series& column(const std::string& name);
  const Series* find(const std::string& name) const;
  void set(const std::string& name, std::size_t row, double value);
  /// Throws InvalidArgument when a column length differs from keys.
  void check_shape() const;
};

inline const std::vector<std::string>& fixed_column_names() {
  static const std::vector<std::string> names = {"lnM", "C", "B", "T", "NZ", "bound_ln"};
  return names;
}

/// Shortest round-trip representation.
std::string format_number(double x);

void write_csv(std::ostream& out, const GrowthReport& report);
nlohmann::json to_json(const GrowthReport& report);

/// Tool version, UTC timestamp (from SOURCE_DATE_EPOCH when set) and the
/// effective configuration.
nlohmann::json make_metadata(const nlohmann::json& config);

}  // namespace growthlab::cli
