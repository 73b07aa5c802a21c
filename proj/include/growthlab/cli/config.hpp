#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/radial.hpp"
#include "json.hpp"

namespace growthlab::cli {

struct GridSpec {
  double r_min = 0.1;
  double r_max = 10.0;
  int per_decade = 16;

  std::vector<double> radii() const;
  std::string to_string() const;
};

/// `r_min:r_max:ppd`.
GridSpec parse_grid(std::string_view text);

/// Kernel exponent choice: a fixed p, or max(1, 2 rho) for a given rho, or
/// (no value) max(1, 2 rho_hat) with rho_hat fitted from the source profile.
struct PPolicy {
  std::optional<double> explicit_p;
  std::optional<double> optimal_rho;
  bool optimal_fitted = false;

  std::string to_string() const;
};

/// `2.5`, `optimal:RHO` or `optimal`.
PPolicy parse_p_policy(std::string_view text);

enum class OutputFormat { Csv, Json };

struct RunConfig {
  GridSpec grid;
  radial::CircleQuadratureSettings circle;
  double kernel_tol = 1e-10;
  PPolicy p;
  OutputFormat format = OutputFormat::Csv;
  /// 0 = one worker per core (or GROWTHLAB_THREADS).
  int threads = 0;
  double merge_radius = 0.0;

  void validate() const;
  /// Settings that affect results; the thread count is left out because
  /// output does not depend on it.
  nlohmann::json to_json() const;
};

/// Overlays the keys present in a JSON config object onto `base`.
/// Keys: grid, tol, proximity_tol, kernel_tol, extraction_band,
/// singularity_margin, initial_nodes, max_nodes, p, format, threads,
/// merge_radius. Unknown keys are a ParseError.
RunConfig apply_config_json(RunConfig base, const nlohmann::json& doc);
RunConfig load_config_file(RunConfig base, const std::filesystem::path& path);

/// Values given on the command line; unset fields keep the lower layers.
struct Overrides {
  std::optional<std::string> grid;
  std::optional<std::string> p;
  std::optional<double> tol;
  std::optional<std::string> format;
  std::optional<int> threads;
};

/// Built-in defaults, overlaid by the config file (when given), overlaid by
/// the command-line values. The result is validated.
RunConfig resolve_config(const std::optional<std::filesystem::path>& config_file, const Overrides& flags);

/// Worker count: explicit setting, else GROWTHLAB_THREADS, else hardware.
int resolve_threads(int configured);

}  // namespace growthlab::cli
