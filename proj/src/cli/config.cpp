#include "growthlab/cli/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "growthlab/cli/descriptor.hpp"
#include "growthlab/error.hpp"

namespace growthlab::cli {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

double number_of(const nlohmann::json& v, const char* key) {
  if (!v.is_number()) fail(ErrorKind::ParseError, std::string("config '") + key + "' must be a number");
  return v.get<double>();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

std::vector<double> GridSpec::radii() const { return radial::log_grid(r_min, r_max, per_decade); }

std::string GridSpec::to_string() const { return fmt(r_min) + ":" + fmt(r_max) + ":" + std::to_string(per_decade); }

GridSpec parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) fail(ErrorKind::ParseError, "grid must be r_min:r_max:ppd, got '" + std::string(text) + "'");
  GridSpec g;
  g.r_min = parse_real(parts[0]);
  g.r_max = parse_real(parts[1]);
  const double ppd = parse_real(parts[2]);
  if (ppd < 1 || ppd != static_cast<int>(ppd))
    fail(ErrorKind::ParseError, "points per decade must be a positive integer");
  g.per_decade = static_cast<int>(ppd);
  if (!(g.r_min > 0) || !(g.r_max >= g.r_min))
    fail(ErrorKind::ParseError, "grid needs 0 < r_min <= r_max");
  return g;
}

std::string PPolicy::to_string() const {
  if (explicit_p) return fmt(*explicit_p);
  if (optimal_rho) return "optimal:" + fmt(*optimal_rho);
  return "optimal";
}

PPolicy parse_p_policy(std::string_view text) {
  PPolicy out;
  if (text == "optimal") {
    out.optimal_fitted = true;
    return out;
  }
  if (text.rfind("optimal:", 0) == 0) {
    const double rho = parse_real(text.substr(8));
    if (!(rho > 0)) fail(ErrorKind::ParseError, "optimal:RHO needs rho > 0");
    out.optimal_rho = rho;
    return out;
  }
  const double p = parse_real(text);
  if (!(p >= 1)) fail(ErrorKind::ParseError, "p must be >= 1");
  out.explicit_p = p;
  return out;
}

void RunConfig::validate() const {
  if (!(grid.r_min > 0) || !(grid.r_max >= grid.r_min) || grid.per_decade < 1)
    fail(ErrorKind::InvalidArgument, "grid needs 0 < r_min <= r_max and ppd >= 1");
  circle.validate();
  if (!(kernel_tol > 0)) fail(ErrorKind::InvalidArgument, "kernel_tol must be positive");
  if (threads < 0) fail(ErrorKind::InvalidArgument, "threads must be >= 0");
  if (!(merge_radius >= 0)) fail(ErrorKind::InvalidArgument, "merge_radius must be >= 0");
}

nlohmann::json RunConfig::to_json() const {
  return {
      {"grid", grid.to_string()},
      {"tol", circle.rel_tol},
      {"proximity_tol", circle.proximity_rel_tol},
      {"kernel_tol", kernel_tol},
      {"extraction_band", circle.extraction_band},
      {"singularity_margin", circle.singularity_margin},
      {"initial_nodes", circle.initial_nodes},
      {"max_nodes", circle.max_nodes},
      {"p", p.to_string()},
      {"format", format == OutputFormat::Csv ? "csv" : "json"},
      {"merge_radius", merge_radius},
  };
}

RunConfig apply_config_json(RunConfig c, const nlohmann::json& doc) {
  if (!doc.is_object()) fail(ErrorKind::ParseError, "config must be a JSON object");
  for (const auto& [key, v] : doc.items()) {
    if (key == "grid") {
      if (v.is_string()) {
        c.grid = parse_grid(v.get<std::string>());
      } else if (v.is_object()) {
        if (v.contains("r_min")) c.grid.r_min = number_of(v["r_min"], "grid.r_min");
        if (v.contains("r_max")) c.grid.r_max = number_of(v["r_max"], "grid.r_max");
        if (v.contains("per_decade")) c.grid.per_decade = static_cast<int>(number_of(v["per_decade"], "grid.per_decade"));
      } else {
        fail(ErrorKind::ParseError, "config 'grid' must be a string or object");
      }
    } else if (key == "tol") {
      c.circle.rel_tol = number_of(v, "tol");
    } else if (key == "proximity_tol") {
      c.circle.proximity_rel_tol = number_of(v, "proximity_tol");
    } else if (key == "kernel_tol") {
      c.kernel_tol = number_of(v, "kernel_tol");
    } else if (key == "extraction_band") {
      c.circle.extraction_band = number_of(v, "extraction_band");
    } else if (key == "singularity_margin") {
      c.circle.singularity_margin = number_of(v, "singularity_margin");
    } else if (key == "initial_nodes") {
      c.circle.initial_nodes = static_cast<int>(number_of(v, "initial_nodes"));
    } else if (key == "max_nodes") {
      c.circle.max_nodes = static_cast<std::size_t>(number_of(v, "max_nodes"));
    } else if (key == "p") {
      c.p = v.is_string() ? parse_p_policy(v.get<std::string>()) : parse_p_policy(fmt(number_of(v, "p")));
    } else if (key == "format") {
      const auto f = v.is_string() ? v.get<std::string>() : std::string{};
      if (f == "csv") c.format = OutputFormat::Csv;
      else if (f == "json") c.format = OutputFormat::Json;
      else fail(ErrorKind::ParseError, "config 'format' must be csv or json");
    } else if (key == "threads") {
      c.threads = static_cast<int>(number_of(v, "threads"));
    } else if (key == "merge_radius") {
      c.merge_radius = number_of(v, "merge_radius");
    } else {
      fail(ErrorKind::ParseError, "unknown config key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

RunConfig load_config_file(RunConfig base, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open config " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("config JSON: ") + e.what());
  }
  return apply_config_json(std::move(base), doc);
}

int resolve_threads(int configured) {
  if (configured > 0) return configured;
  if (const char* env = std::getenv("GROWTHLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

RunConfig resolve_config(const std::optional<std::filesystem::path>& config_file, const Overrides& flags) {
  RunConfig c;
  if (config_file) c = load_config_file(c, *config_file);
  if (flags.grid) c.grid = parse_grid(*flags.grid);
  if (flags.p) c.p = parse_p_policy(*flags.p);
  if (flags.tol) c.circle.rel_tol = *flags.tol;
  if (flags.format) {
    if (*flags.format == "csv") c.format = OutputFormat::Csv;
    else if (*flags.format == "json") c.format = OutputFormat::Json;
    else fail(ErrorKind::ParseError, "format must be csv or json");
  }
  if (flags.threads) c.threads = *flags.threads;
  c.validate();
  return c;
}

}  // namespace growthlab::cli
