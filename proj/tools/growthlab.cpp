#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "growthlab/cli/commands.hpp"
#include "growthlab/cli/config.hpp"
#include "growthlab/cli/report.hpp"
#include "growthlab/error.hpp"

namespace {

using namespace growthlab;
using namespace growthlab::cli;

struct Flags {
  Overrides overrides;
  std::optional<std::string> config;
  std::string out;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--grid", f.overrides.grid, "radial grid r_min:r_max:points_per_decade");
  cmd->add_option("--p", f.overrides.p, "kernel exponent: a value, optimal:RHO or optimal");
  cmd->add_option("--tol", f.overrides.tol, "relative tolerance of the circle quadrature");
  cmd->add_option("--format", f.overrides.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", f.out, "output file (default stdout)");
  cmd->add_option("--threads", f.overrides.threads, "worker threads (default: GROWTHLAB_THREADS or one per core)");
  cmd->add_option("--config", f.config, "JSON config file; flags override its keys");
}

void emit_text(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) fail(ErrorKind::InvalidArgument, "cannot write '" + out + "'");
  file << text;
}

void emit(const GrowthReport& report, const RunConfig& config, const std::string& out) {
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  std::ostringstream s;
  if (config.format == OutputFormat::Json)
    s << to_json(report).dump(2) << '\n';
  else
    write_csv(s, report);
  emit_text(s.str(), out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growthlab: growth characteristics and bounds for entire and meromorphic functions"};
  app.set_version_flag("--version", GROWTHLAB_VERSION);
  app.require_subcommand(1);

  Flags flags;
  std::string descriptor, zeros_file, suite = "all";
  std::string bound_function, bound_zeros, bound_t;
  std::vector<double> rhos = {0.1, 0.25, 0.5, 0.75, 1.0, 2.0, 5.0};

  auto* characteristics = app.add_subcommand("characteristics", "lnM, C, B, T and NZ over a radial grid");
  characteristics->add_option("descriptor", descriptor, "function descriptor, e.g. exp or poly:1,0,-1")->required();
  add_common(characteristics, flags);

  auto* paley = app.add_subcommand("paley-table", "Paley constants with a quadrature cross-check");
  paley->add_option("rho", rhos, "orders (default 0.1 0.25 0.5 0.75 1 2 5)");
  add_common(paley, flags);

  auto* bound = app.add_subcommand("bound", "upper bound for ln M from a C, N_Z or T profile");
  auto* src = bound->add_option_group("source")->require_option(1);
  src->add_option("--function", bound_function, "descriptor; bound from its C profile");
  src->add_option("--zeros", bound_zeros, "zero-list file; bound from N_Z");
  src->add_option("--t-profile", bound_t, "descriptor; bound from its T profile");
  add_common(bound, flags);

  auto* product = app.add_subcommand("product", "canonical product over a zero-list file");
  product->add_option("zeros", zeros_file, "zero-list file (.csv or .json)")->required();
  add_common(product, flags);

  auto* jensen = app.add_subcommand("jensen", "Jensen residual C - ln|f(0)| - NZ + NP");
  jensen->add_option("descriptor", descriptor, "function descriptor")->required();
  add_common(jensen, flags);

  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  verify->add_option("suite", suite, "suite name")->check(CLI::IsMember(verify_suites()));
  add_common(verify, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig config =
        resolve_config(flags.config ? std::optional<std::filesystem::path>(*flags.config) : std::nullopt, flags.overrides);
    if (*characteristics) {
      emit(cmd_characteristics(descriptor, config), config, flags.out);
    } else if (*paley) {
      emit(cmd_paley_table(rhos, config), config, flags.out);
    } else if (*bound) {
      if (!bound_function.empty())
        emit(cmd_bound(BoundSource::Function, bound_function, config), config, flags.out);
      else if (!bound_zeros.empty())
        emit(cmd_bound(BoundSource::Zeros, bound_zeros, config), config, flags.out);
      else
        emit(cmd_bound(BoundSource::TProfile, bound_t, config), config, flags.out);
    } else if (*product) {
      emit(cmd_product(zeros_file, config), config, flags.out);
    } else if (*jensen) {
      emit(cmd_jensen(descriptor, config), config, flags.out);
    } else if (*verify) {
      const auto result = cmd_verify(suite, config);
      emit_text(result.to_json().dump(2) + "\n", flags.out);
      if (const auto* f = result.first_failure()) {
        std::cerr << "FAIL " << f->suite << ": " << f->name << " (value " << format_number(f->value)
                  << ", tolerance " << format_number(f->tolerance) << ")\n";
        return 1;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
