#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "growthlab/cli/config.hpp"
#include "growthlab/cli/report.hpp"
#include "growthlab/funcat.hpp"
#include "json.hpp"

namespace growthlab::cli {

/// lnM, C, B, T, NZ per radius of the configured grid, plus chain_violation
/// for entire functions. Rows breaking the chain by more than 1e-8 are
/// listed in `warnings`.
GrowthReport cmd_characteristics(const std::string& descriptor, const RunConfig& config,
                                 const std::filesystem::path& base_dir = {});
GrowthReport characteristics(const funcat::FunctionSpec& spec, const std::string& descriptor,
                             const RunConfig& config);

/// rho, P(rho), optimal p and a quadrature cross-check of P.
GrowthReport cmd_paley_table(std::span<const double> rhos, const RunConfig& config);

enum class BoundSource {
  Function,  // C profile of a function descriptor
  Zeros,     // N_Z of a zero-list file
  TProfile,  // T profile of a (meromorphic) function descriptor
};

/// bound_ln per radius with the observed lnM when a function is available,
/// the lower bound used for comparison in lower_ln, and margin = bound_ln - lower_ln.
GrowthReport cmd_bound(BoundSource source, const std::string& input, const RunConfig& config,
                       const std::filesystem::path& base_dir = {});

/// Canonical product over a zero-list file with genus ceil(p) - 1:
/// lnM, C, NZ and the Jensen residual per radius.
GrowthReport cmd_product(const std::string& zeros_path, const RunConfig& config);

/// C, NZ, NP (poles) and jensen_residual per radius.
GrowthReport cmd_jensen(const std::string& descriptor, const RunConfig& config,
                        const std::filesystem::path& base_dir = {});

struct VerifyCheck {
  std::string suite;
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyResult {
  std::string suite;
  bool passed = true;
  double seconds = 0.0;
  std::vector<VerifyCheck> checks;

  const VerifyCheck* first_failure() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& verify_suites();

/// Runs a named suite (or `all`). Throws InvalidArgument for unknown names.
VerifyResult cmd_verify(const std::string& suite, const RunConfig& config);

/// The p to use for a source profile under the configured policy.
double choose_p(const PPolicy& policy, double fitted_order);

}  // namespace growthlab::cli
