#include "growthlab/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "growthlab/cli/descriptor.hpp"
#include "growthlab/cli/parallel.hpp"
#include "growthlab/cli/zero_io.hpp"
#include "growthlab/error.hpp"
#include "growthlab/kernel.hpp"
#include "growthlab/products.hpp"
#include "growthlab/radial.hpp"

namespace growthlab::cli {

namespace {

using funcat::FunctionSpec;
using std::optional;

constexpr double kChainTolerance = 1e-8;

GrowthReport new_report(const std::string& command, const std::string& descriptor, std::vector<double> keys,
                        const RunConfig& config) {
  GrowthReport r;
  r.command = command;
  r.descriptor = descriptor;
  r.keys = std::move(keys);
  r.metadata = make_metadata(config.to_json());
  for (const auto& name : fixed_column_names()) r.column(name);
  return r;
}

std::vector<double> with_extension(std::vector<double> radii, double extra) {
  radii.push_back(extra);
  return radial::chain_grid(radii);
}

std::vector<double> map_radii(const std::vector<double>& grid, int threads,
                              const std::function<double(double)>& fn) {
  return parallel_map<double>(grid.size(), threads, [&](std::size_t i) { return fn(grid[i]); });
}

kernel::KernelParams kernel_params(double p, const RunConfig& config) {
  kernel::KernelParams kp;
  kp.p = p;
  kp.quad_rel_tol = config.kernel_tol;
  return kp;
}

double fitted_order(const radial::Tail& tail) {
  return tail.kind == radial::TailKind::Power ? tail.exponent : 0.0;
}

nlohmann::json tail_json(const radial::Tail& tail) {
  const char* kind = "forbidden";
  switch (tail.kind) {
    case radial::TailKind::Forbidden: kind = "forbidden"; break;
    case radial::TailKind::Constant: kind = "constant"; break;
    case radial::TailKind::Power: kind = "power"; break;
    case radial::TailKind::LogLinear: kind = "log_linear"; break;
  }
  return {{"kind", kind}, {"exponent", tail.exponent}, {"coefficient", tail.coefficient}};
}

}  // namespace

double choose_p(const PPolicy& policy, double order) {
  if (policy.explicit_p) return *policy.explicit_p;
  if (policy.optimal_rho) return kernel::optimal_p(*policy.optimal_rho);
  return order > 0 ? kernel::optimal_p(order) : 1.0;
}

GrowthReport characteristics(const FunctionSpec& spec, const std::string& descriptor, const RunConfig& config) {
  config.validate();
  const int threads = resolve_threads(config.threads);
  auto report = new_report("characteristics", descriptor, config.grid.radii(), config);
  const auto& radii = report.keys;
  const auto& cs = config.circle;
  const bool entire = spec.is_entire();
  const double u0 = funcat::log_abs(spec, 0.0);

  std::optional<radial::RadialProfile> c_profile;
  std::vector<double> c_values;
  if (std::isfinite(u0)) {
    auto grid = radial::chain_grid(radii);
    auto values = map_radii(grid, threads, [&](double r) { return radial::circle_mean_log(spec, r, cs); });
    c_profile.emplace(std::move(grid), std::move(values), u0, radial::Tail::forbidden(), entire);
    for (double r : radii) c_values.push_back((*c_profile)(r));
  } else {
    c_values = map_radii(radii, threads, [&](double r) { return radial::circle_mean_log(spec, r, cs); });
  }

  struct Row {
    optional<double> lnM, T, NZ;
  };
  const bool zeros_known = spec.has_structural_zeros();
  const auto rows = parallel_map<Row>(radii.size(), threads, [&](std::size_t i) {
    const double r = radii[i];
    Row row;
    if (entire) row.lnM = radial::max_modulus(spec, r);
    row.T = radial::nevanlinna_T(spec, r, cs);
    if (zeros_known) row.NZ = points::integral_count(funcat::known_zeros(spec, r), r);
    return row;
  });

  for (std::size_t i = 0; i < radii.size(); ++i) {
    report.set("C", i, c_values[i]);
    if (c_profile) report.set("B", i, radial::disk_mean(*c_profile, radii[i]));
    if (rows[i].lnM) report.set("lnM", i, *rows[i].lnM);
    report.set("T", i, *rows[i].T);
    if (rows[i].NZ) report.set("NZ", i, *rows[i].NZ);
    if (entire && c_profile) {
      radial::ChainRow row{radii[i], u0, *report.find("B")->at(i), c_values[i], *rows[i].lnM, *rows[i].T, 0.0};
      const double v = radial::chain_violation(row);
      report.set("chain_violation", i, v);
      if (v > kChainTolerance)
        report.warnings.push_back("chain violated by " + format_number(v) + " at r = " + format_number(radii[i]));
    }
  }
  report.metadata["entire"] = entire;
  report.metadata["function"] = spec.describe();
  return report;
}

GrowthReport cmd_characteristics(const std::string& descriptor, const RunConfig& config,
                                 const std::filesystem::path& base_dir) {
  return characteristics(parse_descriptor(descriptor, base_dir, config.merge_radius), descriptor, config);
}

GrowthReport cmd_paley_table(std::span<const double> rhos, const RunConfig& config) {
  GrowthReport report;
  report.command = "paley-table";
  report.key_column = "rho";
  report.fixed_columns = false;
  report.keys.assign(rhos.begin(), rhos.end());
  report.metadata = make_metadata(config.to_json());
  for (std::size_t i = 0; i < report.keys.size(); ++i) {
    const double rho = report.keys[i];
    const double P = kernel::paley_constant(rho);
    const double p = kernel::optimal_p(rho);
    const double quad = kernel::kernel_transform([rho](double t) { return std::pow(t, rho); },
                                                 kernel_params(p, config), 1.0, rho);
    report.set("P", i, P);
    report.set("p", i, p);
    report.set("P_quadrature", i, quad);
    report.set("rel_err", i, std::abs(quad - P) / P);
  }
  return report;
}

GrowthReport cmd_bound(BoundSource source, const std::string& input, const RunConfig& config,
                       const std::filesystem::path& base_dir) {
  config.validate();
  const int threads = resolve_threads(config.threads);
  const auto& cs = config.circle;
  const char* kind = source == BoundSource::Function ? "function" : source == BoundSource::Zeros ? "zeros" : "t-profile";
  auto report = new_report("bound", input, config.grid.radii(), config);
  const auto radii = report.keys;
  report.metadata["source"] = kind;

  optional<FunctionSpec> observed;  // function whose ln M is reported
  radial::RadialProfile profile;
  std::string lower_name;
  if (source == BoundSource::Zeros) {
    std::filesystem::path path{input};
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    const auto z = read_zeros_file(path, config.merge_radius);
    profile = kernel::counting_profile(z);
    lower_name = "NZ";
    const double p = choose_p(config.p, 0.0);
    observed = FunctionSpec::canonical_product(products::build_f_Z(z, p));
  } else {
    const auto spec = parse_descriptor(input, base_dir, config.merge_radius);
    if (spec.is_entire()) observed = spec;
    auto grid = with_extension(radii, 10.0 * radii.back());
    if (source == BoundSource::Function) {
      const double u0 = funcat::log_abs(spec, 0.0);
      if (!std::isfinite(u0)) fail(ErrorKind::InvalidArgument, "theorem 1 bound needs f(0) != 0");
      auto values = map_radii(grid, threads, [&](double r) { return radial::circle_mean_log(spec, r, cs); });
      profile = radial::RadialProfile(std::move(grid), std::move(values), u0);
      lower_name = "C";
    } else {
      const double t0 = radial::nevanlinna_T(spec, 0.0, cs);
      auto values = map_radii(grid, threads, [&](double r) { return radial::nevanlinna_T(spec, r, cs); });
      profile = radial::RadialProfile(std::move(grid), std::move(values), t0);
      lower_name = "T";
    }
    profile = profile.with_tail(kernel::fit_tail(profile));
  }
  const double p = choose_p(config.p, fitted_order(profile.tail()));
  const auto kp = kernel_params(p, config);
  report.metadata["p"] = p;
  report.metadata["tail"] = tail_json(profile.tail());

  const auto bound = map_radii(radii, threads, [&](double r) { return kernel::kernel_transform(profile, kp, r); });
  std::vector<double> lnM;
  if (observed) lnM = map_radii(radii, threads, [&](double r) { return radial::max_modulus(*observed, r); });
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double lower = profile(radii[i]);
    report.set(lower_name, i, lower);
    report.set("bound_ln", i, bound[i]);
    if (observed) report.set("lnM", i, lnM[i]);
    report.set("lower_ln", i, lower);
    report.set("margin", i, bound[i] - lower);
  }
  return report;
}

GrowthReport cmd_product(const std::string& zeros_path, const RunConfig& config) {
  config.validate();
  const int threads = resolve_threads(config.threads);
  const auto z = read_zeros_file(zeros_path, config.merge_radius);
  const double p = choose_p(config.p, 0.0);
  const auto product = products::build_f_Z(z, p);
  const auto spec = FunctionSpec::canonical_product(product);
  auto report = new_report("product", zeros_path, config.grid.radii(), config);
  const auto& radii = report.keys;
  report.metadata["p"] = p;
  report.metadata["genus"] = product.genus;
  report.metadata["zeros"] = z.total_multiplicity();

  struct Row {
    double lnM, C, NZ;
  };
  const auto rows = parallel_map<Row>(radii.size(), threads, [&](std::size_t i) {
    const double r = radii[i];
    return Row{radial::max_modulus(spec, r), radial::circle_mean_log(spec, r, config.circle),
               points::integral_count(z, r)};
  });
  for (std::size_t i = 0; i < radii.size(); ++i) {
    report.set("lnM", i, rows[i].lnM);
    report.set("C", i, rows[i].C);
    report.set("NZ", i, rows[i].NZ);
    report.set("jensen_residual", i, rows[i].C - product.log_leading - rows[i].NZ);
    report.set("lower_margin", i, rows[i].lnM - rows[i].NZ - product.log_leading);
  }
  return report;
}

GrowthReport cmd_jensen(const std::string& descriptor, const RunConfig& config,
                        const std::filesystem::path& base_dir) {
  config.validate();
  const int threads = resolve_threads(config.threads);
  const auto spec = parse_descriptor(descriptor, base_dir, config.merge_radius);
  auto report = new_report("jensen", descriptor, config.grid.radii(), config);
  const auto& radii = report.keys;
  const double at0 = funcat::log_abs(spec, 0.0);
  if (!std::isfinite(at0)) fail(ErrorKind::InvalidArgument, "Jensen's formula needs f(0) finite and nonzero");
  struct Row {
    double C, NZ, NP;
  };
  const auto rows = parallel_map<Row>(radii.size(), threads, [&](std::size_t i) {
    const double r = radii[i];
    return Row{radial::circle_mean_log(spec, r, config.circle),
               points::integral_count(funcat::known_zeros(spec, r), r),
               points::integral_count(funcat::known_poles(spec, r), r)};
  });
  for (std::size_t i = 0; i < radii.size(); ++i) {
    report.set("C", i, rows[i].C);
    report.set("NZ", i, rows[i].NZ);
    report.set("NP", i, rows[i].NP);
    report.set("jensen_residual", i, rows[i].C - at0 - rows[i].NZ + rows[i].NP);
  }
  return report;
}

}  // namespace growthlab::cli
