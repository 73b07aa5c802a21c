#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "growthlab/cli/commands.hpp"
#include "growthlab/cli/parallel.hpp"
#include "growthlab/error.hpp"
#include "growthlab/kernel.hpp"
#include "growthlab/products.hpp"
#include "growthlab/radial.hpp"

namespace growthlab::cli {

namespace {

using funcat::FunctionSpec;
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

class Recorder {
 public:
  Recorder(std::string suite, std::vector<VerifyCheck>& out) : suite_(std::move(suite)), out_(out) {}

  // Passes when |value| <= tol.
  void near_zero(const std::string& name, double value, double tol) {
    out_.push_back({suite_, name, value, tol, std::abs(value) <= tol});
  }
  // Passes when value >= -tol.
  void at_least_zero(const std::string& name, double value, double tol) {
    out_.push_back({suite_, name, value, tol, value >= -tol});
  }
  void rel(const std::string& name, double got, double want, double tol) {
    near_zero(name, (got - want) / std::max(std::abs(want), 1e-300), tol);
  }
  void truth(const std::string& name, bool ok) { out_.push_back({suite_, name, ok ? 0.0 : 1.0, 0.0, ok}); }

 private:
  std::string suite_;
  std::vector<VerifyCheck>& out_;
};

std::string num(double x) { return format_number(x); }

FunctionSpec zero_form(std::initializer_list<points::PointMass> z, cplx leading = 1.0) {
  return FunctionSpec::zero_form(leading, points::PointDistribution::from_points(z));
}

void suite_paley(const RunConfig& config, std::vector<VerifyCheck>& out) {
  Recorder rec("paley", out);
  kernel::KernelParams kp;
  kp.quad_rel_tol = config.kernel_tol;
  for (double rho : {0.1, 0.25, 0.5, 0.75, 1.0, 2.0, 5.0}) {
    kp.p = kernel::optimal_p(rho);
    const double q = kernel::kernel_transform([rho](double t) { return std::pow(t, rho); }, kp, 1.0, rho);
    rec.rel("P(" + num(rho) + ") quadrature vs closed form", q, kernel::paley_constant(rho), 1e-8);
  }
  rec.rel("P(1) = pi", kernel::paley_constant(1.0), kPi, 1e-15);
  rec.near_zero("P continuous at 1/2",
                kernel::paley_constant(0.5) - kernel::paley_constant(std::nextafter(0.5, 0.0)), 1e-12);
  bool at_least_one = true;
  for (double rho = 0.01; rho < 10; rho *= 1.3) at_least_one = at_least_one && kernel::paley_constant(rho) >= 1.0;
  rec.truth("P >= 1 on (0, 10)", at_least_one);
}

void suite_kernel(const RunConfig& config, std::vector<VerifyCheck>& out) {
  Recorder rec("kernel", out);
  kernel::KernelParams kp;
  kp.quad_rel_tol = config.kernel_tol;
  const auto one = radial::RadialProfile::constant(1.0);
  for (double p : {1.0, 1.5, 2.0, 3.5}) {
    kp.p = p;
    for (double r : {0.0, 1.0, 10.0})
      rec.rel("mass p=" + num(p) + " r=" + num(r), kernel::kernel_transform(one, kp, r), p, 1e-10);
  }
  // scale covariance with a smooth log-growth profile
  kp.p = 2.0;
  auto phi = [](double t) { return std::log1p(t); };
  for (double c : {0.5, 3.0}) {
    const double a = kernel::kernel_transform(phi, kp, 2.0);
    const double b = kernel::kernel_transform([&](double t) { return phi(c * t); }, kp, 2.0 / c);
    rec.rel("scale covariance c=" + num(c), b, a, 1e-9);
  }
  // monotonicity in the profile
  const std::vector<std::pair<std::function<double(double)>, std::function<double(double)>>> pairs = {
      {[](double) { return 0.0; }, [](double) { return 1.0; }},
      {[](double t) { return std::log1p(t); }, [](double t) { return std::log1p(2 * t); }},
      {[](double t) { return std::max(0.0, std::log(t)); }, [](double t) { return std::log1p(t); }},
      {[](double t) { return std::sqrt(t); }, [](double t) { return std::sqrt(t) + 0.1; }},
      {[](double t) { return 0.5 * std::sqrt(t); }, [](double t) { return std::sqrt(t); }},
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    kp.p = 1.5;
    for (double r : {0.5, 2.0, 8.0}) {
      const double lo = kernel::kernel_transform(pairs[i].first, kp, r, 0.5);
      const double hi = kernel::kernel_transform(pairs[i].second, kp, r, 0.5);
      rec.at_least_zero("monotone pair " + std::to_string(i + 1) + " r=" + num(r), hi - lo, 1e-12);
    }
  }
  // T(r; exp) = r / pi with p = 2 gives bound r
  kp.p = 2.0;
  const auto t_exp = radial::RadialProfile({1.0}, {1.0 / kPi}, 0.0, radial::Tail::power(1.0, 1.0 / kPi));
  for (double r : {1.0, 5.0, 20.0}) rec.rel("T(exp) bound at r=" + num(r), kernel::kernel_transform(t_exp, kp, r), r, 1e-9);
  rec.rel("power_bound(1,1,0; p=2, r=1) = pi", kernel::power_bound({1.0, 1.0, 0.0}, 2.0, 1.0), kPi, 1e-15);
}

void suite_jensen(const RunConfig& config, std::vector<VerifyCheck>& out) {
  Recorder rec("jensen", out);
  const auto& cs = config.circle;
  const auto f = zero_form({{{1.0, 0.0}, 1}, {{0.0, 2.0}, 1}});
  for (double r : {0.5, 1.5, 3.0}) rec.near_zero("(z-1)(z-2i) r=" + num(r), radial::jensen_residual(f, r, cs), 1e-6);
  const auto sinc = funcat::sinc_pi();
  for (double r : {1.5, 3.5, 7.5}) rec.near_zero("sinc r=" + num(r), radial::jensen_residual(sinc, r, cs), 1e-6);
  rec.near_zero("constant, empty zero set", radial::jensen_residual(FunctionSpec::constant(3.0), 2.0, cs), 0.0);
  const auto empty = FunctionSpec::canonical_product(products::build_f_Z(points::PointDistribution{}, 1.0));
  rec.near_zero("empty canonical product", radial::jensen_residual(empty, 5.0, cs), 0.0);
  for (const auto& named : funcat::reference_catalog()) {
    if (!named.spec.has_structural_zeros()) continue;
    double worst = 0.0;
    for (std::size_t i = 0; i < 20; ++i) {
      const double r = 0.1 * std::pow(200.0, static_cast<double>(i) / 19.0);
      worst = std::max(worst, std::abs(radial::jensen_residual(named.spec, r, cs)));
    }
    rec.near_zero("catalog " + named.name + " (20 radii)", worst, 1e-6);
  }
}

void suite_chain(const RunConfig& config, std::vector<VerifyCheck>& out) {
  Recorder rec("chain", out);
  std::vector<double> radii;
  for (int i = 0; i < 20; ++i) radii.push_back(0.1 * std::pow(200.0, i / 19.0));
  const auto catalog = funcat::reference_catalog();
  const auto worst = parallel_map<double>(catalog.size(), resolve_threads(config.threads), [&](std::size_t i) {
    return radial::chain_check(catalog[i].spec, radii, config.circle).max_violation;
  });
  for (std::size_t i = 0; i < catalog.size(); ++i) rec.near_zero("chain " + catalog[i].name, worst[i], 1e-8);
}

void suite_products(const RunConfig& config, std::vector<VerifyCheck>& out) {
  Recorder rec("products", out);
  const auto& cs = config.circle;
  // +-k product of genus 1 against sin(pi z)/(pi z)
  products::ZeroGenerator pm{[](std::size_t k) {
                               const double a = static_cast<double>(k);
                               return std::vector<cplx>{a, -a};
                             },
                             1.0};
  const auto pm_spec = products::build_f_Z(pm, 2.0, 10000.5);
  const auto sinc = funcat::sinc_pi();
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const cplx z = std::polar(0.1 + 0.7 * k / 19.0, 2.0 * kPi * k / 20.0 + 0.3);
    const cplx a = std::exp(products::log_product(pm_spec, z));
    const cplx b = funcat::evaluate(sinc, z).value;
    worst = std::max(worst, std::abs(a / b - 1.0));
  }
  rec.near_zero("+-k product vs sinc, 1e4 pairs, 20 probes", worst, 1e-4);

  // pair-symmetric zeros: genus 1 equals prod (1 - z^2/a^2)
  std::vector<points::PointMass> sym;
  for (int k = 1; k <= 30; ++k) {
    const cplx a = std::polar(1.0 + 0.37 * k, 0.2 * k);
    sym.push_back({a, 1});
    sym.push_back({-a, 1});
  }
  const auto sym_spec = products::build_f_Z(points::PointDistribution::from_points(sym), 2.0);
  double sym_worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const cplx z = std::polar(0.3 + 0.4 * k, 1.1 * k);
    double direct = 0.0;
    for (const auto& e : sym_spec.zeros.entries())
      if (e.point.real() > 0 || (e.point.real() == 0 && e.point.imag() > 0))
        direct += std::log(std::abs(1.0 - z * z / (e.point * e.point)));
    sym_worst = std::max(sym_worst, std::abs(products::log_abs_product(sym_spec, z) - direct));
  }
  rec.near_zero("pair-symmetric genus 1 vs prod(1 - z^2/a^2)", sym_worst, 1e-10);

  // zeros at k^2: faithfulness, Jensen, growth lower bound, order fit
  std::vector<points::PointMass> sq;
  for (int k = 1; k <= 200; ++k) sq.push_back({static_cast<double>(k) * k, 1});
  const auto z2 = points::PointDistribution::from_points(sq);
  const auto sq_spec = products::build_f_Z(z2, 1.0);
  bool faithful = true;
  for (const auto& e : z2.entries()) faithful = faithful && std::isinf(products::log_abs_product(sq_spec, e.point));
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const cplx z{u(rng), u(rng)};
    if (z2.multiplicity_at(z) == 0) faithful = faithful && std::isfinite(products::log_abs_product(sq_spec, z));
  }
  rec.truth("k^2 product zero faithfulness", faithful);
  const auto f = FunctionSpec::canonical_product(sq_spec);
  double jensen = 0.0, lower = 1e300;
  for (double r : {0.5, 3.0, 10.5, 50.0, 400.0, 2500.0}) {
    jensen = std::max(jensen, std::abs(radial::jensen_residual(f, r, cs)));
    lower = std::min(lower, radial::max_modulus(f, r) - points::integral_count(z2, r) - sq_spec.log_leading);
  }
  rec.near_zero("k^2 product Jensen (<= 50 zeros enclosed)", jensen, 1e-6);
  rec.at_least_zero("k^2 product ln M >= N_Z + ln|f(0)|", lower, 1e-6);
  const auto grid = radial::log_grid(1.0, 1e4, 16);
  const auto m = radial::RadialProfile::sample([&](double r) { return radial::max_modulus(f, r); }, grid, 0.0);
  rec.near_zero("k^2 product fitted order - 0.5", radial::estimate_order_type(m).order - 0.5, 0.1);
}

void suite_meromorphic(const RunConfig& config, std::vector<VerifyCheck>& out) {
  Recorder rec("meromorphic", out);
  const auto& cs = config.circle;
  const auto num_f = FunctionSpec::polynomial({1.0, -1.0});
  const auto den_g = FunctionSpec::polynomial({1.0, 2.0});
  const auto F = FunctionSpec::quotient(num_f, den_g);
  // T(r; f/g) = mean of max(ln|f|, ln|g|) - ln|g(0)| for coprime f, g.
  for (double r : {0.5, 1.5, 4.0}) {
    const double T = radial::nevanlinna_T(F, r, cs);
    const double mean_g = radial::circle_mean_log(den_g, r, cs);
    const double excess = radial::mean_positive_part(
        [&](double t) {
          const cplx z = std::polar(r, t);
          return funcat::log_abs(num_f, z) - funcat::log_abs(den_g, z);
        },
        cs);
    rec.near_zero("T = C(max(ln|f|, ln|g|)) - ln|g(0)| at r=" + num(r), T - (mean_g + excess - std::log(2.0)), 1e-6);
  }
  // first main theorem: T(r; F) - T(r; 1/F) = ln|F(0)|
  for (double r : {0.5, 1.5, 4.0}) {
    const double d = radial::nevanlinna_T(F, r, cs) - radial::nevanlinna_T(funcat::reciprocal(F), r, cs);
    rec.near_zero("T(F) - T(1/F) = ln|F(0)| at r=" + num(r), d - std::log(0.5), 1e-8);
  }
  for (double r : {0.7, 2.5}) {
    const double d = radial::proximity(F, r, cs) - radial::proximity(funcat::reciprocal(F), r, cs) -
                     radial::circle_mean_log(F, r, cs);
    rec.near_zero("m(F) - m(1/F) = C(F) at r=" + num(r), d, 1e-8);
  }
}

void suite_lemma22(const RunConfig&, std::vector<VerifyCheck>& out) {
  Recorder rec("lemma22", out);
  // u = ln+(|z|/0.5): C_u(t) = ln+(2t), u(1) = ln 2, p = 1
  const auto c1 = radial::RadialProfile({0.5, 1.0}, {0.0, std::log(2.0)}, 0.0, radial::Tail::log_linear(1.0), true);
  rec.at_least_zero("u = ln+(2|z|), p = 1", radial::lemma22_check(c1, std::log(2.0), 1.0), 1e-8);
  // u = (Re z + 1)+: C_u(t) = 1 for t <= 1, (t sin a + a)/pi with a = acos(-1/t) beyond
  auto c2 = [](double t) {
    if (t <= 1.0) return 1.0;
    const double a = std::acos(-1.0 / t);
    return (t * std::sin(a) + a) / kPi;
  };
  rec.at_least_zero("u = (Re z + 1)+, p = 2", radial::lemma22_check(c2, 2.0, 2.0, 1.0), 1e-8);
  rec.near_zero("u = 0", radial::lemma22_check(radial::RadialProfile::constant(0.0), 0.0, 1.0), 0.0);
}

using SuiteFn = void (*)(const RunConfig&, std::vector<VerifyCheck>&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"paley", suite_paley},     {"kernel", suite_kernel},           {"jensen", suite_jensen},
      {"chain", suite_chain},     {"products", suite_products},       {"meromorphic", suite_meromorphic},
      {"lemma22", suite_lemma22},
  };
  return r;
}

}  // namespace

const VerifyCheck* VerifyResult::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

nlohmann::json VerifyResult::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"suite", c.suite}, {"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance},
                   {"passed", c.passed}});
  nlohmann::json out = {{"schema_version", kSchemaVersion}, {"suite", suite}, {"passed", passed},
                        {"seconds", seconds}, {"checks", std::move(arr)}};
  if (const auto* f = first_failure()) out["first_failure"] = f->suite + ": " + f->name;
  return out;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

VerifyResult cmd_verify(const std::string& suite, const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  VerifyResult result;
  result.suite = suite;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    fn(config, result.checks);
  }
  if (!found) fail(ErrorKind::InvalidArgument, "unknown verify suite '" + suite + "'");
  result.passed = result.first_failure() == nullptr;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace growthlab::cli
