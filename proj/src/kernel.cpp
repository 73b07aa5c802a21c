#include "growthlab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "growthlab/error.hpp"
#include "growthlab/quadrature.hpp"

namespace growthlab::kernel {

namespace {

constexpr double kPi = std::numbers::pi;

// s = t^p / (1 + t^p) and w = 1 - s, both without overflow.
double s_of_t(double t, double p) {
  const double lx = p * std::log(t);
  if (lx > 0) return 1.0 / (1.0 + std::exp(-lx));
  const double x = std::exp(lx);
  return x / (1.0 + x);
}
double w_of_t(double t, double p) {
  const double lx = -p * std::log(t);
  if (lx > 0) return 1.0 / (1.0 + std::exp(-lx));
  const double x = std::exp(lx);
  return x / (1.0 + x);
}
double t_of_s(double s, double p) { return std::pow(s / (1.0 - s), 1.0 / p); }
double t_of_w(double w, double p) { return std::exp((std::log1p(-w) - std::log(w)) / p); }

quad::Options options(const KernelParams& k) {
  quad::Options o;
  o.rel_tol = k.quad_rel_tol;
  o.abs_tol = 1e-15;
  o.max_panels = k.max_panels;
  return o;
}

struct Split {
  std::vector<double> lower;  // breakpoints in s on (0, 1/2)
  std::vector<double> upper;  // breakpoints in w on (0, 1/2)
};

Split split_kinks(std::span<const double> kinks_t, double p) {
  Split out;
  for (double t : kinks_t) {
    if (!(t > 0) || !std::isfinite(t)) continue;
    if (t <= 1.0) out.lower.push_back(s_of_t(t, p)); else out.upper.push_back(w_of_t(t, p));
  }
  return out;
}

// p * int over t in (0, t_end] of phi(r t) ds, t_end = inf allowed only
// through the callable path.
double finite_part(const std::function<double(double)>& phi, double r, double p, double t_end,
                   const Split& kinks, const KernelParams& params) {
  const auto opts = options(params);
  double total = 0.0;
  const double s_hi = t_end >= 1.0 ? 0.5 : s_of_t(t_end, p);
  total += quad::integrate([&](double s) { return phi(r * t_of_s(s, p)); }, 0.0, s_hi, opts, kinks.lower).value;
  if (t_end > 1.0) {
    const double w_lo = w_of_t(t_end, p);
    total += quad::integrate([&](double w) { return phi(r * t_of_w(w, p)); }, w_lo, 0.5, opts, kinks.upper).value;
  }
  return p * total;
}

// int_0^we ((1-w)/w)^a dw via w = v^k, k = 1/(1-a), which removes the
// endpoint singularity: the integrand becomes k (1 - v^k)^a.
double power_tail_integral(double we, double a, const KernelParams& params) {
  const double k = 1.0 / (1.0 - a);
  const double v_hi = std::pow(we, 1.0 - a);
  auto f = [&](double v) { return k * std::pow(-std::expm1(k * std::log(v)), a); };
  return quad::integrate(f, 0.0, v_hi, options(params)).value;
}

double tail_part(const RadialProfile& phi, double r, double p, const KernelParams& params) {
  const double end = phi.last_radius();
  const double t_end = end / r;
  const double we = w_of_t(t_end, p);
  const double ve = phi.last_value();
  const Tail& tail = phi.tail();
  switch (tail.kind) {
    case radial::TailKind::Forbidden:
      fail(ErrorKind::TailUndeclared, "profile has no declared tail");
    case radial::TailKind::Constant:
      return p * ve * we;
    case radial::TailKind::LogLinear: {
      // int_0^we ln t dw with ln t = (ln(1-w) - ln w) / p
      const double log_we = -p * std::log(t_end) - std::log1p(std::exp(-p * std::log(t_end)));
      const double i1 = -(1.0 - we) * std::log1p(-we) - we;
      const double i2 = we * log_we - we;
      const double int_log_t = (i1 - i2) / p;
      return p * (ve * we + tail.coefficient * (int_log_t - std::log(t_end) * we));
    }
    case radial::TailKind::Power: {
      const double rho = tail.exponent, sigma = tail.coefficient;
      const double a = rho / p;
      const double base = ve - sigma * std::pow(end, rho);
      return p * (base * we + sigma * std::pow(r, rho) * power_tail_integral(we, a, params));
    }
  }
  return 0.0;
}

double top_decade_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxx > 0 ? sxy / sxx : 0.0;
}

RadialProfile bound_profile(const RadialProfile& phi, const KernelParams& params, std::span<const double> radii) {
  std::vector<double> grid(radii.begin(), radii.end());
  std::vector<double> values;
  values.reserve(grid.size());
  for (double r : grid) values.push_back(kernel_transform(phi, params, r));
  return RadialProfile(std::move(grid), std::move(values), params.p * phi.left_value());
}

RadialProfile with_declared_tail(const RadialProfile& phi, std::optional<Tail> tail) {
  if (tail) return phi.with_tail(*tail);
  if (phi.tail().kind != radial::TailKind::Forbidden) return phi;
  return phi.with_tail(fit_tail(phi));
}

}  // namespace

void KernelParams::validate() const {
  if (!(p >= 1.0) || !std::isfinite(p)) fail(ErrorKind::InvalidArgument, "kernel exponent p must be >= 1");
  if (!(quad_rel_tol > 0)) fail(ErrorKind::InvalidArgument, "quad_rel_tol must be positive");
  if (max_panels < 1) fail(ErrorKind::InvalidArgument, "max_panels must be positive");
}

double paley_constant(double rho) {
  if (!(rho > 0)) fail(ErrorKind::InvalidArgument, "rho must be positive");
  if (rho >= 0.5) return kPi * rho;
  return kPi * rho / std::sin(kPi * rho);
}

double optimal_p(double rho) {
  if (!(rho > 0)) fail(ErrorKind::InvalidArgument, "rho must be positive");
  return std::max(1.0, 2.0 * rho);
}

bool convergence_check(const RadialProfile& phi, double p) {
  switch (phi.tail().kind) {
    case radial::TailKind::Forbidden:
      fail(ErrorKind::TailUndeclared, "convergence needs a declared tail");
    case radial::TailKind::Constant:
    case radial::TailKind::LogLinear:
      return true;
    case radial::TailKind::Power:
      return phi.tail().coefficient == 0.0 || phi.tail().exponent < p;
  }
  return false;
}

double kernel_transform(const RadialProfile& phi, const KernelParams& params, double r) {
  params.validate();
  if (!(r >= 0) || !std::isfinite(r)) fail(ErrorKind::InvalidArgument, "radius must be finite and >= 0");
  if (!convergence_check(phi, params.p))
    fail(ErrorKind::Divergent, "tail exponent " + std::to_string(phi.tail().exponent) +
                                   " >= p = " + std::to_string(params.p));
  const double p = params.p;
  if (r == 0.0) return p * phi.left_value();
  std::vector<double> kinks_t;
  kinks_t.reserve(phi.grid().size());
  for (double g : phi.grid()) kinks_t.push_back(g / r);
  const double t_end = phi.last_radius() / r;
  auto f = [&](double x) { return phi(x); };
  return finite_part(f, r, p, t_end, split_kinks(kinks_t, p), params) + tail_part(phi, r, p, params);
}

double kernel_transform(const std::function<double(double)>& phi, const KernelParams& params, double r,
                        double tail_exponent, std::span<const double> kinks) {
  params.validate();
  const double p = params.p;
  const double a = std::max(0.0, tail_exponent) / p;
  if (!(a < 1.0)) fail(ErrorKind::Divergent, "growth exponent must be below p");
  if (r == 0.0) return p * phi(0.0);

  std::vector<double> kinks_t;
  for (double x : kinks) kinks_t.push_back(x / r);
  Split split = split_kinks(kinks_t, p);
  const auto opts = options(params);
  double lower =
      quad::integrate([&](double s) { return phi(r * t_of_s(s, p)); }, 0.0, 0.5, opts, split.lower).value;

  // Upper half in w = v^k; for phi ~ x^rho the weight k v^(k-1) cancels
  // the w^(-a) growth.
  const double k = std::max(2.0, 1.0 / (1.0 - a));
  const double v_hi = std::pow(0.5, 1.0 / k);
  std::vector<double> vbreaks;
  for (double w : split.upper) vbreaks.push_back(std::pow(w, 1.0 / k));
  auto g = [&](double v) {
    const double lw = k * std::log(v);
    const double weight = k * std::exp((k - 1.0) * std::log(v));
    if (weight == 0.0) return 0.0;
    const double t = std::exp((std::log1p(-std::exp(lw)) - lw) / p);
    return weight * phi(r * t);
  };
  const double upper = quad::integrate(g, 0.0, v_hi, opts, vbreaks).value;
  return p * (lower + upper);
}

double power_bound(const PowerBudget& b, double p, double r) {
  if (!(b.sigma > 0) || !(b.rho > 0)) fail(ErrorKind::InvalidArgument, "budget needs sigma > 0 and rho > 0");
  if (!(p > b.rho))
    fail(ErrorKind::Divergent, "p = " + std::to_string(p) + " <= rho = " + std::to_string(b.rho));
  if (!(r >= 0)) fail(ErrorKind::InvalidArgument, "radius must be >= 0");
  const double growth = r == 0.0 ? 0.0 : std::pow(r, b.rho);
  return b.sigma * growth * b.rho * kPi / std::sin(b.rho * kPi / p) + b.c * p;
}

Tail fit_tail(const RadialProfile& phi) {
  const auto grid = phi.grid();
  const auto vals = phi.values();
  const double lo = grid.back() / 10.0 * (1 - 1e-12);
  std::vector<double> ln_t, v, ln_pos_t, ln_pos_v;
  double vmin = vals.back(), vmax = vals.back();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < lo) continue;
    ln_t.push_back(std::log(grid[i]));
    v.push_back(vals[i]);
    vmin = std::min(vmin, vals[i]);
    vmax = std::max(vmax, vals[i]);
    if (vals[i] > 0) {
      ln_pos_t.push_back(std::log(grid[i]));
      ln_pos_v.push_back(std::log(vals[i]));
    }
  }
  if (vmax - vmin <= 1e-12 * (1.0 + std::abs(vmax))) return Tail::constant();
  if (v.size() < 8)
    fail(ErrorKind::ProfileCoverage, "tail fit needs >= 8 samples in the top decade");
  const double rho = ln_pos_t.size() >= 8 ? top_decade_slope(ln_pos_t, ln_pos_v) : 0.0;
  if (rho <= 0.15) return Tail::log_linear(std::max(0.0, top_decade_slope(ln_t, v)));
  std::vector<double> x;
  for (double lt : ln_t) x.push_back(std::exp(rho * lt));
  // slope of v against t^rho
  double mx = 0, mv = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    mv += v[i];
  }
  mx /= static_cast<double>(x.size());
  mv /= static_cast<double>(x.size());
  double sxx = 0, sxv = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxv += (x[i] - mx) * (v[i] - mv);
  }
  return Tail::power(rho, std::max(0.0, sxv / sxx));
}

RadialProfile counting_profile(const points::PointDistribution& z) {
  if (z.origin_multiplicity() != 0)
    fail(ErrorKind::OriginPoint, "Z(0) = " + std::to_string(z.origin_multiplicity()) + " != 0");
  if (z.empty()) return RadialProfile({1.0}, {0.0}, 0.0, Tail::constant(), true);
  std::vector<double> grid;
  for (double m : z.moduli())
    if (grid.empty() || m > grid.back()) grid.push_back(m);
  std::vector<double> values;
  values.reserve(grid.size());
  for (double t : grid) values.push_back(points::integral_count(z, t));
  const double n = static_cast<double>(z.total_multiplicity());
  return RadialProfile(std::move(grid), std::move(values), 0.0, Tail::log_linear(n), true);
}

RadialProfile theorem1_bound(const RadialProfile& c_profile, const KernelParams& params,
                             std::span<const double> radii, std::optional<Tail> tail) {
  return bound_profile(with_declared_tail(c_profile, tail), params, radii);
}

RadialProfile theorem2_bound(const points::PointDistribution& z, const KernelParams& params,
                             std::span<const double> radii) {
  return bound_profile(counting_profile(z), params, radii);
}

RadialProfile theorem3_bound(const RadialProfile& t_profile, const KernelParams& params,
                             std::span<const double> radii, std::optional<Tail> tail) {
  return bound_profile(with_declared_tail(t_profile, tail), params, radii);
}

funcat::FunctionSpec zero_free_multiplier(const funcat::FunctionSpec& f, double p) {
  const auto* e = std::get_if<funcat::ExpPoly>(&f.node().v);
  if (e == nullptr) fail(ErrorKind::InvalidArgument, "zero-free multiplier needs an exp(P) spec");
  std::vector<funcat::cplx> inner;
  inner.reserve(e->inner.size());
  for (const auto& c : e->inner) inner.push_back(-c);
  // constant term: p Re P(0) - P(0)
  inner.back() += p * e->inner.back().real();
  return funcat::FunctionSpec::exp_poly(std::move(inner));
}

}  // namespace growthlab::kernel
