#include "growthlab/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "growthlab/error.hpp"
#include "growthlab/kernel.hpp"
#include "growthlab/quadrature.hpp"

namespace growthlab::radial {

namespace {

using cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Fixed irrational node offset: keeps trapezoid nodes off the real axis,
// where most catalog zeros sit.
constexpr double kNodeOffset = 0.3819660112501051;

struct NearZero {
  cplx point;
  double multiplicity;
};

// One leaf of the spec tree with the zeros extracted on the current circle.
struct ExtractedLeaf {
  const funcat::Node* node;
  FunctionSpec spec;
  double sign;
  std::vector<NearZero> near;
};

struct CircleIntegrand {
  std::vector<ExtractedLeaf> leaves;
  double addback = 0.0;

  double operator()(cplx z) const;
};

bool is_near(double modulus, double r, double band) { return std::abs(modulus - r) <= band * r; }

void collect(const FunctionSpec& spec, double sign, double r, const CircleQuadratureSettings& s,
             CircleIntegrand& out) {
  const auto& v = spec.node().v;
  if (const auto* p = std::get_if<funcat::Product>(&v)) {
    for (const auto& f : p->factors) collect(f, sign, r, s, out);
    return;
  }
  if (const auto* q = std::get_if<funcat::Quotient>(&v)) {
    collect(q->numerator, sign, r, s, out);
    collect(q->denominator, -sign, r, s, out);
    return;
  }
  ExtractedLeaf leaf{&spec.node(), spec, sign, {}};
  if (spec.has_structural_zeros()) {
    const auto zeros = funcat::known_zeros(spec, r * (1.0 + s.extraction_band));
    for (const auto& e : zeros.entries()) {
      const double am = std::abs(e.point);
      if (!is_near(am, r, s.extraction_band)) continue;
      leaf.near.push_back({e.point, static_cast<double>(e.multiplicity)});
      // Mean of ln|z - a| over |z| = r.
      out.addback += sign * e.multiplicity * std::max(std::log(r), std::log(am));
    }
  }
  out.leaves.push_back(std::move(leaf));
}

bool is_near_point(const std::vector<NearZero>& near, cplx a) {
  return std::any_of(near.begin(), near.end(), [&](const NearZero& n) { return n.point == a; });
}

double remainder_from_roots(cplx leading, const points::PointDistribution& zeros,
                            const std::vector<NearZero>& near, cplx z) {
  double sum = std::log(std::abs(leading));
  if (zeros.origin_multiplicity() > 0) sum += zeros.origin_multiplicity() * std::log(std::abs(z));
  for (const auto& e : zeros.entries())
    if (!is_near_point(near, e.point)) sum += e.multiplicity * std::log(std::abs(z - e.point));
  return sum;
}

double leaf_remainder(const ExtractedLeaf& leaf, cplx z) {
  if (leaf.near.empty()) return funcat::log_abs(leaf.spec, z);
  const auto& v = leaf.node->v;
  if (const auto* p = std::get_if<funcat::Polynomial>(&v))
    return remainder_from_roots(p->coefficients.front(), p->roots, leaf.near, z);
  if (const auto* f = std::get_if<funcat::ZeroForm>(&v))
    return remainder_from_roots(f->leading, f->zeros, leaf.near, z);
  if (const auto* c = std::get_if<funcat::CanonicalProduct>(&v)) {
    // ln|E_q(z/a)| - ln|z - a| = -ln|a| + Re sum_{j<=q} (z/a)^j / j
    const int q = c->spec.genus;
    double sum = c->spec.log_leading;
    for (const auto& e : c->spec.zeros.entries()) {
      const cplx w = z / e.point;
      if (!is_near_point(leaf.near, e.point)) {
        sum += e.multiplicity * products::log_primary_factor(q, w).real();
        continue;
      }
      double poly = 0.0;
      cplx pw = w;
      for (int j = 1; j <= q; ++j) {
        poly += pw.real() / j;
        pw *= w;
      }
      sum += e.multiplicity * (poly - std::log(std::abs(e.point)));
    }
    return sum;
  }
  double value = funcat::log_abs(leaf.spec, z);
  for (const auto& n : leaf.near) value -= n.multiplicity * std::log(std::abs(z - n.point));
  return value;
}

double CircleIntegrand::operator()(cplx z) const {
  double sum = 0.0;
  for (const auto& leaf : leaves) sum += leaf.sign * leaf_remainder(leaf, z);
  return sum;
}

struct PeriodicMean {
  double value = 0.0;
  bool converged = false;
  double min_sample = std::numeric_limits<double>::infinity();
  double max_sample = -std::numeric_limits<double>::infinity();
};

// Nested trapezoid rule on a periodic function of theta. Accepts after two
// consecutive doublings agree, which guards against aliasing coincidences.
PeriodicMean periodic_mean(const std::function<double(double)>& g, const CircleQuadratureSettings& s) {
  PeriodicMean out;
  const double theta0 = kTwoPi * kNodeOffset / s.initial_nodes;
  double sum = 0.0, comp = 0.0;
  auto add = [&](double x) {
    out.min_sample = std::min(out.min_sample, x);
    out.max_sample = std::max(out.max_sample, x);
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  std::size_t n = static_cast<std::size_t>(s.initial_nodes);
  for (std::size_t k = 0; k < n; ++k) add(g(theta0 + kTwoPi * static_cast<double>(k) / static_cast<double>(n)));
  double estimate = sum / static_cast<double>(n);
  int agreements = 0;
  while (2 * n <= s.max_nodes) {
    for (std::size_t k = 0; k < n; ++k)
      add(g(theta0 + kTwoPi * (static_cast<double>(k) + 0.5) / static_cast<double>(n)));
    n *= 2;
    const double next = sum / static_cast<double>(n);
    if (!std::isfinite(next)) {
      out.value = next;
      return out;
    }
    if (std::abs(next - estimate) <= s.rel_tol * (1.0 + std::abs(next))) {
      if (++agreements >= 2) {
        out.value = next;
        out.converged = true;
        return out;
      }
    } else {
      agreements = 0;
    }
    estimate = next;
  }
  out.value = estimate;
  return out;
}

double golden_max(const std::function<double(double)>& h, double a, double b) {
  constexpr double g = 0.6180339887498949;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = h(x1), f2 = h(x2);
  while (b - a > 1e-12) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = h(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = h(x1);
    }
  }
  return std::max(f1, f2);
}

double log_abs_at_origin(const FunctionSpec& spec) { return funcat::log_abs(spec, 0.0); }

void require_radius(double r) {
  if (!(r >= 0) || !std::isfinite(r)) fail(ErrorKind::InvalidArgument, "radius must be finite and >= 0");
}

}  // namespace

void CircleQuadratureSettings::validate() const {
  if (initial_nodes < 8) fail(ErrorKind::InvalidArgument, "initial_nodes must be >= 8");
  if (!(rel_tol > 0)) fail(ErrorKind::InvalidArgument, "rel_tol must be positive");
  if (!(proximity_rel_tol > 0)) fail(ErrorKind::InvalidArgument, "proximity_rel_tol must be positive");
  if (!(singularity_margin > 0)) fail(ErrorKind::InvalidArgument, "singularity_margin must be positive");
  if (!(extraction_band >= singularity_margin))
    fail(ErrorKind::InvalidArgument, "extraction_band must be >= singularity_margin");
  if (max_nodes < static_cast<std::size_t>(initial_nodes))
    fail(ErrorKind::InvalidArgument, "max_nodes must be >= initial_nodes");
}

double max_modulus(const FunctionSpec& spec, double r) {
  require_radius(r);
  if (r == 0.0) return log_abs_at_origin(spec);
  if (spec.positive_coefficients()) return funcat::log_abs(spec, r);

  constexpr int kCoarse = 256;
  const double step = kTwoPi / kCoarse;
  auto h = [&](double theta) { return funcat::log_abs(spec, std::polar(r, theta)); };
  std::vector<double> v(kCoarse);
  for (int k = 0; k < kCoarse; ++k) v[k] = h(k * step);
  std::vector<int> peaks;
  for (int k = 0; k < kCoarse; ++k) {
    const double prev = v[(k + kCoarse - 1) % kCoarse], next = v[(k + 1) % kCoarse];
    if (v[k] >= prev && v[k] >= next) peaks.push_back(k);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](int a, int b) { return v[a] > v[b]; });
  if (peaks.size() > 8) peaks.resize(8);
  double best = *std::max_element(v.begin(), v.end());
  for (int k : peaks) best = std::max(best, golden_max(h, (k - 1) * step, (k + 1) * step));
  return best;
}

double circle_mean_log(const FunctionSpec& spec, double r, const CircleQuadratureSettings& s) {
  require_radius(r);
  s.validate();
  if (r == 0.0) return log_abs_at_origin(spec);

  CircleIntegrand integrand;
  collect(spec, 1.0, r, s, integrand);
  bool unknown_zero_hit = false;
  auto g = [&](double theta) {
    double x = integrand(std::polar(r, theta));
    // A node landing exactly on an extracted zero gives inf - inf; step
    // off it by a hair, the remainder is smooth there.
    for (int nudge = 1; !std::isfinite(x) && nudge <= 4; ++nudge)
      x = integrand(std::polar(r, theta + nudge * 1e-9));
    if (!std::isfinite(x)) unknown_zero_hit = true;
    return x;
  };
  const PeriodicMean m = periodic_mean(g, s);
  if (unknown_zero_hit || !std::isfinite(m.value))
    fail(ErrorKind::SingularityUnresolved,
         "ln|f| is singular on the circle r = " + std::to_string(r) + " at a zero without structural data");
  if (!m.converged) {
    if (m.min_sample < m.max_sample - 30.0)
      fail(ErrorKind::SingularityUnresolved,
           "no convergence at r = " + std::to_string(r) + "; |f| nearly vanishes on the circle");
    fail(ErrorKind::QuadratureStall, "circle quadrature did not converge at r = " + std::to_string(r));
  }
  return m.value + integrand.addback;
}

double disk_mean(const RadialProfile& c, double r) {
  require_radius(r);
  if (r == 0.0) return c.left_value();
  // Antiderivatives of t and t ln t.
  auto t2 = [](double t) { return 0.5 * t * t; };
  auto t2log = [](double t) { return 0.5 * t * t * std::log(t) - 0.25 * t * t; };
  // int (a + b ln t) t dt over [x, y]
  auto log_linear = [&](double a, double b, double x, double y) {
    return a * (t2(y) - t2(x)) + b * (t2log(y) - t2log(x));
  };

  const auto grid = c.grid();
  const auto vals = c.values();
  double total = 0.0;
  // (0, g0]: linear in t from the left value.
  {
    const double g0 = grid.front();
    const double y = std::min(r, g0);
    const double slope = (vals.front() - c.left_value()) / g0;
    total += c.left_value() * t2(y) + slope * y * y * y / 3.0;
  }
  for (std::size_t i = 0; i + 1 < grid.size() && grid[i] < r; ++i) {
    const double x = grid[i], y = std::min(r, grid[i + 1]);
    const double b = (vals[i + 1] - vals[i]) / std::log(grid[i + 1] / grid[i]);
    const double a = vals[i] - b * std::log(x);
    total += log_linear(a, b, x, y);
  }
  const double end = grid.back();
  if (r > end) {
    const Tail& tail = c.tail();
    const double ve = vals.back();
    switch (tail.kind) {
      case TailKind::Forbidden:
        fail(ErrorKind::ProfileCoverage,
             "disk mean at r = " + std::to_string(r) + " beyond profile end " + std::to_string(end));
      case TailKind::Constant:
        total += ve * (t2(r) - t2(end));
        break;
      case TailKind::LogLinear:
        total += log_linear(ve - tail.coefficient * std::log(end), tail.coefficient, end, r);
        break;
      case TailKind::Power: {
        const double rho = tail.exponent, sig = tail.coefficient;
        total += (ve - sig * std::pow(end, rho)) * (t2(r) - t2(end)) +
                 sig * (std::pow(r, rho + 2) - std::pow(end, rho + 2)) / (rho + 2);
        break;
      }
    }
  }
  return 2.0 * total / (r * r);
}

double mean_positive_part(const std::function<double(double)>& g, const CircleQuadratureSettings& s) {
  s.validate();
  const double theta0 = kTwoPi * kNodeOffset / 256.0;
  auto sample = [&](std::size_t n, std::vector<double>& vals) {
    vals.resize(n);
    for (std::size_t k = 0; k < n; ++k) vals[k] = g(theta0 + kTwoPi * static_cast<double>(k) / static_cast<double>(n));
  };
  auto crossings = [](const std::vector<double>& vals) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < vals.size(); ++k)
      if ((vals[k] > 0) != (vals[(k + 1) % vals.size()] > 0)) ++c;
    return c;
  };
  std::size_t n = 256;
  std::vector<double> vals;
  sample(n, vals);
  std::size_t count = crossings(vals);
  for (int round = 0; round < 6; ++round) {
    std::vector<double> finer;
    sample(2 * n, finer);
    const std::size_t c2 = crossings(finer);
    vals.swap(finer);
    n *= 2;
    if (c2 == count) break;
    count = c2;
  }

  std::vector<double> breaks;
  const double h = kTwoPi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double va = vals[k], vb = vals[(k + 1) % n];
    if ((va > 0) == (vb > 0)) continue;
    double a = theta0 + h * static_cast<double>(k), b = a + h;
    const bool a_pos = va > 0;
    for (int it = 0; it < 60 && b - a > 1e-15 * (1.0 + std::abs(a)); ++it) {
      const double m = 0.5 * (a + b);
      if ((g(m) > 0) == a_pos) a = m; else b = m;
    }
    breaks.push_back(0.5 * (a + b));
  }
  std::sort(breaks.begin(), breaks.end());
  if (count == 0 && std::all_of(vals.begin(), vals.end(), [](double x) { return x <= 0; })) return 0.0;

  quad::Options opts;
  opts.rel_tol = s.proximity_rel_tol;
  double scale = 0.0;
  for (double x : vals)
    if (std::isfinite(x)) scale = std::max(scale, std::abs(x));
  opts.abs_tol = 1e-14 * (1.0 + scale);
  opts.max_panels = 50000;
  auto pos = [&](double theta) { return std::max(g(theta), 0.0); };
  const auto res = quad::integrate(pos, theta0, theta0 + kTwoPi, opts, breaks);
  return res.value / kTwoPi;
}

double proximity(const FunctionSpec& spec, double r, const CircleQuadratureSettings& s) {
  require_radius(r);
  if (r == 0.0) return std::max(0.0, log_abs_at_origin(spec));
  return mean_positive_part([&](double theta) { return funcat::log_abs(spec, std::polar(r, theta)); }, s);
}

double nevanlinna_T(const FunctionSpec& spec, double r, const CircleQuadratureSettings& s) {
  require_radius(r);
  const auto poles = funcat::known_poles(spec, r);
  if (poles.origin_multiplicity() > 0) fail(ErrorKind::InvalidArgument, "F has a pole at the origin");
  if (r == 0.0) return proximity(spec, r, s);
  return proximity(spec, r, s) + points::integral_count(poles, r);
}

double jensen_residual(const FunctionSpec& spec, double r, const CircleQuadratureSettings& s) {
  require_radius(r);
  const double at0 = log_abs_at_origin(spec);
  if (!std::isfinite(at0)) fail(ErrorKind::InvalidArgument, "f(0) must be finite and nonzero");
  const auto zeros = funcat::known_zeros(spec, r);
  const auto poles = funcat::known_poles(spec, r);
  if (r == 0.0) return 0.0;
  return circle_mean_log(spec, r, s) - at0 - points::integral_count(zeros, r) + points::integral_count(poles, r);
}

RadialProfile circle_mean_profile(const FunctionSpec& spec, std::vector<double> grid,
                                  const CircleQuadratureSettings& s, Tail tail) {
  const double at0 = log_abs_at_origin(spec);
  if (!std::isfinite(at0)) fail(ErrorKind::InvalidArgument, "C profile needs f(0) finite and nonzero");
  std::vector<double> values;
  values.reserve(grid.size());
  for (double t : grid) values.push_back(circle_mean_log(spec, t, s));
  return RadialProfile(std::move(grid), std::move(values), at0, tail, spec.is_entire());
}

double chain_violation(const ChainRow& row) {
  return std::max({0.0, row.u0 - row.B, row.B - row.C, row.C - row.lnM, std::max(row.C, 0.0) - row.T,
                   row.T - std::max(row.lnM, 0.0)});
}

std::vector<double> chain_grid(std::span<const double> radii) {
  std::vector<double> sorted(radii.begin(), radii.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || !(sorted.front() > 0)) fail(ErrorKind::InvalidArgument, "chain radii must be positive");
  auto grid = log_grid(sorted.front() / 100.0, sorted.back(), 64);
  grid.insert(grid.end(), sorted.begin(), sorted.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) { return std::abs(a - b) <= 1e-12 * b; }),
             grid.end());
  // Keep the requested radii exactly on the grid.
  for (double r : sorted) {
    auto it = std::lower_bound(grid.begin(), grid.end(), r * (1 - 1e-12));
    if (it != grid.end()) *it = r;
  }
  return grid;
}

ChainReport chain_check(const FunctionSpec& spec, std::span<const double> radii,
                        const CircleQuadratureSettings& s) {
  ChainReport report;
  if (radii.empty()) return report;
  const auto c_profile = circle_mean_profile(spec, chain_grid(radii), s);
  const double u0 = c_profile.left_value();

  for (double r : radii) {
    ChainRow row;
    row.r = r;
    row.u0 = u0;
    row.B = disk_mean(c_profile, r);
    row.C = c_profile(r);
    row.lnM = max_modulus(spec, r);
    row.T = nevanlinna_T(spec, r, s);
    row.violation = chain_violation(row);
    report.max_violation = std::max(report.max_violation, row.violation);
    report.rows.push_back(row);
  }
  return report;
}

OrderType estimate_order_type(const RadialProfile& m, std::optional<double> given_order) {
  const auto grid = m.grid();
  const auto vals = m.values();
  const double lo = grid.back() / 10.0 * (1 - 1e-12);
  std::vector<double> x, y, rs, vs;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < lo || !(vals[i] > 0)) continue;
    x.push_back(std::log(grid[i]));
    y.push_back(std::log(vals[i]));
    rs.push_back(grid[i]);
    vs.push_back(vals[i]);
  }
  if (x.size() < 8)
    fail(ErrorKind::ProfileCoverage,
         "order fit needs >= 8 positive samples in the top decade, have " + std::to_string(x.size()));
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
  OrderType out;
  out.order = sxy / sxx;
  auto type_at = [&](double rho) {
    double t = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) t = std::max(t, vs[i] / std::pow(rs[i], rho));
    return t;
  };
  out.type = type_at(out.order);
  if (given_order) out.type_at_given_order = type_at(*given_order);
  return out;
}

double lemma22_check(const RadialProfile& c_profile, double u_at_1, double p) {
  kernel::KernelParams params;
  params.p = p;
  return kernel::kernel_transform(c_profile, params, 1.0) - u_at_1;
}

double lemma22_check(const std::function<double(double)>& c_u, double u_at_1, double p, double tail_exponent) {
  kernel::KernelParams params;
  params.p = p;
  return kernel::kernel_transform(c_u, params, 1.0, tail_exponent) - u_at_1;
}

}  // namespace growthlab::radial
