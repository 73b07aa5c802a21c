#include "growthlab/funcat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "growthlab/error.hpp"
#include "growthlab/special.hpp"

namespace growthlab::funcat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// |value| < 1e-300 counts as an exact zero.
const double kLogZeroThreshold = std::log(1e-300);

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Value and error expressed in log form: value = exp(log).
struct LogEval {
  cplx log;
  double est_rel_err;
};

LogEval zero_eval() { return {{kNegInf, 0.0}, 0.0}; }

// --- polynomials ---------------------------------------------------------

struct Horner {
  cplx p, dp;
};

Horner horner(const std::vector<cplx>& c, cplx z) {
  cplx p = c.front(), dp = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

double abs_horner(const std::vector<cplx>& c, double r) {
  double s = 0.0;
  for (const auto& ck : c) s = s * r + std::abs(ck);
  return s;
}

points::PointDistribution polynomial_roots(const std::vector<cplx>& c) {
  std::size_t n = c.size() - 1;
  int origin = 0;
  while (n > 0 && c[n] == cplx{0.0, 0.0}) {
    --n;
    ++origin;
  }
  std::vector<cplx> d(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n + 1));
  if (n == 0) return points::PointDistribution::from_points({}, origin);

  // Aberth-Ehrlich simultaneous iteration.
  const double radius = std::pow(std::abs(d.back()) / std::abs(d.front()), 1.0 / static_cast<double>(n));
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n) + 0.4);
  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto h = horner(d, z[k]);
      if (h.p == cplx{0.0, 0.0}) continue;
      const cplx ratio = h.p / h.dp;
      cplx s = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      const cplx w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < 1e-15) break;
  }
  // Newton polish, kept only when the residual improves.
  for (auto& root : z) {
    for (int it = 0; it < 3; ++it) {
      const auto h = horner(d, root);
      if (h.dp == cplx{0.0, 0.0}) break;
      const cplx cand = root - h.p / h.dp;
      if (std::abs(horner(d, cand).p) < std::abs(h.p)) root = cand; else break;
    }
  }
  // Clusters from multiple roots (spread ~ eps^(1/m)) are replaced by their centroid.
  std::vector<bool> used(n, false);
  std::vector<points::PointMass> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (used[k]) continue;
    cplx sum = z[k];
    int m = 1;
    used[k] = true;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (!used[j] && std::abs(z[j] - z[k]) <= 1e-4 * std::max(1.0, std::abs(z[k]))) {
        used[j] = true;
        sum += z[j];
        ++m;
      }
    }
    cplx c0 = sum / static_cast<double>(m);
    // Snap negligible parts so real and imaginary roots stay exact.
    if (std::abs(c0.imag()) <= 1e-14 * std::abs(c0)) c0.imag(0.0);
    if (std::abs(c0.real()) <= 1e-14 * std::abs(c0)) c0.real(0.0);
    out.push_back({c0, m});
  }
  return points::PointDistribution::from_points(out, origin);
}

LogEval eval_polynomial(const Polynomial& p, cplx z) {
  const auto& c = p.coefficients;
  const double n = static_cast<double>(c.size() - 1);
  const double gamma = (2.0 * n + 1.0) * kEps;
  const double az = std::abs(z);
  if (p.roots.multiplicity_at(z) > 0) return zero_eval();
  if (az <= 1.0) {
    const cplx v = horner(c, z).p;
    if (std::abs(v) < 1e-300) return zero_eval();
    return {std::log(v), gamma * abs_horner(c, az) / std::abs(v)};
  }
  // P(z) = z^n Q(1/z) keeps the magnitude in log form for large |z|.
  const cplx w = 1.0 / z;
  cplx q = c.back();
  double qa = std::abs(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    q = q * w + c[k];
    qa = qa * std::abs(w) + std::abs(c[k]);
  }
  if (q == cplx{0.0, 0.0}) return zero_eval();
  return {n * std::log(z) + std::log(q), gamma * qa / std::abs(q)};
}

// --- leaf zero sets ------------------------------------------------------

points::PointDistribution sine_zeros(cplx scale, double radius) {
  const cplx step = kPi / scale;
  const double as = std::abs(step);
  const auto kmax = static_cast<long long>(std::floor(radius / as)) + 1;
  std::vector<points::PointMass> pts;
  for (long long k = -kmax; k <= kmax; ++k) {
    if (k == 0) continue;
    const cplx a = static_cast<double>(k) * step;
    if (std::abs(a) <= radius) pts.push_back({a, 1});
  }
  return points::PointDistribution::from_points(pts, 1);
}

points::PointDistribution rgamma_zeros(cplx shift, double radius) {
  std::vector<points::PointMass> pts;
  int origin = 0;
  const auto kmax = static_cast<long long>(radius + std::abs(shift)) + 1;
  for (long long k = 0; k <= kmax; ++k) {
    const cplx a = -shift - static_cast<double>(k);
    if (std::abs(a) > radius) continue;
    if (a == cplx{0.0, 0.0}) ++origin; else pts.push_back({a, 1});
  }
  return points::PointDistribution::from_points(pts, origin);
}

struct Divisor {
  points::PointDistribution zeros, poles;
};

Divisor cancel(const points::PointDistribution& z, const points::PointDistribution& p) {
  return {points::pole_distribution(p, z), points::pole_distribution(z, p)};
}

Divisor divisor(const FunctionSpec& spec, double radius) {
  return std::visit(
      overloaded{
          [&](const Polynomial& p) { return Divisor{p.roots.restricted(radius), {}}; },
          [&](const ZeroForm& f) { return Divisor{f.zeros.restricted(radius), {}}; },
          [&](const ExpPoly&) { return Divisor{}; },
          [&](const Sine& s) { return Divisor{sine_zeros(s.scale, radius), {}}; },
          [&](const ReciprocalGamma& g) { return Divisor{rgamma_zeros(g.shift, radius), {}}; },
          [&](const MittagLeffler&) -> Divisor {
            fail(ErrorKind::ZerosUnknown, "Mittag-Leffler zeros are not structurally known");
          },
          [&](const CanonicalProduct& c) { return Divisor{c.spec.zeros.restricted(radius), {}}; },
          [&](const Product& p) {
            points::PointDistribution z, q;
            for (const auto& f : p.factors) {
              auto d = divisor(f, radius);
              z = points::merge(z, d.zeros);
              q = points::merge(q, d.poles);
            }
            return cancel(z, q);
          },
          [&](const Quotient& q) {
            auto n = divisor(q.numerator, radius);
            auto d = divisor(q.denominator, radius);
            return cancel(points::merge(n.zeros, d.poles), points::merge(n.poles, d.zeros));
          },
      },
      spec.node().v);
}

// --- evaluation ----------------------------------------------------------

LogEval eval_log(const FunctionSpec& spec, cplx z);

LogEval eval_quotient(const FunctionSpec& whole, const Quotient& q, cplx z) {
  const LogEval n = eval_log(q.numerator, z);
  const LogEval d = eval_log(q.denominator, z);
  const bool dz = d.log.real() == kNegInf;
  const bool nz = n.log.real() == kNegInf;
  if (!dz) {
    if (nz) return zero_eval();
    return {n.log - d.log, n.est_rel_err + d.est_rel_err};
  }
  if (!nz) fail(ErrorKind::PoleHit, "denominator vanishes at the evaluation point");

  // 0/0: decide from the divisor, then take the limit as a circle mean.
  const double az = std::abs(z);
  Divisor div;
  try {
    div = divisor(whole, az + 1.0);
  } catch (const Error& e) {
    fail(ErrorKind::PoleHit, std::string("indeterminate 0/0 and ") + e.what());
  }
  if (div.poles.multiplicity_at(z) > 0) fail(ErrorKind::PoleHit, "pole of the quotient");
  if (div.zeros.multiplicity_at(z) > 0) return zero_eval();

  double nearest = 1.0;
  const auto num_d = divisor(q.numerator, az + 1.0);
  const auto den_d = divisor(q.denominator, az + 1.0);
  for (const auto* dist : {&num_d.zeros, &num_d.poles, &den_d.zeros, &den_d.poles}) {
    for (const auto& e : dist->entries())
      if (e.point != z) nearest = std::min(nearest, std::abs(e.point - z));
    if (dist->origin_multiplicity() > 0 && z != cplx{0.0, 0.0}) nearest = std::min(nearest, az);
  }
  const double eps = std::min(0.25 * nearest, 1e-2 * std::max(1.0, az));
  constexpr int kNodes = 32;
  cplx mean = 0.0;
  double err = 0.0;
  for (int k = 0; k < kNodes; ++k) {
    const cplx zk = z + std::polar(eps, 2.0 * kPi * (k + 0.5) / kNodes);
    const LogEval e = eval_log(whole, zk);
    mean += std::exp(e.log);
    err = std::max(err, e.est_rel_err);
  }
  mean /= static_cast<double>(kNodes);
  if (std::abs(mean) < 1e-300) return zero_eval();
  return {std::log(mean), err + 1e-14};
}

LogEval eval_log(const FunctionSpec& spec, cplx z) {
  LogEval out = std::visit(
      overloaded{
          [&](const Polynomial& p) { return eval_polynomial(p, z); },
          [&](const ZeroForm& f) -> LogEval {
            if (f.zeros.multiplicity_at(z) > 0) return zero_eval();
            cplx s = std::log(f.leading);
            if (f.zeros.origin_multiplicity() > 0)
              s += static_cast<double>(f.zeros.origin_multiplicity()) * std::log(z);
            for (const auto& e : f.zeros.entries())
              s += static_cast<double>(e.multiplicity) * std::log(z - e.point);
            return {s, kEps * (4.0 + static_cast<double>(f.zeros.total_multiplicity()))};
          },
          [&](const ExpPoly& e) -> LogEval {
            const cplx w = horner(e.inner, z).p;
            return {w, kEps * (2.0 * e.inner.size() + 1.0) * abs_horner(e.inner, std::abs(z))};
          },
          [&](const Sine& s) -> LogEval {
            const cplx u = (s.scale / kPi) * z;
            const double k = std::round(u.real());
            if (z == k * (kPi / s.scale)) return zero_eval();
            const cplx l = special::log_sin_pi(u);
            const double mag = std::exp(std::min(0.0, l.real()));
            return {l, kEps * (2.0 + kPi * std::abs(u)) / mag};
          },
          [&](const ReciprocalGamma& g) -> LogEval {
            const cplx w = z + g.shift;
            if (w.imag() == 0.0 && w.real() <= 0.0 && std::floor(w.real()) == w.real())
              return zero_eval();
            const double aw = std::abs(w);
            return {-special::log_gamma(w), kEps * (50.0 + aw * std::log1p(aw))};
          },
          [&](const MittagLeffler& m) -> LogEval {
            const auto s = special::mittag_leffler_series(m.order, m.mu, z);
            if (std::abs(s.value) < 1e-300) return zero_eval();
            return {std::log(s.value), s.est_rel_err};
          },
          [&](const CanonicalProduct& c) -> LogEval {
            const cplx l = products::log_product(c.spec, z);
            if (l.real() == kNegInf) return zero_eval();
            const double n = static_cast<double>(c.spec.zeros.total_multiplicity());
            return {l, kEps * (4.0 + 4.0 * n) + c.spec.tail_bound(z)};
          },
          [&](const Product& p) -> LogEval {
            cplx s = 0.0;
            double err = 0.0;
            for (const auto& f : p.factors) {
              const LogEval e = eval_log(f, z);
              if (e.log.real() == kNegInf) return zero_eval();
              s += e.log;
              err += e.est_rel_err;
            }
            return {s, err};
          },
          [&](const Quotient& q) { return eval_quotient(spec, q, z); },
      },
      spec.node().v);
  if (out.log.real() < kLogZeroThreshold) return zero_eval();
  return out;
}

std::string fmt_c(cplx c) {
  std::ostringstream os;
  os.precision(10);
  if (c.imag() == 0.0) {
    os << c.real();
  } else {
    os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
  }
  return os.str();
}

std::string fmt_list(const std::vector<cplx>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt_c(v[i]);
  return s;
}

bool finite_zero_set(const FunctionSpec& spec) {
  return std::visit(overloaded{
                        [](const Polynomial&) { return true; },
                        [](const ZeroForm&) { return true; },
                        [](const ExpPoly&) { return true; },
                        [](const CanonicalProduct&) { return true; },
                        [](const Product& p) {
                          return std::all_of(p.factors.begin(), p.factors.end(), finite_zero_set);
                        },
                        [](const Quotient& q) {
                          return finite_zero_set(q.numerator) && finite_zero_set(q.denominator);
                        },
                        [](const auto&) { return false; },
                    },
                    spec.node().v);
}

double max_zero_modulus(const FunctionSpec& spec) {
  return std::visit(overloaded{
                        [](const Polynomial& p) { return p.roots.max_modulus(); },
                        [](const ZeroForm& f) { return f.zeros.max_modulus(); },
                        [](const CanonicalProduct& c) { return c.spec.zeros.max_modulus(); },
                        [](const Product& p) {
                          double m = 0.0;
                          for (const auto& f : p.factors) m = std::max(m, max_zero_modulus(f));
                          return m;
                        },
                        [](const Quotient& q) {
                          return std::max(max_zero_modulus(q.numerator), max_zero_modulus(q.denominator));
                        },
                        [](const auto&) { return 0.0; },
                    },
                    spec.node().v);
}

}  // namespace

FunctionSpec FunctionSpec::polynomial(std::vector<cplx> coefficients) {
  auto first = std::find_if(coefficients.begin(), coefficients.end(),
                            [](cplx c) { return c != cplx{0.0, 0.0}; });
  if (first == coefficients.end())
    fail(ErrorKind::InvalidSpec, "the zero polynomial is not a valid function");
  coefficients.erase(coefficients.begin(), first);
  auto roots = polynomial_roots(coefficients);
  return FunctionSpec(std::make_shared<const Node>(Node{Polynomial{std::move(coefficients), std::move(roots)}}));
}

FunctionSpec FunctionSpec::zero_form(cplx leading, points::PointDistribution zeros) {
  if (leading == cplx{0.0, 0.0}) fail(ErrorKind::InvalidSpec, "zero leading coefficient");
  return FunctionSpec(std::make_shared<const Node>(Node{ZeroForm{leading, std::move(zeros)}}));
}

FunctionSpec FunctionSpec::exp_poly(std::vector<cplx> inner) {
  if (inner.empty()) inner.push_back(0.0);
  return FunctionSpec(std::make_shared<const Node>(Node{ExpPoly{std::move(inner)}}));
}

FunctionSpec FunctionSpec::sine(cplx scale) {
  if (scale == cplx{0.0, 0.0}) fail(ErrorKind::InvalidSpec, "sine scale must be nonzero");
  return FunctionSpec(std::make_shared<const Node>(Node{Sine{scale}}));
}

FunctionSpec FunctionSpec::reciprocal_gamma(cplx shift) {
  return FunctionSpec(std::make_shared<const Node>(Node{ReciprocalGamma{shift}}));
}

FunctionSpec FunctionSpec::mittag_leffler(double order, double mu) {
  if (!(order > 0)) fail(ErrorKind::InvalidSpec, "Mittag-Leffler order must be positive");
  if (!std::isfinite(mu)) fail(ErrorKind::InvalidSpec, "non-finite Mittag-Leffler parameter");
  return FunctionSpec(std::make_shared<const Node>(Node{MittagLeffler{order, mu}}));
}

FunctionSpec FunctionSpec::canonical_product(products::CanonicalProductSpec spec) {
  products::validate(spec);
  return FunctionSpec(std::make_shared<const Node>(Node{CanonicalProduct{std::move(spec)}}));
}

FunctionSpec FunctionSpec::product(std::vector<FunctionSpec> factors) {
  if (factors.empty()) return constant(1.0);
  return FunctionSpec(std::make_shared<const Node>(Node{Product{std::move(factors)}}));
}

FunctionSpec FunctionSpec::quotient(FunctionSpec numerator, FunctionSpec denominator) {
  return FunctionSpec(
      std::make_shared<const Node>(Node{Quotient{std::move(numerator), std::move(denominator)}}));
}

bool FunctionSpec::is_entire() const {
  const auto* q = std::get_if<Quotient>(&node().v);
  if (q == nullptr) {
    if (const auto* p = std::get_if<Product>(&node().v))
      return std::all_of(p->factors.begin(), p->factors.end(),
                         [](const FunctionSpec& f) { return f.is_entire(); });
    return true;
  }
  if (!finite_zero_set(q->denominator) || !q->denominator.has_structural_zeros()) return false;
  if (!q->numerator.has_structural_zeros()) {
    // Unknown numerator zeros: entire only if the denominator never vanishes.
    return divisor(q->denominator, max_zero_modulus(q->denominator)).zeros.empty();
  }
  return known_poles(*this, max_zero_modulus(q->denominator)).empty();
}

bool FunctionSpec::positive_coefficients() const {
  auto nonneg_real = [](cplx c) { return c.imag() == 0.0 && c.real() >= 0.0; };
  return std::visit(
      overloaded{
          [&](const Polynomial& p) {
            return std::all_of(p.coefficients.begin(), p.coefficients.end(), nonneg_real);
          },
          [&](const ZeroForm& f) {
            if (!(f.leading.imag() == 0.0 && f.leading.real() > 0.0)) return false;
            return std::all_of(f.zeros.entries().begin(), f.zeros.entries().end(),
                               [](const points::PointMass& e) {
                                 return e.point.imag() == 0.0 && e.point.real() < 0.0;
                               });
          },
          [&](const ExpPoly& e) { return std::all_of(e.inner.begin(), e.inner.end(), nonneg_real); },
          [&](const Sine&) { return false; },
          [&](const ReciprocalGamma&) { return false; },
          [&](const MittagLeffler& m) { return m.mu > 0.0; },
          [&](const CanonicalProduct& c) {
            if (c.spec.genus != 0) return false;
            return std::all_of(c.spec.zeros.entries().begin(), c.spec.zeros.entries().end(),
                               [](const points::PointMass& e) {
                                 return e.point.imag() == 0.0 && e.point.real() < 0.0;
                               });
          },
          [&](const Product& p) {
            return std::all_of(p.factors.begin(), p.factors.end(),
                               [](const FunctionSpec& f) { return f.positive_coefficients(); });
          },
          [&](const Quotient&) { return false; },
      },
      node().v);
}

bool FunctionSpec::has_structural_zeros() const {
  return std::visit(overloaded{
                        [](const MittagLeffler&) { return false; },
                        [](const Product& p) {
                          return std::all_of(p.factors.begin(), p.factors.end(),
                                             [](const FunctionSpec& f) { return f.has_structural_zeros(); });
                        },
                        [](const Quotient& q) {
                          return q.numerator.has_structural_zeros() && q.denominator.has_structural_zeros();
                        },
                        [](const auto&) { return true; },
                    },
                    node().v);
}

std::string FunctionSpec::describe() const {
  return std::visit(
      overloaded{
          [](const Polynomial& p) { return "poly[" + fmt_list(p.coefficients) + "]"; },
          [](const ZeroForm& f) {
            return "zeroform[" + fmt_c(f.leading) + ";" + std::to_string(f.zeros.total_multiplicity()) +
                   " zeros]";
          },
          [](const ExpPoly& e) { return "exp(poly[" + fmt_list(e.inner) + "])"; },
          [](const Sine& s) { return "sin(" + fmt_c(s.scale) + "z)"; },
          [](const ReciprocalGamma& g) { return "1/Gamma(z+" + fmt_c(g.shift) + ")"; },
          [](const MittagLeffler& m) {
            std::ostringstream os;
            os.precision(10);
            os << "E_" << m.order << "(z;" << m.mu << ")";
            return os.str();
          },
          [](const CanonicalProduct& c) {
            return "canonical[q=" + std::to_string(c.spec.genus) + ";" +
                   std::to_string(c.spec.zeros.total_multiplicity()) + " zeros]";
          },
          [](const Product& p) {
            std::string s = "prod(";
            for (std::size_t i = 0; i < p.factors.size(); ++i)
              s += (i ? "*" : "") + p.factors[i].describe();
            return s + ")";
          },
          [](const Quotient& q) {
            return "quot(" + q.numerator.describe() + "|" + q.denominator.describe() + ")";
          },
      },
      node().v);
}

EvalResult evaluate(const FunctionSpec& spec, cplx z) {
  const LogEval e = eval_log(spec, z);
  EvalResult out;
  out.est_rel_err = e.est_rel_err;
  out.accuracy_warning = e.est_rel_err > kTargetRelTol;
  if (e.log.real() == kNegInf) {
    out.value = 0.0;
    out.log_abs = kNegInf;
    return out;
  }
  out.log_abs = e.log.real();
  out.value = std::exp(e.log);
  return out;
}

double log_abs(const FunctionSpec& spec, cplx z) { return eval_log(spec, z).log.real(); }

points::PointDistribution known_zeros(const FunctionSpec& spec, double radius) {
  return divisor(spec, radius).zeros;
}

points::PointDistribution known_poles(const FunctionSpec& spec, double radius) {
  if (!contains_quotient(spec)) return {};
  return divisor(spec, radius).poles;
}

bool contains_quotient(const FunctionSpec& spec) {
  if (std::holds_alternative<Quotient>(spec.node().v)) return true;
  if (const auto* p = std::get_if<Product>(&spec.node().v))
    return std::any_of(p->factors.begin(), p->factors.end(), contains_quotient);
  return false;
}

FunctionSpec reciprocal(const FunctionSpec& spec) {
  if (const auto* q = std::get_if<Quotient>(&spec.node().v))
    return FunctionSpec::quotient(q->denominator, q->numerator);
  return FunctionSpec::quotient(FunctionSpec::constant(1.0), spec);
}

FunctionSpec sinc_pi() {
  return FunctionSpec::quotient(FunctionSpec::sine(kPi),
                                FunctionSpec::zero_form(kPi, points::PointDistribution::from_points({}, 1)));
}

std::vector<NamedSpec> reference_catalog() {
  using points::PointDistribution;
  std::vector<points::PointMass> squares;
  for (int k = 1; k <= 200; ++k) squares.push_back({static_cast<double>(k) * k, 1});
  auto squares_product = products::build_f_Z(PointDistribution::from_points(squares), 1.0);

  return {
      {"exp", FunctionSpec::exp_poly({1.0, 0.0})},
      {"z^2-1", FunctionSpec::polynomial({1.0, 0.0, -1.0})},
      {"(z-1)(z-2i)", FunctionSpec::zero_form(1.0, PointDistribution::from_points({{{1.0, 0.0}, 1}, {{0.0, 2.0}, 1}}))},
      {"sin(pi z)/(pi z)", sinc_pi()},
      {"1/Gamma(z+1)", FunctionSpec::reciprocal_gamma(1.0)},
      {"E_0.75", FunctionSpec::mittag_leffler(0.75)},
      {"E_0.5", FunctionSpec::mittag_leffler(0.5)},
      {"canonical k^2", FunctionSpec::canonical_product(squares_product)},
      {"exp(z)(z+3)", FunctionSpec::product({FunctionSpec::exp_poly({1.0, 0.0}),
                                             FunctionSpec::polynomial({1.0, 3.0})})},
      {"const 2", FunctionSpec::constant(2.0)},
  };
}

}  // namespace growthlab::funcat
