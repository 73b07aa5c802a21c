#include "growthlab/products.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "growthlab/error.hpp"

namespace growthlab::products {

namespace {

constexpr double kTinyArgument = 1e-8;
constexpr double kSeriesRadius = 0.5;

}  // namespace

cplx log_primary_factor(int q, cplx w) {
  if (q < 0) fail(ErrorKind::InvalidArgument, "genus must be >= 0");
  const double aw = std::abs(w);
  if (aw == 0.0) return {0.0, 0.0};
  if (aw <= kTinyArgument) {
    // ln E_q(w) = -w^{q+1}/(q+1) - w^{q+2}/(q+2) + O(w^{q+3})
    const cplx wq1 = std::pow(w, q + 1);
    return -wq1 / static_cast<double>(q + 1) - wq1 * w / static_cast<double>(q + 2);
  }
  if (aw < kSeriesRadius) {
    cplx power = std::pow(w, q + 1);
    cplx sum{0.0, 0.0};
    for (int j = q + 1; j < q + 200; ++j) {
      const cplx term = power / static_cast<double>(j);
      sum -= term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
      power *= w;
    }
    return sum;
  }
  if (w == cplx{1.0, 0.0}) return {-std::numeric_limits<double>::infinity(), 0.0};
  cplx out = std::log(1.0 - w);
  cplx power = w;
  for (int j = 1; j <= q; ++j) {
    out += power / static_cast<double>(j);
    power *= w;
  }
  return out;
}

cplx primary_factor(int q, cplx w) {
  if (q < 0) fail(ErrorKind::InvalidArgument, "genus must be >= 0");
  cplx s{0.0, 0.0};
  cplx power = w;
  for (int j = 1; j <= q; ++j) {
    s += power / static_cast<double>(j);
    power *= w;
  }
  return (1.0 - w) * std::exp(s);
}

int genus_for_order(double p) {
  if (!(p > 0)) fail(ErrorKind::InvalidArgument, "genus_for_order needs p > 0");
  return static_cast<int>(std::ceil(p)) - 1;
}

double CanonicalProductSpec::tail_bound(cplx z) const {
  if (!truncation) return 0.0;
  const double ratio = std::abs(z) / truncation->cutoff_radius;
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  const int s = genus + 1;
  return std::pow(std::abs(z), s) / s * truncation->tail_sum / (1.0 - ratio);
}

void validate(const CanonicalProductSpec& spec) {
  if (spec.zeros.origin_multiplicity() != 0)
    fail(ErrorKind::OriginPoint, "canonical product zeros must exclude the origin");
  if (spec.genus < 0) fail(ErrorKind::InvalidSpec, "negative genus");
  if (!std::isfinite(spec.log_leading)) fail(ErrorKind::InvalidSpec, "non-finite log_leading");
}

double log_abs_product(const CanonicalProductSpec& spec, cplx z) {
  double sum = spec.log_leading;
  for (const auto& e : spec.zeros.entries()) {
    if (z == e.point) return -std::numeric_limits<double>::infinity();
    sum += e.multiplicity * log_primary_factor(spec.genus, z / e.point).real();
  }
  return sum;
}

cplx log_product(const CanonicalProductSpec& spec, cplx z) {
  cplx sum{spec.log_leading, 0.0};
  for (const auto& e : spec.zeros.entries()) {
    if (z == e.point) return {-std::numeric_limits<double>::infinity(), 0.0};
    sum += static_cast<double>(e.multiplicity) * log_primary_factor(spec.genus, z / e.point);
  }
  return {sum.real(), std::remainder(sum.imag(), 2.0 * std::numbers::pi)};
}

CanonicalProductSpec build_f_Z(const points::PointDistribution& z, double p) {
  if (z.origin_multiplicity() != 0)
    fail(ErrorKind::OriginPoint, "Z(0) = " + std::to_string(z.origin_multiplicity()) + " != 0");
  CanonicalProductSpec out{z, genus_for_order(p), 0.0, std::nullopt};
  validate(out);
  if (!(out.zeros == z)) fail(ErrorKind::InvalidSpec, "zero set changed during construction");
  return out;
}

CanonicalProductSpec build_f_Z(const ZeroGenerator& gen, double p, double cutoff_radius) {
  if (!(cutoff_radius > 0)) fail(ErrorKind::InvalidArgument, "cutoff radius must be positive");
  const int q = genus_for_order(p);
  const double lambda = gen.exponent;
  if (!(lambda < q + 1))
    fail(ErrorKind::GenusTooSmall, "counting exponent " + std::to_string(lambda) +
                                       " >= genus + 1 = " + std::to_string(q + 1));
  std::vector<points::PointMass> pts;
  double last_modulus = 0.0;
  for (std::size_t k = 1;; ++k) {
    const auto shell = gen.shell(k);
    double shell_max = 0.0;
    for (const auto& a : shell) shell_max = std::max(shell_max, std::abs(a));
    if (shell_max < last_modulus)
      fail(ErrorKind::InvalidArgument, "generator shells must have nondecreasing modulus");
    if (shell_max > cutoff_radius) break;
    last_modulus = shell_max;
    for (const auto& a : shell) pts.push_back({a, 1});
  }
  auto zeros = points::PointDistribution::from_points(pts);
  if (zeros.origin_multiplicity() != 0) fail(ErrorKind::OriginPoint, "generator produced the origin");
  const double n_r = static_cast<double>(zeros.total_multiplicity());
  const int s = q + 1;
  const double tail = n_r * std::pow(cutoff_radius, -s) * lambda / (s - lambda);
  return CanonicalProductSpec{std::move(zeros), q, 0.0, Truncation{cutoff_radius, tail}};
}

}  // namespace growthlab::products
