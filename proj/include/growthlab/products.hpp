#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "growthlab/points.hpp"

namespace growthlab::products {

using cplx = std::complex<double>;

/// Weierstrass primary factor E_q(w) = (1 - w) exp(sum_{j=1..q} w^j / j).
cplx primary_factor(int q, cplx w);

/// A branch of log E_q(w). For small |w| it is summed as -sum_{j>q} w^j/j,
/// which avoids the cancellation between log(1 - w) and the correction terms.
cplx log_primary_factor(int q, cplx w);

/// ceil(p) - 1, with ceil(p) = p for integer p.
int genus_for_order(double p);

/// Truncation record for products built from an infinite generating rule.
struct Truncation {
  double cutoff_radius = 0.0;
  /// Upper bound for sum over omitted zeros of m / |a|^(q+1).
  double tail_sum = 0.0;
};

/// Canonical product log_leading + sum_k m_k ln E_q(z / a_k) over a
/// distribution without a point at the origin.
struct CanonicalProductSpec {
  points::PointDistribution zeros;
  int genus = 0;
  double log_leading = 0.0;
  std::optional<Truncation> truncation;

  /// Bound on |ln f(z) - ln f_truncated(z)| contributed by omitted zeros;
  /// 0 without truncation, +inf for |z| >= cutoff radius.
  double tail_bound(cplx z) const;
};

/// Checks the spec invariants (no origin point, genus >= 0).
void validate(const CanonicalProductSpec& spec);

/// ln|f(z)|; -inf exactly at stored zeros; equals log_leading at z = 0.
double log_abs_product(const CanonicalProductSpec& spec, cplx z);

/// Branch of log f(z) (imaginary part modulo 2 pi); real part is log_abs_product.
cplx log_product(const CanonicalProductSpec& spec, cplx z);

/// The product vanishing exactly on Z with genus ceil(p) - 1.
/// Throws ErrorKind::OriginPoint when Z(0) != 0.
CanonicalProductSpec build_f_Z(const points::PointDistribution& z, double p);

/// Infinite zero family given as shells k = 1, 2, ... of nondecreasing
/// modulus. `exponent` declares the counting growth Z^rad(t) = O(t^exponent)
/// used for the analytic tail bound.
struct ZeroGenerator {
  std::function<std::vector<cplx>(std::size_t k)> shell;
  double exponent = 1.0;
};

/// Materializes every shell with modulus <= cutoff_radius and records the
/// tail bound A*lambda*R^(lambda-q-1)/(q+1-lambda) with A = Z^rad(R)/R^lambda.
/// Throws ErrorKind::GenusTooSmall when lambda >= q + 1.
CanonicalProductSpec build_f_Z(const ZeroGenerator& gen, double p, double cutoff_radius);

}  // namespace growthlab::products
