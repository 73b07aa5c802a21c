#pragma once

#include <complex>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "growthlab/points.hpp"
#include "growthlab/products.hpp"

namespace growthlab::funcat {

using cplx = std::complex<double>;

/// Relative accuracy evaluate() aims for; results above it carry accuracy_warning.
inline constexpr double kTargetRelTol = 1e-10;

struct Node;

/// Immutable handle to a symbolic entire or meromorphic function. Copies
/// share the underlying tree.
class FunctionSpec {
 public:
  /// Coefficients in descending powers: {1, 0, -1} is z^2 - 1. Roots are
  /// computed once (Aberth iteration) and kept as the structural zero set.
  static FunctionSpec polynomial(std::vector<cplx> coefficients);
  static FunctionSpec constant(cplx c) { return polynomial({c}); }
  /// leading * prod (z - a)^m over the distribution (origin included).
  static FunctionSpec zero_form(cplx leading, points::PointDistribution zeros);
  /// exp(P(z)) with P in descending powers; {1, 0} is exp(z).
  static FunctionSpec exp_poly(std::vector<cplx> inner);
  /// sin(scale * z).
  static FunctionSpec sine(cplx scale);
  /// 1 / Gamma(z + shift).
  static FunctionSpec reciprocal_gamma(cplx shift = 0.0);
  static FunctionSpec mittag_leffler(double order, double mu = 1.0);
  static FunctionSpec canonical_product(products::CanonicalProductSpec spec);
  static FunctionSpec product(std::vector<FunctionSpec> factors);
  static FunctionSpec quotient(FunctionSpec numerator, FunctionSpec denominator);

  const Node& node() const { return *node_; }

  /// True for every variant except Quotient, and for quotients whose
  /// denominator zeros are finitely many and all cancelled by the numerator.
  bool is_entire() const;
  /// Taylor coefficients at 0 are real and nonnegative.
  bool positive_coefficients() const;
  /// Zeros (and poles) can be listed through known_zeros/known_poles.
  bool has_structural_zeros() const;
  std::string describe() const;

 private:
  explicit FunctionSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Polynomial {
  std::vector<cplx> coefficients;  // descending powers, leading coefficient nonzero
  points::PointDistribution roots;
};
struct ZeroForm {
  cplx leading;
  points::PointDistribution zeros;
};
struct ExpPoly {
  std::vector<cplx> inner;
};
struct Sine {
  cplx scale;
};
struct ReciprocalGamma {
  cplx shift;
};
struct MittagLeffler {
  double order;
  double mu;
};
struct CanonicalProduct {
  products::CanonicalProductSpec spec;
};
struct Product {
  std::vector<FunctionSpec> factors;
};
struct Quotient {
  FunctionSpec numerator;
  FunctionSpec denominator;
};

struct Node {
  std::variant<Polynomial, ZeroForm, ExpPoly, Sine, ReciprocalGamma, MittagLeffler,
               CanonicalProduct, Product, Quotient>
      v;
};

struct EvalResult {
  cplx value;        // may overflow to inf while log_abs stays finite
  double log_abs;    // -inf exactly at zeros
  double est_rel_err;
  bool accuracy_warning = false;
};

/// Evaluates f(z). Quotients with a removable singularity at z are
/// evaluated as the limit (mean over a small circle around z).
///
/// Throws ErrorKind::PoleHit at poles and ErrorKind::NonConvergentSeries
/// from the Mittag-Leffler series.
EvalResult evaluate(const FunctionSpec& spec, cplx z);

/// ln|f(z)| only; skips phase bookkeeping.
double log_abs(const FunctionSpec& spec, cplx z);

/// Zeros with |a| <= radius, with multiplicity. Throws ErrorKind::ZerosUnknown
/// for Mittag-Leffler components.
points::PointDistribution known_zeros(const FunctionSpec& spec, double radius);
/// Poles with |a| <= radius (empty for entire variants).
points::PointDistribution known_poles(const FunctionSpec& spec, double radius);

/// True when a Quotient appears anywhere in the tree.
bool contains_quotient(const FunctionSpec& spec);

/// 1/F as a spec: swaps a quotient, wraps anything else as 1/F.
FunctionSpec reciprocal(const FunctionSpec& spec);

struct NamedSpec {
  std::string name;
  FunctionSpec spec;
};

/// The reference functions used by the verification suites; all have f(0) != 0.
std::vector<NamedSpec> reference_catalog();

/// sin(pi z)/(pi z) expressed as a quotient with a removable singularity at 0.
FunctionSpec sinc_pi();

}  // namespace growthlab::funcat
