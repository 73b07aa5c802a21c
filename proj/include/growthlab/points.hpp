#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace growthlab::points {

using cplx = std::complex<double>;

/// Points closer to the origin than this are folded into the origin multiplicity.
inline constexpr double kOriginFoldRadius = 1e-12;

struct PointMass {
  cplx point;
  int multiplicity = 1;

  friend bool operator==(const PointMass&, const PointMass&) = default;
};

/// A multiset of complex points: the nonzero points sorted by modulus
/// (ties broken by argument, then by real/imaginary part) with merged
/// multiplicities, plus a separately stored multiplicity at the origin.
///
/// Prefix sums over the sorted moduli make radial_count and integral_count
/// logarithmic in the number of points.
class PointDistribution {
 public:
  PointDistribution() = default;

  /// Normalizes the input: folds near-origin points into the origin count,
  /// merges points at distance <= merge_radius (exact equality for 0) by
  /// summing multiplicities, and sorts. Multiplicities must be >= 1.
  static PointDistribution from_points(std::span<const PointMass> input,
                                       int origin_multiplicity = 0,
                                       double merge_radius = 0.0);
  static PointDistribution from_points(std::initializer_list<PointMass> input,
                                       int origin_multiplicity = 0) {
    return from_points(std::span<const PointMass>(input.begin(), input.size()), origin_multiplicity);
  }

  std::span<const PointMass> entries() const noexcept { return entries_; }
  int origin_multiplicity() const noexcept { return origin_; }
  /// Number of input points folded into the origin during normalization.
  int folded_origin_points() const noexcept { return folded_; }

  bool empty() const noexcept { return entries_.empty() && origin_ == 0; }
  long long total_multiplicity() const noexcept;
  /// Largest modulus among the nonzero points (0 when there are none).
  double max_modulus() const noexcept;
  /// Sorted moduli of the nonzero points, one per entry.
  std::span<const double> moduli() const noexcept { return moduli_; }

  /// Multiplicity at an exact point (0 when absent).
  int multiplicity_at(cplx z) const;

  /// Sub-distribution of points with |a| <= radius (origin included).
  PointDistribution restricted(double radius) const;

  friend bool operator==(const PointDistribution& a, const PointDistribution& b) {
    return a.origin_ == b.origin_ && a.entries_ == b.entries_;
  }

  // Prefix data used by the counting functions.
  long long count_within(double r) const;
  double log_sum_within(double r) const;

 private:
  void rebuild_prefix();

  std::vector<PointMass> entries_;
  std::vector<double> moduli_;
  std::vector<long long> cum_mult_;
  std::vector<double> cum_log_;  // sum of m*ln|a|
  int origin_ = 0;
  int folded_ = 0;
};

/// Z^rad(r): points in the closed disk of radius r, with multiplicity,
/// origin included. Right-continuous in r.
double radial_count(const PointDistribution& z, double r);

/// N_Z(r) = sum_{0<|a|<=r} m ln(r/|a|) + m0 ln r, computed in closed form.
/// The value is signed: with m0 > 0 it is negative for r < 1. Pass
/// require_nonnegative to get ErrorKind::NegativeCount instead.
double integral_count(const PointDistribution& z, double r, bool require_nonnegative = false);

/// (zeros_g - zeros_f)^+ pointwise: the poles of f/g.
PointDistribution pole_distribution(const PointDistribution& zeros_f,
                                    const PointDistribution& zeros_g);

/// Each point a -> c*a, multiplicities preserved.
PointDistribution scale(const PointDistribution& z, cplx c);

/// Sum of two distributions (multiplicities add).
PointDistribution merge(const PointDistribution& a, const PointDistribution& b);

}  // namespace growthlab::points
