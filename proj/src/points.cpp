#include "growthlab/points.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "growthlab/error.hpp"

namespace growthlab::points {

namespace {

bool modulus_order(const PointMass& a, const PointMass& b) {
  const double ma = std::abs(a.point), mb = std::abs(b.point);
  if (ma != mb) return ma < mb;
  const double aa = std::arg(a.point), ab = std::arg(b.point);
  if (aa != ab) return aa < ab;
  if (a.point.real() != b.point.real()) return a.point.real() < b.point.real();
  return a.point.imag() < b.point.imag();
}

// Key for exact-equality merging.
struct ExactKey {
  double re, im;
  bool operator<(const ExactKey& o) const { return re != o.re ? re < o.re : im < o.im; }
};

}  // namespace

PointDistribution PointDistribution::from_points(std::span<const PointMass> input,
                                                 int origin_multiplicity, double merge_radius) {
  if (origin_multiplicity < 0) fail(ErrorKind::InvalidArgument, "negative origin multiplicity");
  if (merge_radius < 0) fail(ErrorKind::InvalidArgument, "negative merge radius");
  PointDistribution out;
  out.origin_ = origin_multiplicity;

  std::vector<PointMass> kept;
  kept.reserve(input.size());
  for (const auto& pm : input) {
    if (pm.multiplicity < 1)
      fail(ErrorKind::InvalidArgument, "multiplicity must be >= 1");
    if (!std::isfinite(pm.point.real()) || !std::isfinite(pm.point.imag()))
      fail(ErrorKind::InvalidArgument, "non-finite point");
    if (std::abs(pm.point) < kOriginFoldRadius) {
      out.origin_ += pm.multiplicity;
      ++out.folded_;
      continue;
    }
    kept.push_back(pm);
  }

  if (merge_radius == 0.0) {
    std::map<ExactKey, int> merged;
    for (const auto& pm : kept) merged[{pm.point.real(), pm.point.imag()}] += pm.multiplicity;
    for (const auto& [key, m] : merged) out.entries_.push_back({{key.re, key.im}, m});
  } else {
    // Greedy clustering in modulus order; a cluster keeps its first point.
    std::sort(kept.begin(), kept.end(), modulus_order);
    for (const auto& pm : kept) {
      bool absorbed = false;
      for (auto it = out.entries_.rbegin(); it != out.entries_.rend(); ++it) {
        if (std::abs(it->point) < std::abs(pm.point) - merge_radius) break;
        if (std::abs(it->point - pm.point) <= merge_radius) {
          it->multiplicity += pm.multiplicity;
          absorbed = true;
          break;
        }
      }
      if (!absorbed) out.entries_.push_back(pm);
    }
  }
  std::sort(out.entries_.begin(), out.entries_.end(), modulus_order);
  out.rebuild_prefix();
  return out;
}

void PointDistribution::rebuild_prefix() {
  moduli_.resize(entries_.size());
  cum_mult_.resize(entries_.size());
  cum_log_.resize(entries_.size());
  long long m = 0;
  double l = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    moduli_[k] = std::abs(entries_[k].point);
    m += entries_[k].multiplicity;
    l += entries_[k].multiplicity * std::log(moduli_[k]);
    cum_mult_[k] = m;
    cum_log_[k] = l;
  }
}

long long PointDistribution::total_multiplicity() const noexcept {
  return origin_ + (cum_mult_.empty() ? 0 : cum_mult_.back());
}

double PointDistribution::max_modulus() const noexcept {
  return moduli_.empty() ? 0.0 : moduli_.back();
}

int PointDistribution::multiplicity_at(cplx z) const {
  if (z == cplx{0.0, 0.0}) return origin_;
  const double r = std::abs(z);
  auto lo = std::lower_bound(moduli_.begin(), moduli_.end(), r);
  for (auto it = lo; it != moduli_.end() && *it == r; ++it) {
    const auto& e = entries_[static_cast<std::size_t>(it - moduli_.begin())];
    if (e.point == z) return e.multiplicity;
  }
  return 0;
}

PointDistribution PointDistribution::restricted(double radius) const {
  PointDistribution out;
  out.origin_ = radius >= 0 ? origin_ : 0;
  const auto n = static_cast<std::size_t>(
      std::upper_bound(moduli_.begin(), moduli_.end(), radius) - moduli_.begin());
  out.entries_.assign(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(n));
  out.rebuild_prefix();
  return out;
}

long long PointDistribution::count_within(double r) const {
  const auto n = std::upper_bound(moduli_.begin(), moduli_.end(), r) - moduli_.begin();
  return n == 0 ? 0 : cum_mult_[static_cast<std::size_t>(n - 1)];
}

double PointDistribution::log_sum_within(double r) const {
  const auto n = std::upper_bound(moduli_.begin(), moduli_.end(), r) - moduli_.begin();
  return n == 0 ? 0.0 : cum_log_[static_cast<std::size_t>(n - 1)];
}

double radial_count(const PointDistribution& z, double r) {
  if (!(r >= 0)) fail(ErrorKind::InvalidArgument, "radial_count needs r >= 0");
  return static_cast<double>(z.origin_multiplicity() + z.count_within(r));
}

double integral_count(const PointDistribution& z, double r, bool require_nonnegative) {
  if (!(r > 0)) fail(ErrorKind::InvalidArgument, "integral_count needs r > 0");
  if (require_nonnegative && z.origin_multiplicity() > 0 && r < 1)
    fail(ErrorKind::NegativeCount,
         "N_Z(r) < 0 for r < 1 with origin multiplicity " + std::to_string(z.origin_multiplicity()));
  const double lr = std::log(r);
  const auto n = static_cast<double>(z.count_within(r));
  return n * lr - z.log_sum_within(r) + z.origin_multiplicity() * lr;
}

PointDistribution pole_distribution(const PointDistribution& zeros_f,
                                    const PointDistribution& zeros_g) {
  std::vector<PointMass> out;
  for (const auto& e : zeros_g.entries()) {
    const int d = e.multiplicity - zeros_f.multiplicity_at(e.point);
    if (d > 0) out.push_back({e.point, d});
  }
  const int o = std::max(0, zeros_g.origin_multiplicity() - zeros_f.origin_multiplicity());
  return PointDistribution::from_points(out, o);
}

PointDistribution scale(const PointDistribution& z, cplx c) {
  if (c == cplx{0.0, 0.0}) fail(ErrorKind::InvalidArgument, "scale factor must be nonzero");
  std::vector<PointMass> out;
  out.reserve(z.entries().size());
  for (const auto& e : z.entries()) out.push_back({c * e.point, e.multiplicity});
  return PointDistribution::from_points(out, z.origin_multiplicity());
}

PointDistribution merge(const PointDistribution& a, const PointDistribution& b) {
  std::vector<PointMass> all(a.entries().begin(), a.entries().end());
  all.insert(all.end(), b.entries().begin(), b.entries().end());
  return PointDistribution::from_points(all, a.origin_multiplicity() + b.origin_multiplicity());
}

}  // namespace growthlab::points
