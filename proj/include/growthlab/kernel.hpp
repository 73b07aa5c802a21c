#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "growthlab/funcat.hpp"
#include "growthlab/points.hpp"
#include "growthlab/profile.hpp"

namespace growthlab::kernel {

using radial::RadialProfile;
using radial::Tail;

struct KernelParams {
  double p = 1.0;
  double quad_rel_tol = 1e-10;
  std::size_t max_panels = 20000;

  void validate() const;
};

/// sigma r^rho + c style budget: sup_r (C(r) - sigma r^rho) <= c.
struct PowerBudget {
  double sigma = 1.0;
  double rho = 1.0;
  double c = 0.0;
};

/// P(rho): pi rho for rho >= 1/2, pi rho / sin(pi rho) below.
double paley_constant(double rho);

/// max(1, 2 rho).
double optimal_p(double rho);

/// Whether int_1^inf phi(t) t^{-p-1} dt converges, decided from the
/// declared tail. Throws ErrorKind::TailUndeclared for a forbidden tail.
bool convergence_check(const RadialProfile& phi, double p);

/// int_0^inf phi(r t) p^2 t^{p-1} / (1 + t^p)^2 dt.
///
/// Computed as p int_0^1 phi(r (s/(1-s))^{1/p}) ds with the grid points as
/// breakpoints; the upper half runs in w = 1 - s so t stays accurate as
/// s -> 1, and the part beyond the last grid point is integrated in closed
/// form from the tail. r = 0 gives p * left_value.
///
/// Throws ErrorKind::Divergent when convergence_check fails.
double kernel_transform(const RadialProfile& phi, const KernelParams& params, double r);

/// Same transform for a callable phi growing at most like x^tail_exponent.
/// `kinks` lists arguments x where phi is not smooth.
double kernel_transform(const std::function<double(double)>& phi, const KernelParams& params, double r,
                        double tail_exponent = 0.0, std::span<const double> kinks = {});

/// sigma r^rho rho pi / sin(rho pi / p) + c p, the transform of the budget.
/// Throws ErrorKind::Divergent when p <= rho.
double power_bound(const PowerBudget& budget, double p, double r);

/// Tail chosen from the top decade of the profile: constant when flat,
/// log-linear for order below 0.15, otherwise a fitted power tail.
Tail fit_tail(const RadialProfile& phi);

/// N_Z(t) as an exact profile (grid at the moduli, log-linear tail).
/// Throws ErrorKind::OriginPoint when Z(0) != 0.
RadialProfile counting_profile(const points::PointDistribution& z);

/// ln of the bound r -> kernel_transform(C, p, r) on the radii. Profiles
/// with a forbidden tail get fit_tail() unless `tail` overrides it.
RadialProfile theorem1_bound(const RadialProfile& c_profile, const KernelParams& params,
                             std::span<const double> radii, std::optional<Tail> tail = {});
/// Same with the exact N_Z profile.
RadialProfile theorem2_bound(const points::PointDistribution& z, const KernelParams& params,
                             std::span<const double> radii);
/// Same with a T(r; F) profile.
RadialProfile theorem3_bound(const RadialProfile& t_profile, const KernelParams& params,
                             std::span<const double> radii, std::optional<Tail> tail = {});

/// For zero-free F = exp(P): G = |F(0)|^p / F as exp(p Re P(0) - P).
/// Throws InvalidArgument for any other variant.
funcat::FunctionSpec zero_free_multiplier(const funcat::FunctionSpec& f, double p);

}  // namespace growthlab::kernel
