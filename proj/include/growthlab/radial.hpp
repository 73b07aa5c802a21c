#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "growthlab/funcat.hpp"
#include "growthlab/profile.hpp"

namespace growthlab::radial {

using funcat::FunctionSpec;

struct CircleQuadratureSettings {
  int initial_nodes = 64;
  std::size_t max_nodes = std::size_t{1} << 20;
  double rel_tol = 1e-9;
  /// Zeros closer than this (relative to r) to the circle count as lying on it.
  double singularity_margin = 1e-8;
  /// Structural zeros with ||a| - r| <= extraction_band * r are integrated
  /// analytically instead of by the trapezoid rule.
  double extraction_band = 0.1;
  /// Tolerance for the kinked ln+ integrals.
  double proximity_rel_tol = 1e-10;

  void validate() const;
};

/// ln M(r; f). r = 0 gives ln|f(0)|.
double max_modulus(const FunctionSpec& spec, double r);

/// C(r; f), the mean of ln|f| over |z| = r. r = 0 gives ln|f(0)|.
///
/// Throws ErrorKind::SingularityUnresolved when a zero lies on the circle
/// (a structural zero inside the singularity margin, or an unknown one
/// detected through non-convergence).
double circle_mean_log(const FunctionSpec& spec, double r, const CircleQuadratureSettings& s = {});

/// B(r) = (2/r^2) int_0^r C(t) t dt, exact for the profile interpolant.
double disk_mean(const RadialProfile& c_profile, double r);

/// Mean of max(g(theta), 0) over [0, 2 pi). The sign changes of g are
/// located first (sampling plus bisection) and the smooth arcs between
/// them integrated adaptively.
double mean_positive_part(const std::function<double(double)>& g, const CircleQuadratureSettings& s = {});

/// m(r; F) = mean of ln+|F| over |z| = r.
double proximity(const FunctionSpec& spec, double r, const CircleQuadratureSettings& s = {});

/// T(r; F) = proximity + N of the poles of F inside the closed disk.
double nevanlinna_T(const FunctionSpec& spec, double r, const CircleQuadratureSettings& s = {});

/// C(r; F) - ln|F(0)| - N_zeros(r) + N_poles(r). Zero for exact arithmetic.
/// Throws ErrorKind::ZerosUnknown, or InvalidArgument when F(0) = 0.
double jensen_residual(const FunctionSpec& spec, double r, const CircleQuadratureSettings& s = {});

struct ChainRow {
  double r = 0.0;
  double u0 = 0.0;
  double B = 0.0;
  double C = 0.0;
  double lnM = 0.0;
  double T = 0.0;
  /// Largest amount by which any link of the chain fails at this radius (>= 0).
  double violation = 0.0;
};

struct ChainReport {
  std::vector<ChainRow> rows;
  double max_violation = 0.0;
};

/// Largest failure of the chain links in a row (0 when all hold).
double chain_violation(const ChainRow& row);

/// Radii used for the C profile behind B: 64 per decade from two decades
/// below the smallest radius, with the radii themselves included exactly.
std::vector<double> chain_grid(std::span<const double> radii);

/// Checks u(0) <= B <= C <= ln M and C+ <= T <= (ln M)+ at each radius.
/// B comes from a C profile sampled at 64 points per decade starting two
/// decades below the smallest radius.
ChainReport chain_check(const FunctionSpec& spec, std::span<const double> radii,
                        const CircleQuadratureSettings& s = {});

/// Profile of C(t; f) on `grid` (left value ln|f(0)|, flagged increasing).
RadialProfile circle_mean_profile(const FunctionSpec& spec, std::vector<double> grid,
                                  const CircleQuadratureSettings& s = {}, Tail tail = {});

struct OrderType {
  double order = 0.0;
  double type = 0.0;
  /// Type recomputed with the caller's order, when one was given.
  std::optional<double> type_at_given_order;
};

/// Least-squares slope of ln(values+) against ln r over the top decade of
/// the profile, and the largest value / r^order there.
/// Throws ErrorKind::ProfileCoverage with fewer than 8 usable samples.
OrderType estimate_order_type(const RadialProfile& m_profile, std::optional<double> given_order = {});

/// kernel transform of the C profile at r = 1 minus u(1). The harmonicity
/// of u near the origin is not checked.
double lemma22_check(const RadialProfile& c_profile, double u_at_1, double p);
/// Same with C given as a callable growing at most like t^tail_exponent.
double lemma22_check(const std::function<double(double)>& c_u, double u_at_1, double p,
                     double tail_exponent = 0.0);

}  // namespace growthlab::radial
