#pragma once

#include <complex>

namespace growthlab::special {

using cplx = std::complex<double>;

/// sin(pi z) with the argument reduced modulo 2 first, so values near the
/// integers keep full relative accuracy.
cplx sin_pi(cplx z);

/// A branch of log sin(pi z) that stays finite for large |Im z|.
cplx log_sin_pi(cplx z);

/// A branch of log Gamma(z) (Lanczos, g = 7, nine terms; reflection for
/// Re z < 1/2). Only exp() of the result is branch independent.
cplx log_gamma(cplx z);

cplx gamma(cplx z);

/// 1/Gamma(z): exactly 0 at z = 0, -1, -2, ...; relative error about 1e-13
/// for moderate |z|.
cplx reciprocal_gamma(cplx z);

/// Result of the Mittag-Leffler series with a cancellation-aware error estimate.
struct SeriesValue {
  cplx value;
  double est_rel_err = 0.0;
  int terms = 0;
};

/// E_rho(z; mu) = sum_k z^k / Gamma(mu + k/rho), the Dzhrbashyan normalization
/// in which rho is the order of the entire function. Terms are accumulated in
/// long double; the term cap is 10 (1 + rho |z|^rho + |z|) and the series stops
/// after three consecutive terms below tol * |partial sum|.
///
/// Throws ErrorKind::NonConvergentSeries when |z|^rho > 700 or the term cap is hit.
SeriesValue mittag_leffler_series(double rho, double mu, cplx z, double tol = 1e-16);

inline cplx mittag_leffler(double rho, double mu, cplx z) {
  return mittag_leffler_series(rho, mu, z).value;
}

}  // namespace growthlab::special
