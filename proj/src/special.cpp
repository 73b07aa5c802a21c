#include "growthlab/special.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "growthlab/error.hpp"

namespace growthlab::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

// log Gamma for Re z >= 1/2.
cplx log_gamma_right(cplx z) {
  const cplx w = z - 1.0;
  cplx a = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) a += kLanczos[k] / (w + static_cast<double>(k));
  const cplx t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (w + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

cplx sin_pi(cplx z) {
  const double n = std::round(z.real());
  const cplx f{z.real() - n, z.imag()};
  const cplx s = std::sin(kPi * f);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

cplx log_sin_pi(cplx z) {
  const double n = std::round(z.real());
  const cplx f{z.real() - n, z.imag()};
  const cplx sign_log = std::fmod(n, 2.0) == 0.0 ? cplx{0.0, 0.0} : cplx{0.0, kPi};
  const cplx w = kPi * f;
  if (std::abs(w.imag()) < 20.0) return std::log(std::sin(w)) + sign_log;
  const cplx i{0.0, 1.0};
  if (w.imag() > 0) {
    // sin w = e^{-iw} (1 - e^{2iw}) i/2
    return -i * w + std::log(1.0 - std::exp(2.0 * i * w)) + std::log(i / 2.0) + sign_log;
  }
  // sin w = e^{iw} (1 - e^{-2iw}) / (2i)
  return i * w + std::log(1.0 - std::exp(-2.0 * i * w)) - std::log(2.0 * i) + sign_log;
}

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z))
    fail(ErrorKind::PoleHit, "Gamma pole at " + std::to_string(z.real()));
  if (z.real() < 0.5) return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
  return log_gamma_right(z);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx reciprocal_gamma(cplx z) {
  if (is_nonpositive_integer(z)) return {0.0, 0.0};
  return std::exp(-log_gamma(z));
}

SeriesValue mittag_leffler_series(double rho, double mu, cplx z, double tol) {
  using ld = long double;
  using cld = std::complex<long double>;
  if (!(rho > 0)) fail(ErrorKind::InvalidArgument, "Mittag-Leffler order must be positive");
  const double az = std::abs(z);
  const double growth = az == 0.0 ? 0.0 : std::pow(az, rho);
  if (growth > 700.0)
    fail(ErrorKind::NonConvergentSeries,
         "|z|^rho = " + std::to_string(growth) + " exceeds 700 (asymptotic regime)");
  const int cap = static_cast<int>(10.0 * (1.0 + rho * growth + az) + 50.0 * (1.0 + rho));

  const cld zl{static_cast<ld>(z.real()), static_cast<ld>(z.imag())};
  const cld logz = az == 0.0 ? cld{0, 0} : std::log(zl);
  cld sum{0, 0};
  ld abs_sum = 0;  // sum of |terms|, drives the cancellation estimate
  int small_run = 0;
  int k = 0;
  for (; k <= cap; ++k) {
    const ld arg = static_cast<ld>(mu) + static_cast<ld>(k) / static_cast<ld>(rho);
    cld term{0, 0};
    const bool gamma_pole = arg <= 0 && std::floor(arg) == arg;
    if (!gamma_pole) {
      if (k == 0) {
        term = 1.0L / std::tgamma(arg);
      } else if (az == 0.0) {
        term = 0;
      } else if (arg < 1) {
        term = std::exp(static_cast<ld>(k) * logz) / std::tgamma(arg);
      } else {
        term = std::exp(static_cast<ld>(k) * logz - std::lgamma(arg));
      }
    }
    sum += term;
    abs_sum += std::abs(term);
    // Terms vanish past the peak; require three in a row below tolerance.
    const bool past_poles = arg > 0;
    if (past_poles && std::abs(term) <= static_cast<ld>(tol) * std::abs(sum)) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    if (az == 0.0 && k >= 1 && past_poles) break;
  }
  if (k > cap)
    fail(ErrorKind::NonConvergentSeries,
         "term cap " + std::to_string(cap) + " reached for |z| = " + std::to_string(az));

  SeriesValue out;
  out.value = {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
  out.terms = k + 1;
  const ld mag = std::abs(sum);
  const ld eps = std::numeric_limits<ld>::epsilon();
  // Each term carries a few ulps from lgamma/exp; cancellation amplifies by abs_sum/|sum|.
  const ld est = mag > 0 ? 8 * eps * abs_sum / mag : 1.0L;
  out.est_rel_err = std::max(static_cast<double>(est), std::numeric_limits<double>::epsilon());
  return out;
}

}  // namespace growthlab::special
