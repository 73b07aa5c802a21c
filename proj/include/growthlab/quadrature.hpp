#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace growthlab::quad {

struct Options {
  double abs_tol = 0.0;
  double rel_tol = 1e-10;
  std::size_t max_panels = 20000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t panels = 0;
};

/// One 21-point Gauss-Kronrod panel; `error` is |K21 - G10|.
Result gauss_kronrod21(const std::function<double(double)>& f, double a, double b);

/// Globally adaptive Gauss-Kronrod quadrature on [a, b], split first at the
/// given interior breakpoints (points outside (a, b) are ignored). The panel
/// with the largest error estimate is bisected until the summed estimate is
/// below max(abs_tol, rel_tol * |value|). Nodes never touch a or b, so
/// integrable endpoint singularities are allowed.
///
/// Throws ErrorKind::QuadratureStall when max_panels is exhausted.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {}, std::span<const double> breakpoints = {});

}  // namespace growthlab::quad
