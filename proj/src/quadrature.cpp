#include "growthlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "growthlab/error.hpp"

namespace growthlab::quad {

namespace {

// QUADPACK qk21 abscissae (descending, last is the centre) and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077923392358340, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for kXgk[1], kXgk[3], ..., kXgk[9].
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a, b;
  Result r;
  bool operator<(const Panel& o) const { return r.error < o.r.error; }
};

}  // namespace

Result gauss_kronrod21(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWgk[10] * fc;
  double g = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  Result out;
  out.value = k * h;
  out.error = std::abs((k - g) * h);
  out.panels = 1;
  if (!std::isfinite(out.value)) out.error = INFINITY;
  return out;
}

Result integrate(const std::function<double(double)>& f, double a, double b, const Options& opts,
                 std::span<const double> breakpoints) {
  if (!(a < b)) {
    if (a == b) return {};
    fail(ErrorKind::InvalidArgument, "integrate needs a <= b");
  }
  std::vector<double> cuts{a};
  for (double x : breakpoints)
    if (x > a && x < b) cuts.push_back(x);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel> heap;
  double total = 0.0, err = 0.0;
  std::size_t panels = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel p{cuts[i], cuts[i + 1], gauss_kronrod21(f, cuts[i], cuts[i + 1])};
    total += p.r.value;
    err += p.r.error;
    heap.push(p);
    ++panels;
  }

  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
  while (err > target()) {
    if (panels >= opts.max_panels)
      fail(ErrorKind::QuadratureStall, "panel budget exhausted with error estimate " +
                                           std::to_string(err) + " on value " +
                                           std::to_string(total));
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // The panel can no longer be split in double precision.
      fail(ErrorKind::QuadratureStall, "panel collapsed near " + std::to_string(mid));
    }
    Panel left{worst.a, mid, gauss_kronrod21(f, worst.a, mid)};
    Panel right{mid, worst.b, gauss_kronrod21(f, mid, worst.b)};
    total += left.r.value + right.r.value - worst.r.value;
    err += left.r.error + right.r.error - worst.r.error;
    heap.push(left);
    heap.push(right);
    ++panels;
    // Re-sum periodically to shed accumulated cancellation in the running totals,
    // and whenever a non-finite panel has been replaced.
    if (panels % 256 == 0 || !std::isfinite(err) || !std::isfinite(total)) {
      auto copy = heap;
      total = 0.0;
      err = 0.0;
      while (!copy.empty()) {
        total += copy.top().r.value;
        err += copy.top().r.error;
        copy.pop();
      }
    }
  }
  // Final sum in a fixed order so the result does not depend on the refinement history.
  std::vector<Panel> done;
  done.reserve(heap.size());
  while (!heap.empty()) {
    done.push_back(heap.top());
    heap.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  total = 0.0;
  err = 0.0;
  for (const auto& p : done) {
    total += p.r.value;
    err += p.r.error;
  }
  return {total, err, panels};
}

}  // namespace growthlab::quad
