#include "growthlab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "growthlab/error.hpp"

namespace growthlab::radial {

RadialProfile::RadialProfile(std::vector<double> grid, std::vector<double> values, double left_value,
                             Tail tail, bool increasing)
    : grid_(std::move(grid)), values_(std::move(values)), left_(left_value), tail_(tail),
      increasing_(increasing) {
  if (grid_.empty()) fail(ErrorKind::InvalidArgument, "profile grid is empty");
  if (grid_.size() != values_.size()) fail(ErrorKind::InvalidArgument, "grid and values differ in length");
  if (!std::isfinite(left_)) fail(ErrorKind::InvalidArgument, "left value must be finite");
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (!(grid_[i] > 0) || !std::isfinite(grid_[i]))
      fail(ErrorKind::InvalidArgument, "grid points must be positive and finite");
    if (i > 0 && !(grid_[i] > grid_[i - 1]))
      fail(ErrorKind::InvalidArgument, "grid must be strictly increasing");
    if (!std::isfinite(values_[i]))
      fail(ErrorKind::InvalidArgument, "profile value at t = " + std::to_string(grid_[i]) + " is not finite");
  }
  if (tail_.kind == TailKind::Power && !(tail_.exponent > 0))
    fail(ErrorKind::InvalidArgument, "power tail exponent must be positive");
  if (increasing_) {
    double prev = left_;
    for (auto& v : values_) {
      if (v < prev) {
        if (prev - v > 1e-9 * (1.0 + std::abs(prev)))
          fail(ErrorKind::InvalidArgument, "profile flagged increasing but decreases");
        v = prev;
      }
      prev = v;
    }
    if (tail_.coefficient < 0) fail(ErrorKind::InvalidArgument, "increasing profile with decreasing tail");
  }
}

RadialProfile RadialProfile::sample(const std::function<double(double)>& phi, std::vector<double> grid,
                                    double left_value, Tail tail, bool increasing) {
  std::vector<double> values;
  values.reserve(grid.size());
  for (double t : grid) values.push_back(phi(t));
  return RadialProfile(std::move(grid), std::move(values), left_value, tail, increasing);
}

RadialProfile RadialProfile::constant(double c) {
  return RadialProfile({1.0}, {c}, c, Tail::constant(), true);
}

double RadialProfile::operator()(double t) const {
  if (t <= 0) return left_;
  if (t <= grid_.front()) return left_ + (values_.front() - left_) * (t / grid_.front());
  if (t > grid_.back()) {
    const double end = grid_.back();
    switch (tail_.kind) {
      case TailKind::Forbidden:
        fail(ErrorKind::ProfileCoverage,
             "t = " + std::to_string(t) + " beyond profile end " + std::to_string(end));
      case TailKind::Constant:
        return values_.back();
      case TailKind::Power:
        return values_.back() + tail_.coefficient * (std::pow(t, tail_.exponent) - std::pow(end, tail_.exponent));
      case TailKind::LogLinear:
        return values_.back() + tail_.coefficient * std::log(t / end);
    }
  }
  const auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
  const auto i = static_cast<std::size_t>(it - grid_.begin());
  if (i == grid_.size()) return values_.back();  // t == last grid point
  const double a = grid_[i - 1], b = grid_[i];
  const double lam = std::log(t / a) / std::log(b / a);
  return values_[i - 1] + lam * (values_[i] - values_[i - 1]);
}

RadialProfile RadialProfile::with_tail(Tail tail) const {
  RadialProfile out = *this;
  out.tail_ = tail;
  return out;
}

std::vector<double> log_grid(double r_min, double r_max, int per_decade) {
  if (!(r_min > 0) || !(r_max >= r_min) || per_decade < 1)
    fail(ErrorKind::InvalidArgument, "log grid needs 0 < r_min <= r_max and per_decade >= 1");
  if (r_max == r_min) return {r_min};
  const double decades = std::log10(r_max / r_min);
  const auto n = std::max<long long>(1, static_cast<long long>(std::ceil(decades * per_decade - 1e-9)));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (long long i = 0; i <= n; ++i)
    out.push_back(r_min * std::pow(10.0, decades * static_cast<double>(i) / static_cast<double>(n)));
  out.front() = r_min;
  out.back() = r_max;
  return out;
}

}  // namespace growthlab::radial
