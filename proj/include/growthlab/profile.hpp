#pragma once

#include <functional>
#include <span>
#include <vector>

namespace growthlab::radial {

/// How a profile continues past its last grid point t_end.
enum class TailKind {
  Forbidden,  // evaluation past t_end throws ProfileCoverage
  Constant,   // phi(t) = phi(t_end)
  Power,      // phi(t) = phi(t_end) + coefficient * (t^exponent - t_end^exponent)
  LogLinear,  // phi(t) = phi(t_end) + coefficient * ln(t / t_end)
};

struct Tail {
  TailKind kind = TailKind::Forbidden;
  double exponent = 0.0;
  double coefficient = 0.0;

  static Tail forbidden() { return {}; }
  static Tail constant() { return {TailKind::Constant, 0.0, 0.0}; }
  static Tail power(double exponent, double coefficient) { return {TailKind::Power, exponent, coefficient}; }
  static Tail log_linear(double slope) { return {TailKind::LogLinear, 0.0, slope}; }
};

/// A sampled radial function t -> phi(t) on t > 0.
///
/// Between grid points the profile is linear in ln t. On (0, t_0] it is
/// linear in t from left_value (the value at 0) to the first grid value,
/// which keeps phi continuous at the origin.
class RadialProfile {
 public:
  RadialProfile() = default;
  /// The grid must be strictly increasing and positive and the values
  /// finite. With `increasing` set, decreases up to 1e-9 (1 + |v|) are
  /// flattened and larger ones rejected (InvalidArgument).
  RadialProfile(std::vector<double> grid, std::vector<double> values, double left_value,
                Tail tail = {}, bool increasing = false);

  static RadialProfile sample(const std::function<double(double)>& phi, std::vector<double> grid,
                              double left_value, Tail tail = {}, bool increasing = false);
  static RadialProfile constant(double c);

  double operator()(double t) const;

  std::span<const double> grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double left_value() const { return left_; }
  const Tail& tail() const { return tail_; }
  bool increasing() const { return increasing_; }
  double last_radius() const { return grid_.back(); }
  double last_value() const { return values_.back(); }

  RadialProfile with_tail(Tail tail) const;

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
  double left_ = 0.0;
  Tail tail_;
  bool increasing_ = false;
};

/// `per_decade` points per decade from r_min to r_max, both ends included.
std::vector<double> log_grid(double r_min, double r_max, int per_decade);

}  // namespace growthlab::radial
