#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace lprad {

/// A norm exponent p in [1, inf].
///
/// Infinity is an exact distinguished value, never a large-float stand-in;
/// every formula downstream branches on it exactly. The Holder conjugate is
/// computed once at construction and stored alongside the value, so
/// dual().dual() round-trips bit-exactly even when p/(p-1) is not
/// representable.
class Exponent {
 public:
  explicit Exponent(double value) : Exponent(value, conjugate_of(value)) {
    if (!(value >= 1.0)) {
      throw std::invalid_argument("Exponent: value must be >= 1, got " +
                                  std::to_string(value));
    }
  }

  static Exponent infinity() noexcept {
    return Exponent(std::numeric_limits<double>::infinity(), 1.0);
  }

  /// The numeric value; +inf for the infinite exponent.
  double value() const noexcept { return value_; }

  /// The Holder conjugate p* with 1/p + 1/p* = 1.
  Exponent dual() const noexcept { return Exponent(dual_, value_); }

  /// Numeric value of the conjugate without constructing it.
  double dual_value() const noexcept { return dual_; }

  bool is_infinite() const noexcept { return std::isinf(value_); }

  /// 1/p, exactly 0 for the infinite exponent.
  double reciprocal() const noexcept { return is_infinite() ? 0.0 : 1.0 / value_; }

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
    return a.value_ == b.value_;
  }
  friend std::partial_ordering operator<=>(const Exponent& a, const Exponent& b) noexcept {
    return a.value_ <=> b.value_;
  }

 private:
  Exponent(double value, double dual) noexcept : value_(value), dual_(dual) {}

  static double conjugate_of(double v) noexcept {
    if (v == 1.0) return std::numeric_limits<double>::infinity();
    if (std::isinf(v)) return 1.0;
    return v / (v - 1.0);
  }

  double value_;
  double dual_;
};

}  // namespace lprad
