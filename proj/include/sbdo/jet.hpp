#pragma once

#include <optional>
#include <string>

#include "sbdo/errors.hpp"

namespace sbdo {

// First-order jet value + t*slope with t^2 = 0 (dual numbers over T).
// Used to differentiate one-parameter subgroups exactly.
template <class T>
class Jet {
 public:
  Jet() : value_(0), slope_(0) {}
  Jet(T value) : value_(std::move(value)), slope_(0) {}  // NOLINT: constant jet
  Jet(int value) : value_(value), slope_(0) {}           // NOLINT
  Jet(T value, T slope) : value_(std::move(value)), slope_(std::move(slope)) {}

  // The infinitesimal t itself.
  static Jet epsilon() { return Jet(T(0), T(1)); }

  const T& value() const { return value_; }
  const T& slope() const { return slope_; }

  bool is_zero() const { return value_.is_zero() && slope_.is_zero(); }

  Jet inverse() const {
    T inv = value_.inverse();  // throws when the value is not invertible
    return Jet(inv, -(slope_ * inv * inv));
  }

  Jet operator-() const { return Jet(-value_, -slope_); }
  Jet& operator+=(const Jet& o) {
    value_ += o.value_;
    slope_ += o.slope_;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    value_ -= o.value_;
    slope_ -= o.slope_;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    T s = value_ * o.slope_ + slope_ * o.value_;
    value_ *= o.value_;
    slope_ = std::move(s);
    return *this;
  }
  Jet& operator/=(const Jet& o) { return *this *= o.inverse(); }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend bool operator==(const Jet& a, const Jet& b) {
    return a.value_ == b.value_ && a.slope_ == b.slope_;
  }

  std::string str() const { return "(" + to_string(value_) + ")+t*(" + to_string(slope_) + ")"; }

 private:
  T value_;
  T slope_;
};

// sqrt(a + t b) = sqrt(a) + t b / (2 sqrt(a)); needs an exact root of the value.
template <class T>
std::optional<Jet<T>> exact_sqrt(const Jet<T>& j) {
  auto root = exact_sqrt(j.value());
  if (!root) return std::nullopt;
  if (root->is_zero()) return std::nullopt;
  T half_inv = (T(2) * *root).inverse();
  return Jet<T>(*root, j.slope() * half_inv);
}

template <class T>
std::string to_string(const Jet<T>& j) {
  return j.str();
}

}  // namespace sbdo
