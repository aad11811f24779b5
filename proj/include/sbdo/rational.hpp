#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sbdo {

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in int64 are stored inline and
// operated on with 128-bit intermediates; anything larger is promoted to a
// GMP rational and demoted again as soon as it fits. The representation is
// canonical, so equality never needs to normalise.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(long long value) {  // NOLINT: implicit conversion from integers
    if (value == INT64_MIN) assign_wide(value, 1);
    else num_ = value;
  }
  Rational(int value) : Rational(static_cast<long long>(value)) {}  // NOLINT
  Rational(long value) : Rational(static_cast<long long>(value)) {}  // NOLINT
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  // Accepts "a", "-a", "a/b" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  Rational numerator() const;
  Rational denominator() const;

  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  std::optional<Rational> exact_sqrt() const;

  mpq_class to_mpq() const;
  double to_double() const;
  // "a" for integers, "a/b" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void assign_mpq(const mpq_class& q);
  void assign_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

inline std::optional<Rational> exact_sqrt(const Rational& r) { return r.exact_sqrt(); }

inline Rational pow(Rational base, unsigned exponent) {
  Rational result(1);
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

}  // namespace sbdo
