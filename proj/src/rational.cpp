#include "sbdo/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "sbdo/errors.hpp"

namespace sbdo {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DivisionByZero();
  assign_wide(num, den);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::assign_mpq(const mpq_class& q) {
  // mpq_class arithmetic results are canonical already.
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    const long n = q.get_num().get_si();
    const long d = q.get_den().get_si();
    if (n != std::numeric_limits<long>::min()) {
      num_ = n;
      den_ = d;
      big_.reset();
      return;
    }
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(q);
}

void Rational::assign_wide(i128 num, i128 den) {
  if (den == 0) throw DivisionByZero();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  const u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num <= kMax && num >= -kMax && den <= kMax) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  assign_mpq(q);
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string num_txt(text.substr(0, slash));
  std::string den_txt = slash == std::string_view::npos ? "1" : std::string(trim(text.substr(slash + 1)));
  num_txt = std::string(trim(num_txt));
  if (!valid_int(num_txt, true) || !valid_int(den_txt, false))
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  if (num_txt[0] == '+') num_txt.erase(0, 1);
  mpz_class n(num_txt, 10), d(den_txt, 10);
  if (d == 0) throw DivisionByZero();
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::numerator() const {
  if (big_) return Rational(mpq_class(big_->get_num()));
  return Rational(num_);
}

Rational Rational::denominator() const {
  if (big_) return Rational(mpq_class(big_->get_den()));
  return Rational(den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) {
    mpq_class q = 1 / *big_;
    return Rational(q);
  }
  Rational r;
  r.assign_wide(den_, num_);
  return r;
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  const mpq_class q = to_mpq();
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(mpq_class(n, d));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == o.den_) {
      if (den_ == 1) {
        assign_wide(static_cast<i128>(num_) + o.num_, 1);
      } else {
        assign_wide(static_cast<i128>(num_) + o.num_, den_);
      }
    } else {
      assign_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                  static_cast<i128>(den_) * o.den_);
    }
    return *this;
  }
  assign_mpq(mpq_class(to_mpq() + o.to_mpq()));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!o.big_) {
    Rational neg;
    neg.num_ = -o.num_;
    neg.den_ = o.den_;
    return *this += neg;
  }
  assign_mpq(mpq_class(to_mpq() - o.to_mpq()));
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
      assign_wide(static_cast<i128>(num_) * o.num_, 1);
      return *this;
    }
    const std::int64_t g1 = std::gcd(num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_, den_);
    const i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    const i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    assign_wide(n, d);
    return *this;
  }
  assign_mpq(mpq_class(to_mpq() * o.to_mpq()));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  return *this *= o.inverse();
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r(a);
  r += b;
  return r;
}
Rational operator-(const Rational& a, const Rational& b) {
  Rational r(a);
  r -= b;
  return r;
}
Rational operator*(const Rational& a, const Rational& b) {
  Rational r(a);
  r *= b;
  return r;
}
Rational operator/(const Rational& a, const Rational& b) {
  Rational r(a);
  r /= b;
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;  // canonical storage
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

}  // namespace sbdo
