#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbdo/poly.hpp"

namespace sbdo {

// Exact division of multivariate polynomials over a field: returns q with
// a = q * b, or nothing when b does not divide a. Uses the lex order the
// polynomial storage is sorted by, so the leading term is the last one.
template <class C>
std::optional<Poly<C>> divide_exact(const Poly<C>& a, const Poly<C>& b) {
  if (b.is_zero()) throw DivisionByZero();
  const auto& lead = b.terms().back();
  const C lead_inv = lead.second.inverse();
  Poly<C> rem = a;
  std::vector<typename Poly<C>::Term> quotient;
  while (!rem.is_zero()) {
    const auto& top = rem.terms().back();
    if (!lead.first.divides(top.first)) return std::nullopt;
    const Monomial qm = top.first / lead.first;
    const C qc = top.second * lead_inv;
    quotient.emplace_back(qm, qc);
    rem -= Poly<C>::monomial(b.vars(), qm, qc) * b;
  }
  return Poly<C>::from_terms(a.vars() ? a.vars() : b.vars(), std::move(quotient));
}

// Factors of the form (c * v - r) with a single indeterminate v, found by
// testing small rational roots. Display-only: whatever is not split off is
// returned as the residual cofactor.
template <class C>
struct LinearFactorization {
  C content{1};
  std::vector<Poly<C>> factors;  // each primitive with positive leading coefficient
  Poly<C> rest{C(1)};
};

namespace detail {

inline std::vector<Rational> candidate_roots() {
  std::vector<Rational> out{Rational(0)};
  for (long long q = 1; q <= 4; ++q)
    for (long long p = 1; p <= 24; ++p) {
      Rational r(p, q);
      bool seen = false;
      for (const auto& c : out) seen = seen || c == r;
      if (!seen) {
        out.push_back(r);
        out.push_back(-r);
      }
    }
  return out;
}

inline Rational integer_content(const QPoly& p) {
  mpz_class g = 0, l = 1;
  for (const auto& [m, c] : p.terms()) {
    const mpq_class q = c.to_mpq();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  if (g == 0) return Rational(1);
  return Rational(mpq_class(g, l));
}

}  // namespace detail

// Splits a rational-coefficient polynomial into content, linear factors in
// one variable each, and a residual. The content carries the sign so that the
// first term of the residual is positive.
inline LinearFactorization<Rational> linear_factors(const QPoly& p) {
  LinearFactorization<Rational> out;
  if (p.is_zero()) {
    out.content = Rational(0);
    out.rest = p;
    return out;
  }
  Rational content = detail::integer_content(p);
  // Sign from the grlex-leading term.
  const QPoly::Term* lead = &p.terms().front();
  for (const auto& t : p.terms())
    if (grlex_greater(t.first, lead->first)) lead = &t;
  if (lead->second.sign() < 0) content = -content;
  QPoly rest = p * content.inverse();
  static const std::vector<Rational> roots = detail::candidate_roots();
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    bool found = true;
    while (found && rest.degree_in(v) > 0) {
      found = false;
      for (const auto& r : roots) {
        if (!rest.substitute(v, QPoly(rest.vars(), r)).is_zero()) continue;
        // factor q*v - p for r = p/q, primitive with positive leading coefficient
        QPoly factor = QPoly::variable(rest.vars(), v) * r.denominator() - QPoly(rest.vars(), r.numerator());
        auto q = divide_exact(rest, factor);
        if (!q) continue;
        out.factors.push_back(factor);
        rest = *q;
        found = true;
        break;
      }
    }
  }
  out.content = content;
  out.rest = rest;
  return out;
}

// Element of the fraction field of Poly<C>. Zero tests and equality go
// through cross-multiplication; no gcd is taken on the hot path.
template <class C>
class RationalFunction {
 public:
  using P = Poly<C>;

  RationalFunction() : num_(C(0)), den_(C(1)) {}
  RationalFunction(P num) : num_(std::move(num)), den_(C(1)) {}  // NOLINT
  RationalFunction(C c) : num_(std::move(c)), den_(C(1)) {}      // NOLINT
  RationalFunction(int c) : RationalFunction(C(c)) {}            // NOLINT
  RationalFunction(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  }

  const P& numerator() const { return num_; }
  const P& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  RationalFunction inverse() const {
    if (num_.is_zero()) throw DivisionByZero();
    return RationalFunction(den_, num_);
  }

  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  RationalFunction& operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
    }
    return *this;
  }
  RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
  RationalFunction& operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    return *this;
  }
  RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
  }

  // Cancels the common linear factors and the constant content, then
  // renders "num" or "(num)/(den)".
  std::string str() const {
    P num = num_, den = den_;
    if (auto q = divide_exact(num, den)) return q->str();
    if constexpr (std::is_same_v<C, Rational>) {
      auto fd = linear_factors(den);
      for (const auto& f : fd.factors) {
        if (auto q = divide_exact(num, f)) {
          num = *q;
          den = *divide_exact(den, f);
        }
      }
      if (!fd.rest.is_constant()) {
        if (auto q = divide_exact(num, fd.rest)) {
          num = *q;
          den = *divide_exact(den, fd.rest);
        }
      }
    }
    if (den.is_constant()) {
      return (num * den.constant_term().inverse()).str();
    }
    return "(" + num.str() + ")/(" + den.str() + ")";
  }

 private:
  P num_;
  P den_;
};

template <class C>
bool frac_is_zero(const RationalFunction<C>& f) {
  return f.is_zero();
}

using QRatFunc = RationalFunction<Rational>;
using CRatFunc = RationalFunction<GaussianRational>;

}  // namespace sbdo
