#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbdo/errors.hpp"
#include "sbdo/gaussian.hpp"
#include "sbdo/rational.hpp"

namespace sbdo {

inline constexpr std::size_t kMaxVars = 24;

// Exponent vector over at most kMaxVars indeterminates. Ordered
// lexicographically on the exponent of variable 0, then 1, ...
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  static Monomial var(std::size_t index, unsigned power = 1) {
    Monomial m;
    m.exp[index] = static_cast<std::uint8_t>(power);
    return m;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool is_one() const {
    for (auto e : exp)
      if (e) return false;
    return true;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned e = unsigned(a.exp[i]) + b.exp[i];
      if (e > 255) throw DomainError("monomial exponent overflow");
      r.exp[i] = static_cast<std::uint8_t>(e);
    }
    return r;
  }
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
    return r;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    const int c = std::memcmp(a.exp.data(), b.exp.data(), kMaxVars);
    return c <=> 0;
  }
};

// Graded lexicographic order: total degree first, then lex with variable 0
// most significant. Used for every rendering so output is deterministic.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a > b;
}

class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVars) throw DomainError("too many indeterminates");
  }
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

namespace detail {

inline bool is_negative_scalar(const Rational& r) { return r.sign() < 0; }
inline bool is_negative_scalar(const GaussianRational& g) {
  return g.re().sign() < 0 || (g.re().is_zero() && g.im().sign() < 0);
}
inline bool is_compound_scalar(const Rational&) { return false; }
inline bool is_compound_scalar(const GaussianRational& g) { return !g.re().is_zero() && !g.im().is_zero(); }

}  // namespace detail

// Sparse multivariate polynomial with coefficients in C (Rational or
// GaussianRational). Terms are kept sorted by monomial with no zero
// coefficients, so structural equality is mathematical equality.
//
// A polynomial carries the table of indeterminate names it lives over. A
// constant built without a table adopts the table of whatever it is combined
// with.
template <class C>
class Poly {
 public:
  using Coeff = C;
  using Term = std::pair<Monomial, C>;

  Poly() = default;
  Poly(C c) {  // NOLINT: constants embed implicitly
    if (!c.is_zero()) terms_.emplace_back(Monomial{}, std::move(c));
  }
  Poly(int c) : Poly(C(c)) {}  // NOLINT
  Poly(VarTablePtr vars, C c) : Poly(std::move(c)) { vars_ = std::move(vars); }
  explicit Poly(VarTablePtr vars) : vars_(std::move(vars)) {}

  static Poly variable(VarTablePtr vars, std::size_t index) {
    if (!vars || index >= vars->size()) throw DomainError("variable index out of range");
    Poly p(std::move(vars));
    p.terms_.emplace_back(Monomial::var(index), C(1));
    return p;
  }
  static Poly variable(VarTablePtr vars, std::string_view name) {
    if (!vars) throw DomainError("no indeterminate table");
    auto idx = vars->index_of(name);
    if (!idx) throw DomainError("unknown indeterminate '" + std::string(name) + "'");
    return variable(std::move(vars), *idx);
  }
  static Poly monomial(VarTablePtr vars, const Monomial& m, C c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
    return p;
  }
  // Builds from an unsorted term list, combining duplicates.
  static Poly from_terms(VarTablePtr vars, std::vector<Term> terms) {
    Poly p(std::move(vars));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const VarTablePtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].second == C(1); }

  C constant_term() const {
    if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
    return C(0);
  }
  C coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return C(0);
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m.exp[var]);
    return d;
  }
  bool uses_variable(std::size_t var) const { return degree_in(var) > 0; }

  Poly inverse() const {
    if (!is_constant() || is_zero()) throw DivisionByZero("polynomial is not an invertible constant");
    return Poly(vars_, terms_[0].second.inverse());
  }

  Poly derivative(std::size_t var) const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
      const unsigned e = m.exp[var];
      if (!e) continue;
      Monomial dm = m;
      dm.exp[var] = static_cast<std::uint8_t>(e - 1);
      r.terms_.emplace_back(dm, c * C(static_cast<long long>(e)));
    }
    // Lowering one exponent keeps lex order among the survivors.
    return r;
  }
  Poly derivative(std::string_view name) const {
    if (!vars_) throw DomainError("unknown indeterminate '" + std::string(name) + "'");
    auto idx = vars_->index_of(name);
    if (!idx) throw DomainError("unknown indeterminate '" + std::string(name) + "'");
    return derivative(*idx);
  }

  // Replaces `var` by `value` everywhere.
  Poly substitute(std::size_t var, const Poly& value) const {
    const unsigned deg = degree_in(var);
    if (deg == 0) return *this;
    std::vector<Poly> powers{Poly(C(1))};
    for (unsigned k = 1; k <= deg; ++k) powers.push_back(powers.back() * value);
    std::vector<std::vector<Term>> buckets(deg + 1);
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      const unsigned e = rest.exp[var];
      rest.exp[var] = 0;
      buckets[e].emplace_back(rest, c);
    }
    Poly result(vars_ ? vars_ : value.vars_);
    for (unsigned e = 0; e <= deg; ++e) {
      if (buckets[e].empty()) continue;
      Poly part = from_terms(result.vars_, std::move(buckets[e]));
      result += e == 0 ? part : part * powers[e];
    }
    return result;
  }

  // Renames `from` to `to` (x^a y^b -> x^(a+b) when from=y, to=x).
  Poly merge_variable(std::size_t from, std::size_t to) const {
    if (!uses_variable(from)) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial mm = m;
      const unsigned e = unsigned(mm.exp[to]) + mm.exp[from];
      if (e > 255) throw DomainError("monomial exponent overflow");
      mm.exp[to] = static_cast<std::uint8_t>(e);
      mm.exp[from] = 0;
      out.emplace_back(mm, c);
    }
    return from_terms(vars_, std::move(out));
  }

  // Sets every variable to the given value; missing trailing entries count as 0.
  C evaluate(std::span<const C> point) const {
    C acc(0);
    for (const auto& [m, c] : terms_) {
      C t = c;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (!m.exp[i]) continue;
        if (i >= point.size()) {
          t = C(0);
          break;
        }
        for (unsigned k = 0; k < m.exp[i]; ++k) t *= point[i];
      }
      acc += t;
    }
    return acc;
  }

  template <class F>
  Poly map_coefficients(F&& f) const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
      C v = f(c);
      if (!v.is_zero()) r.terms_.emplace_back(m, std::move(v));
    }
    return r;
  }

  Poly operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  Poly& operator+=(const Poly& o) { return accumulate(o, false); }
  Poly& operator-=(const Poly& o) { return accumulate(o, true); }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& operator*=(const C& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(pick_vars(a, b));
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (b.terms_.size() == 1) return scale_by_term(a, b.terms_[0], r.vars_);
    if (a.terms_.size() == 1) return scale_by_term(b, a.terms_[0], r.vars_);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.terms_.emplace_back(ma * mb, ca * cb);
    r.normalize();
    return r;
  }
  friend Poly operator*(Poly a, const C& c) { return a *= c; }
  friend Poly operator*(const C& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  std::string str() const { return str(vars_.get()); }
  std::string str(const VarTable* names) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const Term* a, const Term* b) { return grlex_greater(a->first, b->first); });
    std::string out;
    bool first = true;
    for (const Term* t : order) {
      const C& c = t->second;
      const bool neg = detail::is_negative_scalar(c) && !detail::is_compound_scalar(c);
      const C mag = neg ? -c : c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono = monomial_str(t->first, names);
      std::string coeff = to_string(mag);
      if (detail::is_compound_scalar(c)) coeff = "(" + coeff + ")";
      if (mono.empty()) {
        out += coeff;
      } else if (mag == C(1)) {
        out += mono;
      } else {
        out += coeff + "*" + mono;
      }
    }
    return out;
  }

  static std::string monomial_str(const Monomial& m, const VarTable* names) {
    std::string s;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!m.exp[i]) continue;
      if (!s.empty()) s += "*";
      s += names && i < names->size() ? names->name(i) : "v" + std::to_string(i);
      if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s;
  }

 private:
  static VarTablePtr pick_vars(const Poly& a, const Poly& b) {
    if (!a.vars_) return b.vars_;
    if (!b.vars_ || a.vars_ == b.vars_) return a.vars_;
    if (a.vars_->names() != b.vars_->names()) throw DomainError("polynomials over different indeterminates");
    return a.vars_;
  }

  static Poly scale_by_term(const Poly& p, const Term& t, VarTablePtr vars) {
    Poly r(std::move(vars));
    r.terms_.reserve(p.terms_.size());
    if (t.first.is_one()) {
      for (const auto& [m, c] : p.terms_) r.terms_.emplace_back(m, c * t.second);
    } else {
      // Multiplying every monomial by the same monomial preserves lex order.
      for (const auto& [m, c] : p.terms_) r.terms_.emplace_back(m * t.first, c * t.second);
    }
    return r;
  }

  Poly& accumulate(const Poly& o, bool negate) {
    vars_ = pick_vars(*this, o);
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        out.push_back(std::move(*i));
        ++i;
      } else if (i == terms_.end() || j->first < i->first) {
        out.emplace_back(j->first, negate ? -j->second : j->second);
        ++j;
      } else {
        C c = std::move(i->second);
        if (negate) c -= j->second;
        else c += j->second;
        if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  VarTablePtr vars_;
  std::vector<Term> terms_;
};

using QPoly = Poly<Rational>;
using CPoly = Poly<GaussianRational>;

template <class C>
std::string to_string(const Poly<C>& p) {
  return p.str();
}

// A polynomial is an exact square root candidate only when it is a constant.
template <class C>
std::optional<Poly<C>> exact_sqrt(const Poly<C>& p) {
  if (!p.is_constant()) return std::nullopt;
  if constexpr (requires(const C& c) { exact_sqrt(c); }) {
    auto r = exact_sqrt(p.constant_term());
    if (!r) return std::nullopt;
    return Poly<C>(p.vars(), *r);
  } else {
    return std::nullopt;
  }
}

inline CPoly to_complex(const QPoly& p) {
  std::vector<CPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, GaussianRational(c));
  return CPoly::from_terms(p.vars(), std::move(terms));
}

}  // namespace sbdo
