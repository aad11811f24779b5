#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sbdo/errors.hpp"
#include "sbdo/gaussian.hpp"
#include "sbdo/rational.hpp"

namespace sbdo {

using Blade = std::uint32_t;  // bit i set <=> generator i present

// Squares of the generators, plus the label of generator 0. The Euclidean
// algebra of R^n has every square -1 and labels e1..en; the Lorentzian
// algebra of R^{1,n+1} has squares (+1, -1, ..., -1) and labels e0..e_{n+1}.
struct Signature {
  std::vector<int> diag;
  int first_index = 1;

  static Signature euclidean(int n) { return {std::vector<int>(static_cast<std::size_t>(n), -1), 1}; }
  static Signature lorentzian(int n) {
    std::vector<int> d(static_cast<std::size_t>(n + 2), -1);
    d[0] = 1;
    return {d, 0};
  }

  int dim() const { return static_cast<int>(diag.size()); }
  friend bool operator==(const Signature&, const Signature&) = default;
};

inline int blade_grade(Blade b) { return std::popcount(b); }

// Sign and contraction factor of e_A e_B = sign * e_{A xor B}.
inline int blade_product_sign(Blade a, Blade b, const std::vector<int>& diag) {
  int swaps = 0;
  for (Blade bb = b; bb; bb &= bb - 1) {
    const int j = std::countr_zero(bb);
    swaps += std::popcount(a >> (j + 1));
  }
  int sign = (swaps & 1) ? -1 : 1;
  for (Blade c = a & b; c; c &= c - 1) sign *= diag[static_cast<std::size_t>(std::countr_zero(c))];
  return sign;
}

// alpha(e_I) = (-1)^{k(k+1)/2} e_I: reversion composed with the grade involution.
inline int alpha_sign(Blade b) {
  const int k = blade_grade(b);
  return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

inline std::string blade_name(Blade b, int first_index, const char* sep = "^") {
  if (!b) return "1";
  std::string s;
  for (Blade bb = b; bb; bb &= bb - 1) {
    if (!s.empty()) s += sep;
    s += "e" + std::to_string(std::countr_zero(bb) + first_index);
  }
  return s;
}

template <class T>
class Multivector {
 public:
  using Scalar = T;

  explicit Multivector(Signature sig) : sig_(std::move(sig)) {}
  Multivector(Signature sig, T scalar) : sig_(std::move(sig)) {
    if (!scalar.is_zero()) terms_.emplace(Blade{0}, std::move(scalar));
  }

  static Multivector blade(Signature sig, Blade b, T coeff = T(1)) {
    Multivector m(std::move(sig));
    if (!coeff.is_zero()) m.terms_.emplace(b, std::move(coeff));
    return m;
  }
  // Generator with label `label` (e.g. 1 for e1 in either signature).
  static Multivector generator(Signature sig, int label, T coeff = T(1)) {
    const int bit = label - sig.first_index;
    if (bit < 0 || bit >= sig.dim()) throw DomainError("generator label out of range");
    return blade(std::move(sig), Blade{1} << bit, std::move(coeff));
  }
  // Vector sum_j v[j] * e_{first + offset + j}.
  static Multivector vector(Signature sig, const std::vector<T>& v, int first_label) {
    Multivector m(sig);
    for (std::size_t j = 0; j < v.size(); ++j)
      m += generator(sig, first_label + static_cast<int>(j), v[j]);
    return m;
  }

  const Signature& signature() const { return sig_; }
  const std::map<Blade, T>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  T coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? T(0) : it->second;
  }
  T scalar_part() const { return coefficient(0); }

  bool is_grade(int k) const {
    for (const auto& [b, c] : terms_)
      if (blade_grade(b) != k) return false;
    return true;
  }
  bool is_even() const {
    for (const auto& [b, c] : terms_)
      if (blade_grade(b) % 2) return false;
    return true;
  }
  Multivector grade(int k) const {
    Multivector r(sig_);
    for (const auto& [b, c] : terms_)
      if (blade_grade(b) == k) r.terms_.emplace(b, c);
    return r;
  }
  // True when every blade only uses generators in `mask`.
  bool supported_in(Blade mask) const {
    for (const auto& [b, c] : terms_)
      if (b & ~mask) return false;
    return true;
  }

  Multivector alpha() const {
    Multivector r(*this);
    for (auto& [b, c] : r.terms_)
      if (alpha_sign(b) < 0) c = -c;
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    Multivector<U> r(sig_);
    for (const auto& [b, c] : terms_) {
      U v = f(c);
      if (!v.is_zero()) r.add_term(b, std::move(v));
    }
    return r;
  }

  void add_term(Blade b, T c) {
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }

  Multivector operator-() const {
    Multivector r(*this);
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
  }
  Multivector& operator+=(const Multivector& o) {
    check(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check(o);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  Multivector& operator*=(const T& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const T& s) { return a *= s; }
  friend Multivector operator*(const T& s, Multivector a) { return a *= s; }

  // Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check(b);
    Multivector r(a.sig_);
    for (const auto& [ba, ca] : a.terms_)
      for (const auto& [bb, cb] : b.terms_) {
        const int sign = blade_product_sign(ba, bb, a.sig_.diag);
        T c = ca * cb;
        if (sign < 0) c = -c;
        r.add_term(ba ^ bb, std::move(c));
      }
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  // "3/2*e1^e3 - e2 + 1", blades ordered by grade then bit pattern.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Blade, const T*>> order;
    for (const auto& [b, c] : terms_) order.emplace_back(b, &c);
    std::stable_sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
      const int gl = blade_grade(l.first), gr = blade_grade(r.first);
      return gl != gr ? gl < gr : l.first < r.first;
    });
    std::string out;
    for (const auto& [b, c] : order) {
      std::string coeff = to_string(*c);
      const bool neg = !coeff.empty() && coeff[0] == '-' && coeff.find_first_of("+-", 1) == std::string::npos;
      if (neg) coeff.erase(0, 1);
      if (coeff.find_first_of("+-", 0) != std::string::npos) coeff = "(" + coeff + ")";
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      if (b == 0) out += coeff;
      else if (coeff == "1") out += blade_name(b, sig_.first_index);
      else out += coeff + "*" + blade_name(b, sig_.first_index);
    }
    return out;
  }

 private:
  void check(const Multivector& o) const {
    if (!(sig_ == o.sig_)) throw SignatureMismatch();
  }

  Signature sig_;
  std::map<Blade, T> terms_;
};

using QMultivector = Multivector<Rational>;

template <class T>
std::string to_string(const Multivector<T>& m) {
  return m.str();
}

// Commutator XY - YX; the Lie bracket of the bivector Lie algebra.
template <class T>
Multivector<T> bracket(const Multivector<T>& x, const Multivector<T>& y) {
  return x * y - y * x;
}

// Element of the exterior algebra, stored in the basis e_I of increasing
// wedges. Shares the blade encoding with Multivector.
template <class T>
class ExteriorForm {
 public:
  ExteriorForm() = default;
  explicit ExteriorForm(int dim, int first_index = 1) : dim_(dim), first_index_(first_index) {}

  int dim() const { return dim_; }
  int first_index() const { return first_index_; }
  const std::map<Blade, T>& terms() const { return terms_; }
  void add_term(Blade b, T c) {
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  T coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? T(0) : it->second;
  }
  friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

 private:
  int dim_ = 0;
  int first_index_ = 1;
  std::map<Blade, T> terms_;
};

// Quantization map: e_{i1} ^ ... ^ e_{ik} -> e_{i1} ... e_{ik}.
template <class T>
Multivector<T> quantize(const ExteriorForm<T>& w, const Signature& sig) {
  if (w.dim() != sig.dim()) throw DomainError("exterior form and Clifford algebra differ in dimension");
  Multivector<T> r(sig);
  for (const auto& [b, c] : w.terms()) r.add_term(b, c);
  return r;
}

// Symbol map, inverse of quantize: the increasing product e_I maps to e_I.
template <class T>
ExteriorForm<T> symbol(const Multivector<T>& a) {
  ExteriorForm<T> w(a.signature().dim(), a.signature().first_index);
  for (const auto& [b, c] : a.terms()) w.add_term(b, c);
  return w;
}

enum class AdjointMode { PinConjugation, LorentzAlpha };

// tau_g(x) = g x g^{-1} (PinConjugation) or g x alpha(g) (LorentzAlpha) for a
// vector x. Requires g alpha(g) = +-1.
template <class T>
Multivector<T> versor_adjoint(const Multivector<T>& g, const Multivector<T>& x, AdjointMode mode) {
  if (!x.is_grade(1)) throw DomainError("versor_adjoint expects a vector argument");
  const Multivector<T> ga = g.alpha();
  const Multivector<T> norm = g * ga;
  if (!norm.is_grade(0) || norm.is_zero()) throw DomainError("element is not a versor (g alpha(g) is not +-1)");
  const T nv = norm.scalar_part();
  if (!(nv == T(1)) && !(nv == T(-1))) throw DomainError("element is not a versor (g alpha(g) is not +-1)");
  Multivector<T> r = g * x * ga;
  if (mode == AdjointMode::PinConjugation && nv == T(-1)) r = -r;
  if (!r.is_grade(1)) throw InvariantViolation("versor adjoint left the vector space");
  return r;
}

}  // namespace sbdo
