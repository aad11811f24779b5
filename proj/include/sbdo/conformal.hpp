#pragma once

#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "sbdo/clifford.hpp"
#include "sbdo/errors.hpp"

namespace sbdo {

// The spin group of R^{1,n+1} inside the Lorentzian Clifford algebra with
// generators e0, e1..en, e_{n+1}. Euclidean generator e_j of R^n sits at the
// same label, so a Euclidean blade mask embeds by a shift of one bit.
//
// Null vectors u- = e0 - e_{n+1} and u+ = e0 + e_{n+1}:
//   n_y = 1 + y u-/2,  nbar_z = 1 + z u+/2,
//   a(r) = (r + 1/r)/2 + (r - 1/r)/2 e0 e_{n+1}   (r = e^t),
//   w = e1 e_{n+1},  H = e0 e_{n+1}.
// N fixes u-, nbar_x maps u- to u- + 2x + |x|^2 u+, and a(r) scales u- by r^2,
// so the u- coefficient of tau_g(u-) is the squared scale of g.

inline Blade euclidean_mask(int n) { return ((Blade{1} << n) - 1) << 1; }

template <class T>
Multivector<T> embed_euclidean(const Multivector<T>& m, int n) {
  if (m.signature().dim() != n) throw SignatureMismatch("embedding expects the Euclidean algebra of R^n");
  Multivector<T> r(Signature::lorentzian(n));
  for (const auto& [b, c] : m.terms()) r.add_term(b << 1, c);
  return r;
}

template <class T>
Multivector<T> project_euclidean(const Multivector<T>& m, int n) {
  if (!m.supported_in(euclidean_mask(n))) throw DomainError("element does not lie in the Euclidean subalgebra");
  Multivector<T> r(Signature::euclidean(n));
  for (const auto& [b, c] : m.terms()) r.add_term(b >> 1, c);
  return r;
}

namespace conformal {

template <class T>
Multivector<T> e(int n, int label) {
  return Multivector<T>::generator(Signature::lorentzian(n), label);
}
template <class T>
Multivector<T> one(int n) {
  return Multivector<T>(Signature::lorentzian(n), T(1));
}
template <class T>
Multivector<T> u_minus(int n) {
  return e<T>(n, 0) - e<T>(n, n + 1);
}
template <class T>
Multivector<T> u_plus(int n) {
  return e<T>(n, 0) + e<T>(n, n + 1);
}
// sum_j v_j e_j, j = 1..n.
template <class T>
Multivector<T> point(int n, const std::vector<T>& v) {
  if (static_cast<int>(v.size()) != n) throw ShapeMismatch("point has the wrong dimension");
  return Multivector<T>::vector(Signature::lorentzian(n), v, 1);
}

template <class T>
Multivector<T> nbar(int n, const std::vector<T>& z) {
  return one<T>(n) + point(n, z) * u_plus<T>(n) * T(Rational(1, 2));
}
template <class T>
Multivector<T> n_elem(int n, const std::vector<T>& y) {
  return one<T>(n) + point(n, y) * u_minus<T>(n) * T(Rational(1, 2));
}
template <class T>
Multivector<T> a_elem(int n, const T& r) {
  if constexpr (std::is_same_v<T, Rational>)
    if (r.sign() <= 0) throw DomainError("a(r) needs r > 0");
  const T ri = r.inverse();
  const T half(Rational(1, 2));
  return Multivector<T>(Signature::lorentzian(n), (r + ri) * half) +
         e<T>(n, 0) * e<T>(n, n + 1) * ((r - ri) * half);
}
template <class T>
Multivector<T> H(int n) {
  return e<T>(n, 0) * e<T>(n, n + 1);
}
template <class T>
Multivector<T> w(int n) {
  return e<T>(n, 1) * e<T>(n, n + 1);
}

// Coefficient of u- when a vector is written in the basis u-, u+, e1..en.
template <class T>
T u_minus_coefficient(const Multivector<T>& v, int n) {
  return (v.coefficient(Blade{1}) - v.coefficient(Blade{1} << (n + 1))) * T(Rational(1, 2));
}

template <class T>
Multivector<T> tau(const Multivector<T>& g, const Multivector<T>& x) {
  return versor_adjoint(g, x, AdjointMode::LorentzAlpha);
}

}  // namespace conformal

template <class T>
struct GNFactors {
  std::vector<T> v;   // nbar part
  Multivector<T> m;   // Spin(n) part, Euclidean algebra
  T r;                // a part, a(r) with r = e^t
  std::vector<T> u;   // n part
};

template <class T>
Multivector<T> gn_compose(const GNFactors<T>& f) {
  const int n = static_cast<int>(f.v.size());
  return conformal::nbar(n, f.v) * embed_euclidean(f.m, n) * conformal::a_elem(n, f.r) * conformal::n_elem(n, f.u);
}

// g = nbar_v m a(r) n_u. The scale r^2 and the point v = g(0) are read off
// tau_g(u-); then u from the u- components of tau_{nbar_{-v} g}(e_j), and m
// is what remains once a(r) n_u is stripped. The recomposition is checked.
template <class T>
GNFactors<T> gn_factorize(const Multivector<T>& g, int n) {
  using namespace conformal;
  if (!(g.signature() == Signature::lorentzian(n))) throw SignatureMismatch();
  if (!g.is_even()) throw DomainError("group element must be even");
  const Multivector<T> V = tau(g, u_minus<T>(n));
  const T r2 = u_minus_coefficient(V, n);
  if (r2.is_zero()) throw NotInDenseCell("element has no nbar m a n factorization");
  if constexpr (std::is_same_v<T, Rational>)
    if (r2.sign() < 0) throw NotInDenseCell("element has no nbar m a n factorization (negative scale)");
  auto root = exact_sqrt(r2);
  if (!root) throw FieldExtensionRequired("scale " + to_string(r2) + " is not a square in the working field");
  GNFactors<T> f{{}, Multivector<T>(Signature::euclidean(n)), *root, {}};
  const T inv2r2 = (T(2) * r2).inverse();
  for (int j = 1; j <= n; ++j) f.v.push_back(V.coefficient(Blade{1} << j) * inv2r2);
  std::vector<T> minus_v;
  for (const auto& c : f.v) minus_v.push_back(-c);
  const Multivector<T> g1 = nbar(n, minus_v) * g;
  const T r2_inv = r2.inverse();
  for (int j = 1; j <= n; ++j) f.u.push_back(u_minus_coefficient(tau(g1, e<T>(n, j)), n) * r2_inv);
  std::vector<T> minus_u;
  for (const auto& c : f.u) minus_u.push_back(-c);
  const Multivector<T> m = g1 * n_elem(n, minus_u) * a_elem(n, f.r.inverse());
  if (!m.is_even() || !m.supported_in(euclidean_mask(n)))
    throw NotInDenseCell("residual factor is not in Spin(n)");
  if (!(m * m.alpha() == one<T>(n))) throw InvariantViolation("Spin(n) factor is not a unit versor");
  f.m = project_euclidean(m, n);
  if (!(gn_compose(f) == g)) throw InvariantViolation("factorization does not recompose");
  return f;
}

// g(x) = nbar-part of g nbar_x.
template <class T>
std::vector<T> conformal_action(const Multivector<T>& g, const std::vector<T>& x, int n) {
  using namespace conformal;
  const Multivector<T> V = tau(g, tau(nbar(n, x), u_minus<T>(n)));
  const T A = u_minus_coefficient(V, n);
  if (A.is_zero()) throw ActionUndefined("point is mapped to infinity");
  const T inv = (T(2) * A).inverse();
  std::vector<T> out;
  for (int j = 1; j <= n; ++j) out.push_back(V.coefficient(Blade{1} << j) * inv);
  return out;
}

// Y = sum_j nbar_j e_j u+ + m + a H + sum_j n_j e_j u-.
template <class T>
struct BivectorDecomp {
  std::vector<T> nbar;
  Multivector<T> m;  // Euclidean algebra
  T a;
  std::vector<T> n;
};

template <class T>
BivectorDecomp<T> decompose_bivector(const Multivector<T>& Y, int n) {
  if (!(Y.signature() == Signature::lorentzian(n))) throw SignatureMismatch();
  if (!Y.is_grade(2)) throw DomainError("expected a bivector");
  const T half(Rational(1, 2));
  const Blade e0 = 1, top = Blade{1} << (n + 1);
  BivectorDecomp<T> d{{}, Multivector<T>(Signature::euclidean(n)), Y.coefficient(e0 | top), {}};
  for (int j = 1; j <= n; ++j) {
    const Blade ej = Blade{1} << j;
    // e_j u+ = -e0 e_j + e_j e_{n+1},  e_j u- = -e0 e_j - e_j e_{n+1}
    const T y0j = Y.coefficient(e0 | ej), yjt = Y.coefficient(ej | top);
    d.nbar.push_back((yjt - y0j) * half);
    d.n.push_back((-y0j - yjt) * half);
  }
  for (const auto& [b, c] : Y.terms())
    if (!(b & (e0 | top))) d.m.add_term(b >> 1, c);
  return d;
}

template <class T>
Multivector<T> recompose_bivector(const BivectorDecomp<T>& d, int n) {
  using namespace conformal;
  Multivector<T> Y = embed_euclidean(d.m, n) + H<T>(n) * d.a;
  for (int j = 1; j <= n; ++j) {
    Y += e<T>(n, j) * u_plus<T>(n) * d.nbar[static_cast<std::size_t>(j - 1)];
    Y += e<T>(n, j) * u_minus<T>(n) * d.n[static_cast<std::size_t>(j - 1)];
  }
  return Y;
}

// Rational point of the unit sphere S^{n-1} by inverse stereographic
// projection of a random rational parameter.
std::vector<Rational> random_unit_vector(int n, std::mt19937_64& rng);
// Product of two or four random rational unit vectors of R^n: an element of
// Spin(n) with rational coefficients.
QMultivector random_spin_element(int n, std::mt19937_64& rng);
// Random factors with small rational entries and r > 0.
GNFactors<Rational> random_gn_factors(int n, std::mt19937_64& rng);

// Products of "nbar(v1,...,vn)", "n(u1,...,un)", "a(r)", "w", "winv" and
// "m:e1e2..." tokens separated by '*' or whitespace.
QMultivector parse_group_element(int n, const std::string& text);

}  // namespace sbdo
