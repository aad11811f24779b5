#pragma once

#include <string>

#include "sbdo/conformal.hpp"
#include "sbdo/weyl.hpp"

namespace sbdo {

// Lie algebra action of Spin(n) on a target space, given on the Euclidean
// bivectors e_i e_j.
class MRep {
 public:
  enum class Kind { Trivial, Spinor, DualSpinor, KForm };

  static MRep trivial(int n) { return MRep(Kind::Trivial, n, 0); }
  static MRep spinor(int n) { return MRep(Kind::Spinor, n, 0); }
  static MRep dual_spinor(int n) { return MRep(Kind::DualSpinor, n, 0); }
  static MRep k_form(int n, int k);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t dim() const;
  std::string name() const;

  // Action of a Euclidean bivector with rational coefficients.
  CMatrix action(const QMultivector& bivector) const;
  // Action of a single blade e_i e_j.
  const CMatrix& blade_action(Blade b) const;

 private:
  MRep(Kind kind, int n, int k);

  Kind kind_;
  int n_;
  int k_;
  std::map<Blade, CMatrix> blades_;
};

// d pi_lambda(X) for X a bivector of the Lorentzian algebra. With
// Y(x) = nbar_{-x} X nbar_x = sum_j c_j e_j u+ + Y_m + eta H + (n part):
//   d pi(X) = 2 weight eta + R(Y_m) - 2 sum_j c_j d/dx_j.
// `weight` is a polynomial in the formal parameters (e.g. lambda + 1).
WeylOperator infinitesimal_action(const QMultivector& X, const MRep& rep, const CPoly& weight);

// Independent route: differentiate pi(exp tX) through the GN factorization of
// (1 - tX) nbar_x over first-order jets of polynomials in x.
WeylOperator infinitesimal_action_jet(const QMultivector& X, const MRep& rep, const CPoly& weight);

// The standard basis of the Lie algebra: e_i e_j for 0 <= i < j <= n+1.
std::vector<QMultivector> lie_algebra_basis(int n);

}  // namespace sbdo
