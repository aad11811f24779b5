#pragma once

#include <cstddef>
#include <vector>

#include "sbdo/clifford.hpp"
#include "sbdo/gaussian.hpp"
#include "sbdo/matrix.hpp"

namespace sbdo {

using CMatrix = Matrix<GaussianRational>;

// Increasing k-subsets of {1..n} as blades (bit j-1 <=> index j), in
// lexicographic order of the index tuples. Indexes the coordinates of the
// k-form target.
std::vector<Blade> k_subsets(int n, int k);
std::size_t binomial(int n, int k);

// Complex Clifford module of the Euclidean algebra of R^n built from tensor
// products of Pauli matrices: Gamma_{2k-1} = Z^(k-1) x X x I.., Gamma_{2k} =
// Z^(k-1) x Y x I.., and for odd n the extra Gamma_n = Z^m. Then
// E_j = i Gamma_j, so E_j^2 = -Id and entries lie in {0, +-1, +-i}.
class CliffordModule {
 public:
  explicit CliffordModule(int n);

  int n() const { return n_; }
  std::size_t dim() const { return dim_; }
  // E_j = rho(e_j), 1 <= j <= n.
  const CMatrix& gamma(int j) const { return gamma_.at(static_cast<std::size_t>(j - 1)); }
  // rho'(e_j) = -E_j^T on the dual module.
  const CMatrix& gamma_dual(int j) const { return gamma_dual_.at(static_cast<std::size_t>(j - 1)); }

  // Algebra homomorphism from the Euclidean Clifford algebra.
  CMatrix rho(const QMultivector& a) const;
  CMatrix rho_dual(const QMultivector& a) const;
  // Product rho(e_{i1}) ... rho(e_{ik}) over the bits of a blade.
  CMatrix rho_blade(Blade b) const;
  CMatrix rho_dual_blade(Blade b) const;

  // (v, w') = sum_a v_a w'_a, bilinear.
  static GaussianRational pairing(const std::vector<GaussianRational>& v, const std::vector<GaussianRational>& w);

  // Psi^(k) as a C(n,k) x dim^2 matrix: row I, column a*dim+b holds (E_I)_{b,a}.
  CMatrix psi(int k) const;
  // L = sum_i E_i (x) rho'(e_i) on S (x) S'.
  CMatrix operator_L() const;

 private:
  int n_;
  std::size_t dim_;
  std::vector<CMatrix> gamma_;
  std::vector<CMatrix> gamma_dual_;
};

const CliffordModule& clifford_module(int n);

// Matrix of the induced action on k-forms: (tau(g)^* phi)_I =
// sum_J det(A[J,I]) phi_J with A the matrix of tau(g^{-1}) on R^n.
template <class T>
Matrix<T> k_form_action(const Matrix<T>& a_inv, int k) {
  const int n = static_cast<int>(a_inv.rows());
  const auto subsets = k_subsets(n, k);
  const std::size_t d = subsets.size();
  Matrix<T> out(d, d);
  auto indices = [](Blade b) {
    std::vector<std::size_t> ix;
    for (Blade bb = b; bb; bb &= bb - 1) ix.push_back(static_cast<std::size_t>(std::countr_zero(bb)));
    return ix;
  };
  for (std::size_t I = 0; I < d; ++I) {
    const auto ii = indices(subsets[I]);
    for (std::size_t J = 0; J < d; ++J) {
      const auto jj = indices(subsets[J]);
      Matrix<T> minor(ii.size(), ii.size());
      for (std::size_t r = 0; r < jj.size(); ++r)
        for (std::size_t c = 0; c < ii.size(); ++c) minor(r, c) = a_inv(jj[r], ii[c]);
      out(I, J) = determinant(minor);
    }
  }
  return out;
}

}  // namespace sbdo
