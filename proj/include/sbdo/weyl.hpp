#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "sbdo/matrix.hpp"
#include "sbdo/ring.hpp"
#include "sbdo/spin.hpp"

namespace sbdo {

using PolyMatrix = Matrix<CPoly>;

// Derivative multi-index: slot j-1 holds the power of d/dx_j, slot
// kMaxDim + j - 1 the power of d/dy_j.
struct DerivIndex {
  static constexpr std::size_t kSlots = 2 * StandardRing::kMaxDim;
  std::array<std::uint8_t, kSlots> e{};

  static std::size_t x_slot(int j) { return static_cast<std::size_t>(j - 1); }
  static std::size_t y_slot(int j) { return static_cast<std::size_t>(StandardRing::kMaxDim + j - 1); }
  static DerivIndex dx(int j, unsigned power = 1) {
    DerivIndex d;
    d.e[x_slot(j)] = static_cast<std::uint8_t>(power);
    return d;
  }
  static DerivIndex dy(int j, unsigned power = 1) {
    DerivIndex d;
    d.e[y_slot(j)] = static_cast<std::uint8_t>(power);
    return d;
  }

  unsigned order() const;
  unsigned order_x() const;
  unsigned order_y() const;
  bool divides(const DerivIndex& o) const;
  friend DerivIndex operator+(const DerivIndex& a, const DerivIndex& b);
  friend DerivIndex operator-(const DerivIndex& a, const DerivIndex& b);
  friend bool operator==(const DerivIndex&, const DerivIndex&) = default;
};

// Graded lex order: lower total order first, then by slot exponents.
struct DerivOrder {
  bool operator()(const DerivIndex& a, const DerivIndex& b) const;
};

// Differential operator sum_a p_a(x, y) d^a with matrix-valued polynomial
// coefficients, normal ordered (coefficients left of derivatives). All
// coefficients live in the standard ring of dimension n.
class WeylOperator {
 public:
  using Terms = std::map<DerivIndex, PolyMatrix, DerivOrder>;

  WeylOperator(int n, std::size_t rows, std::size_t cols);

  static WeylOperator multiplication(int n, PolyMatrix coeff);
  static WeylOperator identity(int n, std::size_t dim);
  static WeylOperator monomial(int n, const DerivIndex& d, PolyMatrix coeff);
  // sum_j d^2/dx_j^2 (or y) times the identity.
  static WeylOperator laplacian_x(int n, std::size_t dim);
  static WeylOperator laplacian_y(int n, std::size_t dim);
  // sum_j rho(e_j) d/dx_j; with dual set, rho'(e_j).
  static WeylOperator dirac_x(int n, bool dual = false);

  int n() const { return n_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  PolyMatrix coefficient(const DerivIndex& d) const;
  unsigned order() const;
  unsigned order_x() const;
  unsigned order_y() const;

  void add_term(const DerivIndex& d, const PolyMatrix& coeff);

  WeylOperator operator-() const;
  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(const CPoly& c, const WeylOperator& op);
  // Post-composition with a constant or x-dependent matrix on the left.
  friend WeylOperator operator*(const PolyMatrix& m, const WeylOperator& op);
  friend bool operator==(const WeylOperator& a, const WeylOperator& b);

  WeylOperator map_coefficients(const std::function<CPoly(const CPoly&)>& f) const;
  // Coefficients with y replaced by x (restriction to the diagonal).
  WeylOperator restrict_diagonal() const;
  // True when no coefficient depends on x or y.
  bool has_constant_coefficients() const;

  // Exact application to a matrix of polynomials (cols x k).
  PolyMatrix apply(const PolyMatrix& f) const;

  std::string str() const;

 private:
  int n_;
  std::size_t rows_;
  std::size_t cols_;
  Terms terms_;
};

// a o b by the Leibniz rule.
WeylOperator compose(const WeylOperator& a, const WeylOperator& b);
// restrict_diagonal(a o b), computed without forming a o b: only restricted
// coefficients of a and restricted derivatives of b's coefficients are used.
WeylOperator compose_restricted(const WeylOperator& a, const WeylOperator& b);
WeylOperator commutator(const WeylOperator& a, const WeylOperator& b);

// Operator in x only, tensored with the identity of size `other` acting on
// the second factor (kron(coeff, I)).
WeylOperator lift_first(const WeylOperator& op, std::size_t other);
// Operator in x, moved to the y variables and tensored on the left with the
// identity of size `other` (kron(I, coeff)).
WeylOperator lift_second(const WeylOperator& op, std::size_t other);
// Operator in x acting on f(x) = F(x, x): every d/dx_j becomes
// d/dx_j + d/dy_j, coefficients unchanged.
WeylOperator lift_diagonal(const WeylOperator& op);

// symb(D)(x, y, xi, zeta) = sum p_a (i xi)^alpha (i zeta)^beta.
PolyMatrix weyl_symbol(const WeylOperator& op);
WeylOperator symbol_to_weyl(int n, const PolyMatrix& symbol);

// Embeds a constant matrix into the polynomial ring of dimension n.
PolyMatrix constant_matrix(int n, const CMatrix& m);
PolyMatrix scalar_matrix(std::size_t dim, const CPoly& c);

}  // namespace sbdo
