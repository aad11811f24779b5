#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "sbdo/weyl.hpp"

namespace sbdo {

// Formal symbols sum_{a,b} P_{a,b}(x, y, xi, zeta) |xi|^{c+a} |zeta|^{d+b}
// with matrix polynomial P and formal exponents c, d (polynomials in s, t).
// A block without a base exponent carries no power of the norm, and its
// offset is always 0.
class RieszSymbol {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, PolyMatrix>;
  enum class Block { Xi, Zeta };

  RieszSymbol(int n, std::size_t rows, std::size_t cols, std::optional<CPoly> base_xi,
              std::optional<CPoly> base_zeta);

  // A polynomial symbol (no norm powers).
  static RieszSymbol polynomial(int n, const PolyMatrix& p);
  // |v|^c for v = xi or zeta, as a 1x1 symbol.
  static RieszSymbol norm_power(int n, const CPoly& c, Block block);
  // |v|^{c-1} rho(v), or rho'(v) when dual is set.
  static RieszSymbol clifford_riesz(int n, const CPoly& c, Block block, bool dual = false);

  int n() const { return n_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::optional<CPoly>& base(Block b) const { return b == Block::Xi ? base_xi_ : base_zeta_; }
  const Terms& terms() const { return terms_; }

  void add_term(const Key& k, const PolyMatrix& p);

  RieszSymbol operator-() const;
  RieszSymbol& operator+=(const RieszSymbol& o);
  RieszSymbol& operator-=(const RieszSymbol& o);
  friend RieszSymbol operator+(RieszSymbol a, const RieszSymbol& b) { return a += b; }
  friend RieszSymbol operator-(RieszSymbol a, const RieszSymbol& b) { return a -= b; }
  friend RieszSymbol operator*(const PolyMatrix& p, const RieszSymbol& r);
  friend RieszSymbol operator*(const CPoly& c, const RieszSymbol& r);

  // Every term rewritten at the lowest offset of each block, so that a single
  // key remains. Offsets of mixed parity in one block raise DomainError.
  RieszSymbol collected() const;
  bool is_zero() const;
  friend bool operator==(const RieszSymbol& a, const RieszSymbol& b) { return (a - b).is_zero(); }

  std::string str() const;

 private:
  int n_;
  std::size_t rows_;
  std::size_t cols_;
  std::optional<CPoly> base_xi_;
  std::optional<CPoly> base_zeta_;
  Terms terms_;

  friend RieszSymbol aligned(const RieszSymbol& a, const RieszSymbol& b);
};

// a (x) b with a in the xi block only and b in the zeta block only.
RieszSymbol tensor(const RieszSymbol& a, const RieszSymbol& b);
// Exact d/dxi_j (or d/dzeta_j) in the graded ring: d_j |v|^c = c v_j |v|^{c-2}.
RieszSymbol riesz_diff(const RieszSymbol& r, RieszSymbol::Block block, int j);
RieszSymbol riesz_laplacian(const RieszSymbol& r, RieszSymbol::Block block);

// symb(D o K) = symb(D) symb(K).
RieszSymbol symb_conv_then_diff(const WeylOperator& d, const RieszSymbol& k);
// symb(K o p) = sum_alpha (1/alpha!) d^alpha p (-i d_xi)^alpha symb(K), over
// both variable blocks, for a scalar polynomial p in x and y.
RieszSymbol symb_conv_then_mult(const RieszSymbol& k, const CPoly& p);
// Matrix-valued p is rejected unless it is 1x1.
RieszSymbol symb_conv_then_mult(const RieszSymbol& k, const PolyMatrix& p);

// rho(v) = sum_j v_j E_j as a polynomial matrix (dual: rho'(v)).
PolyMatrix rho_of_variables(int n, RieszSymbol::Block block, bool dual = false);

}  // namespace sbdo
