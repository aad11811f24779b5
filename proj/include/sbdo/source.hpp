#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbdo/constants.hpp"
#include "sbdo/rep.hpp"
#include "sbdo/riesz.hpp"

namespace sbdo {

// Operators on functions of (x, y) with values in S (x) S'. The tensor index
// of v_a (x) w'_b is a * dim S + b. Formal parameters s, t, lambda, mu are
// indeterminates of the standard ring.

// Coefficients of the eleven-term family
//   c1 |x-y|^2 Dx(x)Dy + c2 sum (x_j-y_j) d_xj (x) Dy + c3 sum (y_j-x_j) Dx (x) d_yj
//   + c4 rho(x-y) Dirac_x (x) Dy + c5 Dx (x) rho'(+-(y-x)) Dirac'_y
//   + c6 Dx (x) Id + c7 Id (x) Dy + c8 sum d_xj (x) d_yj
//   + c9 sum d_xj (x) rho'(e_j) Dirac'_y + c10 sum rho(e_j) Dirac_x (x) d_yj
//   + c11 sum rho(e_j) Dirac_x (x) rho'(e_j) Dirac'_y,
// where Dx, Dy are the Laplacians. With fifth_uses_x_minus_y the fifth term
// carries rho'(x-y) instead of rho'(y-x).
struct SourceCoefficients {
  std::vector<CPoly> c;  // c[1] .. c[11]; c[0] unused
  bool fifth_uses_x_minus_y = false;
};

WeylOperator assemble_source(int n, const SourceCoefficients& k);
// Only the listed term (1..11) of the family.
WeylOperator source_term(int n, const SourceCoefficients& k, int term);

SourceCoefficients F_coefficients(int n);
// The closed form in lambda, mu exactly as printed (fifth term with rho'(x-y)).
SourceCoefficients printed_E_coefficients(int n);

WeylOperator build_F(int n);
// f_{s,t} assembled from its printed terms as a matrix polynomial in x, y, xi, zeta.
PolyMatrix printed_f_symbol(int n);
// Multiplication by |x-y|^2.
WeylOperator build_M(int n);
// F with s = -2 lambda - 2, t = -2 mu - 2.
WeylOperator build_E(int n);
WeylOperator build_E_printed(int n);
// lambda -> lambda + dl, mu -> mu + dm in every coefficient.
WeylOperator shift_parameters(const WeylOperator& op, int dl, int dm);
// Substitutes rational values for lambda and mu.
WeylOperator specialize(const WeylOperator& op, const std::optional<Rational>& lambda,
                        const std::optional<Rational>& mu);
// E^(m) = E_{lambda+m-1, mu+m-1} o ... o E_{lambda, mu}.
WeylOperator build_E_power(int n, int m);
// B^(m)_k = Psi^(k) restrict(E^(m)): constant coefficients, C(n,k) rows.
// Raises InvariantViolation if the restriction is not constant.
WeylOperator build_B(int n, int k, int m);
// Psi^(k) o restrict(op), with the constancy check.
WeylOperator project_restricted(const WeylOperator& restricted, int k);

// True when every coefficient is annihilated by sum_j (d_xj + d_yj).
bool depends_only_on_difference(const WeylOperator& op);

// Main identity, symbol level.
RieszSymbol main_identity_lhs(int n);  // symb((R_s (x) R'_t) o M)
RieszSymbol main_identity_rhs(int n);  // symb(F_{s,t} o (R_{s+2} (x) R'_{t+2}))
// c(s,t) = 1 / ((s+1)(s+n+1)(t+1)(t+n+1)).
QRatFunc c_st(int n);
// lhs == constant * rhs in the Riesz ring, constant in Q(s,t).
bool main_identity_holds(int n, const QRatFunc& constant);
// The ratio (Clifford constant at s) (at t) / (at s+2) (at t+2) from the
// functional equation; converting the normalized identity to kernels
// multiplies its constant by this.
QRatFunc kernel_conversion_factor(int n);
// d(lambda, mu) = 1 / ((2 lambda-n+1)(2 lambda+1)(2 mu-n+1)(2 mu+1)), the
// normalization of E; reported next to emitted operators, never applied.
QRatFunc d_lambda_mu(int n);

// d pi_lambda(X) (x) id + id (x) d pi'_mu(X) on S (x) S'.
WeylOperator tensor_action(const QMultivector& X, int n, const CPoly& lambda, const CPoly& mu);
// op o action(lambda, mu) - action(lambda + dl, mu + dm) o op.
WeylOperator covariance_residual(const WeylOperator& op, const QMultivector& X, int dl, int dm);
// For a constant-coefficient B into k-forms of weight lambda + mu + 2m:
// restrict(B o action(lambda, mu)) - restrict(d pi_{k; nu}(X) o B).
WeylOperator sbdo_covariance_residual(const WeylOperator& B, const QMultivector& X, int k, int m);

// B^(m)_{k; lambda, mu} against B^(m-1)_{k; lambda+1, mu+1} o E_{lambda, mu}
// (shifted = false uses B^(m-1)_{k; lambda, mu} instead).
bool recurrence_holds(int n, int k, int m, bool shifted = true);

enum class B0Reading { Literal, Corrected };
// B^(1)_{0; lambda, mu} as printed, with the third term group read literally
// (a constant plus an unweighted sum) or with the sum weighted by the constant.
WeylOperator printed_B0(int n, B0Reading reading);
// 2mu(2mu+1) d_x^2 + 2 lambda(2 lambda+1) d_y^2 - 2(2 lambda+1)(2 mu+1) d_x d_y.
WeylOperator printed_rankin_cohen();

// a == kappa * b for one rational function kappa in lambda, mu; returns kappa.
std::optional<CRatFunc> proportionality(const WeylOperator& a, const WeylOperator& b);

// One row of the discrepancy ledger.
struct Discrepancy {
  std::string object;  // "E" or "B0"
  std::string term;    // derivative index and entry
  std::string derived;
  std::string printed;
};
struct DiscrepancyReport {
  std::vector<Discrepancy> rows;
  bool e_diff_is_fifth_term = false;      // substituted - printed E is exactly the fifth-term sign
  bool e_printed_fails_covariance = false;
  bool e_derived_passes_covariance = false;
  bool b0_corrected_matches = false;      // derived B0 == printed with the weighted sum
  bool b0_literal_diff_is_typo = false;   // literal diff confined to the third term group
  bool matches_expected() const {
    return e_diff_is_fifth_term && e_printed_fails_covariance && e_derived_passes_covariance && b0_corrected_matches &&
           b0_literal_diff_is_typo;
  }
};
DiscrepancyReport discrepancy_ledger(int n);

}  // namespace sbdo
