#include "doctest.h"
#include "gen.hpp"

#include <cmath>

#include "sbdo/source.hpp"

using namespace sbdo;

namespace {

CPoly c(int n, long long v) { return CPoly(StandardRing::get(n).vars(), GaussianRational(v)); }

CPoly dist2(int n) {
  const auto& R = StandardRing::get(n);
  CPoly r = c(n, 0);
  for (int j = 1; j <= n; ++j) r += (R.var(R.x(j)) - R.var(R.y(j))) * (R.var(R.x(j)) - R.var(R.y(j)));
  return r;
}

std::size_t tensor_dim(int n) { return clifford_module(n).dim() * clifford_module(n).dim(); }

bool covariant(const WeylOperator& op, int dl, int dm) {
  for (const auto& X : lie_algebra_basis(op.n()))
    if (!covariance_residual(op, X, dl, dm).is_zero()) return false;
  return true;
}

bool sbdo_covariant(const WeylOperator& B, int k, int m) {
  for (const auto& X : lie_algebra_basis(B.n()))
    if (!sbdo_covariance_residual(B, X, k, m).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("source operator F: coefficients and symbol") {
  for (int n = 1; n <= 3; ++n) {
    const auto& R = StandardRing::get(n);
    const CPoly s = R.var(R.s());
    const std::size_t D = tensor_dim(n);
    const WeylOperator F = build_F(n);
    CHECK(F.coefficient(DerivIndex::dx(1, 2) + DerivIndex::dy(1, 2)) == scalar_matrix(D, dist2(n)));
    const CPoly k7 = (s + c(n, 1)) * (s + c(n, n + 1));
    CHECK(F.coefficient(DerivIndex::dy(1, 2)) == scalar_matrix(D, k7));
    const PolyMatrix symbol = weyl_symbol(F);
    CHECK(symbol == printed_f_symbol(n));
    // Symbol coefficient of zeta_1^2 with no xi: -(s+1)(s+n+1) Id.
    const PolyMatrix zeta_part = symbol.map([&](const CPoly& p) {
      CPoly q = p;
      for (int j = 1; j <= n; ++j) q = q.substitute(R.xi(j), c(n, 0));
      for (int j = 2; j <= n; ++j) q = q.substitute(R.zeta(j), c(n, 0));
      return q.derivative(R.zeta(1)).derivative(R.zeta(1)).substitute(R.zeta(1), c(n, 0)) * GaussianRational(Rational(1, 2));
    });
    CHECK(zeta_part == scalar_matrix(D, -k7));
  }
}

TEST_CASE("main identity in the Riesz symbol ring") {
  for (int n = 1; n <= 2; ++n) {
    const auto& R = StandardRing::get(n);
    const QRatFunc one(QPoly(R.vars(), Rational(1)));
    CHECK(main_identity_holds(n, one));
    CHECK_FALSE(main_identity_holds(n, one * QRatFunc(Rational(2))));
    // Normalized symbols carry the constant 1; c(s,t) is the kernel-level constant.
    CHECK_FALSE(main_identity_holds(n, c_st(n)));
    CHECK(kernel_conversion_factor(n) == c_st(n));
    CHECK(main_identity_holds(n, c_st(n) / kernel_conversion_factor(n)));
  }
}

TEST_CASE("Gamma constants") {
  for (int n = 1; n <= 4; ++n) {
    const auto& R = StandardRing::get(n);
    const QPoly s = R.var<Rational>(R.s()), one(R.vars(), Rational(1));
    CHECK(clifford_riesz_constant(n).shift_ratio(R.s(), 2) == QRatFunc(-(s + one) * (s + one * Rational(n + 1))));
    CHECK(scalar_riesz_constant(n).shift_ratio(R.s(), 2) ==
          QRatFunc(-(s + one * Rational(n)) * (s + one * Rational(2))));
    const auto pts = riesz_sample_points(n);
    CHECK(pts.size() == 20);
    for (double x : pts) {
      const auto r = riesz_constant_check(x, n);
      CHECK(r.ratio_residual < 1e-9);
      CHECK(r.consistency_residual < 1e-9);
      CHECK(r.scalar_residual < 1e-9);
    }
  }
  CHECK(riesz_constant_check(0.3, 2).ratio_residual < 1e-9);
  CHECK(riesz_constant_check(-0.7, 1).consistency_residual < 1e-9);
  CHECK_THROWS_AS(clifford_riesz_value(-3.0, 2), DomainError);
  CHECK_THROWS_AS(scalar_riesz_value(2.0, 1), DomainError);
  // c_1 for n = 1 is 4 sqrt(pi) / Gamma(-1/2) = -2.
  CHECK(std::abs(scalar_riesz_value(1.0, 1).real() + 2.0) < 1e-12);
}

TEST_CASE("source operator E") {
  for (int n = 1; n <= 3; ++n) {
    const auto& R = StandardRing::get(n);
    const CPoly l = R.var(R.lambda()), m = R.var(R.mu());
    const CPoly a = l * GaussianRational(2) - c(n, n - 1), b = m * GaussianRational(2) - c(n, n - 1);
    const std::size_t D = tensor_dim(n);
    const WeylOperator E = build_E(n);
    CHECK(E.coefficient(DerivIndex::dy(1, 2)) == scalar_matrix(D, a * (l * GaussianRational(2) + c(n, 1))));
    CHECK(E.coefficient(DerivIndex::dx(1, 2)) == scalar_matrix(D, b * (m * GaussianRational(2) + c(n, 1))));

    // Every printed coefficient equals the substituted F coefficient.
    const auto F = F_coefficients(n), P = printed_E_coefficients(n);
    const CPoly sv = l * GaussianRational(-2) - c(n, 2), tv = m * GaussianRational(-2) - c(n, 2);
    for (int i = 1; i <= 11; ++i)
      CHECK(F.c[i].substitute(R.s(), sv).substitute(R.t(), tv) == P.c[i]);
    CHECK(P.c[8] == a * b * GaussianRational(-2));
    CHECK(P.c[2] == a * GaussianRational(2));

    CHECK(depends_only_on_difference(E));
    CHECK(E.restrict_diagonal().has_constant_coefficients());
    CHECK(E.order_x() == 2);
    CHECK(E.order_y() == 2);

    // Acting on a constant section only the order-0 part survives.
    PolyMatrix v(D, 1);
    v(0, 0) = c(n, 1);
    v(D - 1, 0) = c(n, 3);
    CHECK(E.apply(v) == E.coefficient(DerivIndex{}) * v);
  }
}

TEST_CASE("parameter shifts and specialization commute") {
  testing::Gen g(23);
  const WeylOperator E = build_E(2);
  for (int trial = 0; trial < 3; ++trial) {
    const Rational l = g.rational(), m = g.rational();
    CHECK(specialize(shift_parameters(E, 1, 2), l, m) == specialize(E, l + Rational(1), m + Rational(2)));
  }
}

TEST_CASE("iterated source operators") {
  CHECK(build_E_power(1, 1) == build_E(1));
  CHECK_THROWS_AS(build_E_power(1, 0), DomainError);
  for (int n = 1; n <= 2; ++n)
    for (int m = 2; m <= (n == 1 ? 3 : 2); ++m) {
      const WeylOperator Em = build_E_power(n, m);
      CHECK(Em.order_x() == static_cast<unsigned>(2 * m));
      CHECK(Em.order_y() == static_cast<unsigned>(2 * m));
      CHECK(depends_only_on_difference(Em));
    }
}

TEST_CASE("SBDO family: shape, homogeneity and the B_0 closed form") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int m = 1; m <= 2; ++m) {
        const WeylOperator B = build_B(n, k, m);
        CHECK(B.rows() == binomial(n, k));
        CHECK(B.has_constant_coefficients());
        for (const auto& [d, coeff] : B.terms()) CHECK(d.order() == static_cast<unsigned>(2 * m));
      }
  for (int n = 1; n <= 3; ++n) {
    const auto& R = StandardRing::get(n);
    const CPoly m = R.var(R.mu());
    const WeylOperator B0 = build_B(n, 0, 1);
    const PolyMatrix psi0 = constant_matrix(n, clifford_module(n).psi(0));
    CHECK(B0.coefficient(DerivIndex::dx(1, 2)) == psi0 * ((m * GaussianRational(2) - c(n, n - 1)) * (m * GaussianRational(2) + c(n, 1))));
    CHECK(B0 == printed_B0(n, B0Reading::Corrected));
    CHECK_FALSE(B0 == printed_B0(n, B0Reading::Literal));
  }
  CHECK_THROWS_AS(build_B(2, 3, 1), DomainError);
  CHECK_THROWS_AS(project_restricted(build_M(2), 0), InvariantViolation);
}

TEST_CASE("covariance of M and E") {
  for (int n = 1; n <= 2; ++n) {
    CHECK(covariant(build_M(n), -1, -1));
    CHECK(covariant(build_E(n), 1, 1));
    CHECK_FALSE(covariant(build_E(n), 1, 0));
    CHECK_FALSE(covariant(build_E_printed(n), 1, 1));
  }
}

TEST_CASE("covariance of the SBDO family") {
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= n; ++k)
      for (int m = 1; m <= 2; ++m) {
        const WeylOperator B = build_B(n, k, m);
        CHECK(sbdo_covariant(B, k, m));
        CHECK_FALSE(sbdo_covariant(B, k, m + 1));
      }
}

TEST_CASE("recurrence") {
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(recurrence_holds(n, k, 2));
      CHECK_FALSE(recurrence_holds(n, k, 2, false));
    }
  CHECK(recurrence_holds(1, 0, 3));
  CHECK_THROWS_AS(recurrence_holds(1, 0, 1), DomainError);
}

TEST_CASE("Rankin-Cohen reduction") {
  const auto kappa = proportionality(build_B(1, 0, 1), printed_rankin_cohen());
  REQUIRE(kappa.has_value());
  CHECK(*kappa == CRatFunc(GaussianRational(1)));
  CHECK_FALSE(proportionality(build_B(1, 0, 1), shift_parameters(printed_rankin_cohen(), 1, 0)).has_value());
}

TEST_CASE("discrepancy ledger") {
  for (int n = 1; n <= 2; ++n) {
    const auto rep = discrepancy_ledger(n);
    CHECK(rep.e_diff_is_fifth_term);
    CHECK(rep.e_printed_fails_covariance);
    CHECK(rep.e_derived_passes_covariance);
    CHECK(rep.b0_corrected_matches);
    CHECK(rep.b0_literal_diff_is_typo);
    CHECK(rep.matches_expected());
    bool saw_e = false, saw_b = false;
    for (const auto& row : rep.rows) {
      saw_e |= row.object == "E";
      saw_b |= row.object == "B0";
      CHECK(row.derived != row.printed);
    }
    CHECK(saw_e);
    CHECK(saw_b);
  }
}
