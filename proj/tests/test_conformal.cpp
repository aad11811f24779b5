#include "doctest.h"
#include "gen.hpp"

#include "sbdo/rep.hpp"

using namespace sbdo;
using namespace sbdo::conformal;

namespace {

using QV = std::vector<Rational>;

QV scaled(const QV& v, const Rational& c) {
  QV out;
  for (const auto& x : v) out.push_back(x * c);
  return out;
}

Rational norm2(const QV& v) {
  Rational s(0);
  for (const auto& x : v) s += x * x;
  return s;
}

// Independent evaluation of dpi on a polynomial test function, for the
// anchor examples: returns the operator applied to f, as a scalar polynomial.
CPoly apply_scalar(const WeylOperator& op, const CPoly& f) {
  PolyMatrix F(1, 1);
  F(0, 0) = f;
  return op.apply(F)(0, 0);
}

}  // namespace

TEST_CASE("standard elements") {
  for (int n = 1; n <= 4; ++n) {
    testing::Gen g(static_cast<std::uint64_t>(n));
    const QV z = g.rational_vector(n), z2 = g.rational_vector(n);
    CHECK(nbar(n, z) * nbar(n, scaled(z, Rational(-1))) == one<Rational>(n));
    QV sum;
    for (int j = 0; j < n; ++j) sum.push_back(z[static_cast<std::size_t>(j)] + z2[static_cast<std::size_t>(j)]);
    CHECK(nbar(n, z) * nbar(n, z2) == nbar(n, sum));
    CHECK(n_elem(n, z) * n_elem(n, scaled(z, Rational(-1))) == one<Rational>(n));
    CHECK(a_elem(n, Rational(2)) * a_elem(n, Rational(3, 5)) == a_elem(n, Rational(6, 5)));
    const auto wv = w<Rational>(n);
    CHECK(wv * H<Rational>(n) * wv.alpha() == -H<Rational>(n));
    CHECK(wv * wv.alpha() == one<Rational>(n));
    CHECK_THROWS_AS(a_elem(n, Rational(-1)), DomainError);
  }
}

TEST_CASE("group actions on R^n") {
  testing::Gen g(21);
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 4; ++n) {
    for (int it = 0; it < 10; ++it) {
      const QV x = g.rational_vector(n), v = g.rational_vector(n);
      QV xv;
      for (int j = 0; j < n; ++j) xv.push_back(x[static_cast<std::size_t>(j)] + v[static_cast<std::size_t>(j)]);
      CHECK(conformal_action(nbar(n, v), x, n) == xv);
      const Rational r = g.positive_rational();
      CHECK(conformal_action(a_elem(n, r), x, n) == scaled(x, (r * r).inverse()));
      const QMultivector m = random_spin_element(n, rng);
      // m x m^{-1} computed in the Euclidean algebra
      const auto sig = Signature::euclidean(n);
      const QMultivector mx = m * QMultivector::vector(sig, x, 1) * m.alpha();
      QV expect;
      for (int j = 1; j <= n; ++j) expect.push_back(mx.coefficient(Blade{1} << (j - 1)));
      CHECK(conformal_action(embed_euclidean(m, n), x, n) == expect);
    }
  }
}

TEST_CASE("the action is a homomorphism where defined") {
  std::mt19937_64 rng(17);
  testing::Gen g(9);
  for (int n = 1; n <= 3; ++n)
    for (int it = 0; it < 20; ++it) {
      const QMultivector a = gn_compose(random_gn_factors(n, rng)) * (it % 3 == 0 ? w<Rational>(n) : one<Rational>(n));
      const QMultivector b = gn_compose(random_gn_factors(n, rng));
      const QV x = g.rational_vector(n);
      try {
        const QV bx = conformal_action(b, x, n);
        CHECK(conformal_action(a * b, x, n) == conformal_action(a, bx, n));
      } catch (const ActionUndefined&) {
      }
    }
}

TEST_CASE("GN factorization round trip") {
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 4; ++n)
    for (int it = 0; it < 50; ++it) {
      const auto f = random_gn_factors(n, rng);
      const auto g = gn_compose(f);
      CHECK(g * g.alpha() == one<Rational>(n));
      const auto h = gn_factorize(g, n);
      CHECK(h.v == f.v);
      CHECK(h.u == f.u);
      CHECK(h.r == f.r);
      CHECK(h.m == f.m);
    }
}

TEST_CASE("w^{-1} nbar_x factorization for rational |x|") {
  std::mt19937_64 rng(3);
  testing::Gen g(4);
  for (int n = 1; n <= 4; ++n)
    for (int it = 0; it < 10; ++it) {
      const QV x = scaled(random_unit_vector(n, rng), g.positive_rational());
      const Rational len = *norm2(x).exact_sqrt(), len2 = norm2(x);
      QV xp = x;
      xp[0] = -xp[0];  // x' = e1 x e1
      const auto lhs = w<Rational>(n).alpha() * nbar(n, x);
      const QMultivector m = e<Rational>(n, 1) * point(n, x) * (-len.inverse());
      const auto rhs = nbar(n, scaled(xp, len2.inverse())) * m * a_elem(n, len) * n_elem(n, scaled(x, len2.inverse()));
      CHECK(lhs == rhs);
      const auto f = gn_factorize(lhs, n);
      CHECK(f.r == len);
      CHECK(embed_euclidean(f.m, n) == m);
      CHECK(f.v == scaled(xp, len2.inverse()));
    }
  // n = 2, x = (3/5, 4/5)
  const QV x{Rational(3, 5), Rational(4, 5)};
  const auto f = gn_factorize(w<Rational>(2).alpha() * nbar(2, x), 2);
  CHECK(f.r == Rational(1));
  CHECK(f.u == x);
  CHECK(f.v == QV{Rational(-3, 5), Rational(4, 5)});
}

TEST_CASE("elements outside the cell or needing a square root") {
  for (int n = 1; n <= 3; ++n) CHECK_THROWS_AS(gn_factorize(w<Rational>(n), n), NotInDenseCell);
  // (1 + e1e2)/sqrt2 * a(sqrt2) has rational coefficients but r^2 = 2
  const QMultivector g = (one<Rational>(2) + e<Rational>(2, 1) * e<Rational>(2, 2)) *
                         (one<Rational>(2) * Rational(3) + H<Rational>(2)) * Rational(1, 4);
  CHECK(g * g.alpha() == one<Rational>(2));
  CHECK_THROWS_AS(gn_factorize(g, 2), FieldExtensionRequired);
  CHECK_THROWS_AS(conformal_action(w<Rational>(2), QV{Rational(0), Rational(0)}, 2), ActionUndefined);
}

TEST_CASE("bivector decomposition") {
  const int n = 3;
  const auto d = decompose_bivector(H<Rational>(n), n);
  CHECK(d.a == Rational(1));
  CHECK(d.m.is_zero());
  const auto d2 = decompose_bivector(e<Rational>(n, 1) * e<Rational>(n, 2), n);
  CHECK(d2.m == QMultivector::blade(Signature::euclidean(n), 0b11));
  const auto d3 = decompose_bivector(e<Rational>(n, 1) * e<Rational>(n, 0), n);
  CHECK(d3.nbar[0] == Rational(1, 2));
  CHECK(d3.n[0] == Rational(1, 2));
  for (const auto& X : lie_algebra_basis(n)) CHECK(recompose_bivector(decompose_bivector(X, n), n) == X);
  CHECK_THROWS_AS(decompose_bivector(one<Rational>(n), n), DomainError);
}

TEST_CASE("w rho is equivalent to rho") {
  for (int n = 2; n <= 4; ++n) {
    const auto& S = clifford_module(n);
    const auto sig = Signature::euclidean(n);
    const CMatrix minus_e1 = S.gamma(1) * GaussianRational(-1);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const QMultivector m = QMultivector::generator(sig, i) * QMultivector::generator(sig, j);
        const auto wv = w<Rational>(n);
        const QMultivector conj = project_euclidean(wv.alpha() * embed_euclidean(m, n) * wv, n);
        CHECK(minus_e1 * S.rho(conj) == S.rho(m) * minus_e1);
      }
  }
}

TEST_CASE("group element parser") {
  CHECK(parse_group_element(2, "nbar(1/2,0) * a(2) m:e1e2 n(0,1)") ==
        nbar(2, QV{Rational(1, 2), Rational(0)}) * a_elem(2, Rational(2)) * e<Rational>(2, 1) * e<Rational>(2, 2) *
            n_elem(2, QV{Rational(0), Rational(1)}));
  CHECK(parse_group_element(1, "w") == w<Rational>(1));
  CHECK_THROWS_AS(parse_group_element(2, "nbar(1)"), ParseError);
  CHECK_THROWS_AS(parse_group_element(2, "m:e1"), ParseError);
  CHECK_THROWS_AS(parse_group_element(2, "q(1)"), ParseError);
  CHECK_THROWS_AS(parse_group_element(2, ""), ParseError);
}

TEST_CASE("M representations respect brackets") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<MRep> reps{MRep::spinor(n), MRep::dual_spinor(n)};
    for (int k = 0; k <= n; ++k) reps.push_back(MRep::k_form(n, k));
    const auto sig = Signature::euclidean(n);
    std::vector<QMultivector> basis;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) basis.push_back(QMultivector::generator(sig, i) * QMultivector::generator(sig, j));
    for (const auto& rep : reps)
      for (const auto& X : basis)
        for (const auto& Y : basis) CHECK(rep.action(bracket(X, Y)) == commutator(rep.action(X), rep.action(Y)));
  }
}

TEST_CASE("anchors of the infinitesimal action") {
  for (int n = 1; n <= 3; ++n) {
    const auto& R = StandardRing::get(n);
    const CPoly lambda = R.var(R.lambda());
    const MRep rep = MRep::trivial(n);
    for (int j = 1; j <= n; ++j) {
      const QMultivector X = e<Rational>(n, j) * u_plus<Rational>(n) * Rational(1, 2);
      WeylOperator expect(n, 1, 1);
      expect.add_term(DerivIndex::dx(j), scalar_matrix(1, CPoly(R.vars(), GaussianRational(-1))));
      CHECK(infinitesimal_action(X, rep, lambda) == expect);
    }
    WeylOperator h(n, 1, 1);
    h.add_term(DerivIndex{}, scalar_matrix(1, lambda * GaussianRational(2)));
    for (int j = 1; j <= n; ++j) h.add_term(DerivIndex::dx(j), scalar_matrix(1, R.var(R.x(j)) * GaussianRational(2)));
    CHECK(infinitesimal_action(H<Rational>(n), rep, lambda) == h);
  }
  const auto& R = StandardRing::get(1);
  const CPoly x = R.var(R.x(1)), lambda = R.var(R.lambda());
  const auto op = infinitesimal_action(e<Rational>(1, 1) * u_minus<Rational>(1) * Rational(1, 2), MRep::spinor(1), lambda);
  // x^2 d/dx + 2 lambda x applied to x^3 gives (3 + 2 lambda) x^4
  CHECK(apply_scalar(op, x * x * x) == x * x * x * x * (lambda * GaussianRational(2) + CPoly(GaussianRational(3))));
  WeylOperator expect(1, 1, 1);
  expect.add_term(DerivIndex{}, scalar_matrix(1, lambda * x * GaussianRational(2)));
  expect.add_term(DerivIndex::dx(1), scalar_matrix(1, x * x));
  CHECK(op == expect);
}

TEST_CASE("infinitesimal action agrees with the jet oracle") {
  for (int n = 1; n <= 3; ++n) {
    const auto& R = StandardRing::get(n);
    const CPoly lambda = R.var(R.lambda());
    std::vector<MRep> reps{MRep::spinor(n), MRep::dual_spinor(n)};
    for (int k = 0; k <= n; ++k) reps.push_back(MRep::k_form(n, k));
    for (const auto& rep : reps)
      for (const auto& X : lie_algebra_basis(n)) CHECK(infinitesimal_action(X, rep, lambda) == infinitesimal_action_jet(X, rep, lambda));
  }
}

TEST_CASE("the infinitesimal action is a Lie algebra homomorphism") {
  for (int n = 1; n <= 3; ++n) {
    const auto& R = StandardRing::get(n);
    const CPoly lambda = R.var(R.lambda());
    for (const auto& rep : {MRep::spinor(n), MRep::dual_spinor(n), MRep::k_form(n, n / 2 + 1 > n ? n : n / 2 + 1)}) {
      const auto basis = lie_algebra_basis(n);
      std::vector<WeylOperator> ops;
      for (const auto& X : basis) ops.push_back(infinitesimal_action(X, rep, lambda));
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
          CHECK(commutator(ops[a], ops[b]) == infinitesimal_action(bracket(basis[a], basis[b]), rep, lambda));
    }
  }
}
