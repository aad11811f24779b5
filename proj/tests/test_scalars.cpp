#include "doctest.h"
#include "gen.hpp"

#include "sbdo/jet.hpp"
#include "sbdo/ratfunc.hpp"
#include "sbdo/ring.hpp"

using namespace sbdo;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK(Rational(6, -3).str() == "-2");
  CHECK(Rational::parse(" 10/4 ") == Rational(5, 2));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
  CHECK(*Rational(9, 4).exact_sqrt() == Rational(3, 2));
  CHECK_FALSE(Rational(2).exact_sqrt().has_value());
}

TEST_CASE("rational overflow promotes to GMP and back") {
  Rational big(INT64_MAX);
  Rational sq = big * big;
  CHECK(sq.str() == "85070591730234615847396907784232501249");
  CHECK(sq / big == big);
  Rational min(INT64_MIN);
  CHECK((-min).str() == "9223372036854775808");
  CHECK(min + Rational(1) == Rational(INT64_MIN + 1));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational field axioms on random samples") {
  testing::Gen g(11);
  for (int it = 0; it < 500; ++it) {
    Rational a = g.rational(), b = g.rational(), c = g.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("gaussian rationals") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  GaussianRational z(Rational(1, 2), Rational(-3, 4));
  CHECK(z.str() == "1/2-3/4*i");
  CHECK(GaussianRational(0, 1).str() == "i");
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK(z.conj().conj() == z);
  GaussianRational w(Rational(2), Rational(5));
  CHECK((z * w).conj() == z.conj() * w.conj());
}

TEST_CASE("jets") {
  using J = Jet<Rational>;
  CHECK(J(1, 3) * J(2, 5) == J(2, 11));
  CHECK(J::epsilon() * J::epsilon() == J(0));
  CHECK(J(2, 1) * J(2, 1).inverse() == J(1));
}

TEST_CASE("polynomial derivative") {
  auto vars = std::make_shared<const VarTable>(std::vector<std::string>{"x", "y"});
  QPoly x = QPoly::variable(vars, "x"), y = QPoly::variable(vars, "y");
  CHECK(QPoly(x * x * y).derivative("x") == QPoly(Rational(2)) * x * y);
  CHECK((x * x).derivative("y").is_zero());
  CHECK_THROWS_AS(x.derivative("z"), DomainError);
  const auto& R = StandardRing::get(2);
  QPoly s2 = R.var<Rational>(R.x(1)) * R.var<Rational>(R.x(1)) + R.var<Rational>(R.x(2)) * R.var<Rational>(R.x(2));
  CHECK(s2.derivative("x1") == R.var<Rational>(R.x(1)) * Rational(2));
  CHECK((x * x * y - y + Rational(3, 2)).str() == "x^2*y - y + 3/2");
}

TEST_CASE("polynomial Leibniz rule and evaluation on random samples") {
  auto vars = std::make_shared<const VarTable>(std::vector<std::string>{"a", "b", "c"});
  testing::Gen g(5);
  auto random_poly = [&] {
    QPoly p(vars);
    for (int k = 0; k < 5; ++k) {
      Monomial m;
      for (int v = 0; v < 3; ++v) m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(g.integer(0, 2));
      p += QPoly::monomial(vars, m, g.rational());
    }
    return p;
  };
  for (int it = 0; it < 100; ++it) {
    QPoly p = random_poly(), q = random_poly();
    CHECK((p * q).derivative(0) == p.derivative(0) * q + p * q.derivative(0));
    std::vector<Rational> pt = g.rational_vector(3);
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
    CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
  }
}

TEST_CASE("jets agree with first-order Taylor expansion of polynomials") {
  auto vars = std::make_shared<const VarTable>(std::vector<std::string>{"u"});
  QPoly u = QPoly::variable(vars, 0);
  QPoly p = u * u * u * Rational(2) - u * Rational(5) + Rational(7);
  testing::Gen g(3);
  for (int it = 0; it < 50; ++it) {
    Rational a = g.rational(), b = g.rational();
    // p(a + t b) = p(a) + t p'(a) b
    Jet<Rational> arg(a, b);
    Jet<Rational> acc(0);
    for (const auto& [m, c] : p.terms()) {
      Jet<Rational> t(c);
      for (unsigned k = 0; k < m.exp[0]; ++k) t *= arg;
      acc += t;
    }
    std::vector<Rational> pa{a};
    CHECK(acc.value() == p.evaluate(pa));
    CHECK(acc.slope() == p.derivative(0).evaluate(pa) * b);
  }
}

TEST_CASE("rational function zero tests") {
  const auto& R = StandardRing::get(3);
  auto s = R.var<Rational>(R.s()), t = R.var<Rational>(R.t());
  const QPoly one(R.vars(), Rational(1));
  QRatFunc f((s + one) * (s + one * Rational(2)) - (s * s + s * Rational(3) + one * Rational(2)), s + one * Rational(5));
  CHECK(frac_is_zero(f));
  CHECK_FALSE(frac_is_zero(QRatFunc(one, s + one)));
  const int n = 3;
  QPoly den = (s + one) * (s + one * Rational(n + 1)) * (t + one) * (t + one * Rational(n + 1));
  QRatFunc c(one, den);
  CHECK(frac_is_zero(c * QRatFunc(den) - QRatFunc(1)));
  // stable under scaling numerator and denominator by a common factor
  QRatFunc g(s - t, s + t);
  QRatFunc g2((s - t) * (s * s + one), (s + t) * (s * s + one));
  CHECK(g == g2);
  CHECK(frac_is_zero(g - g2));
  // display cancels common factors that are linear in one variable
  QRatFunc g3((s - t) * (s * Rational(2) + one), (s + t) * (s * Rational(2) + one));
  CHECK(g3.str() == "(s - t)/(s + t)");
}

TEST_CASE("exact division and linear factors") {
  const auto& R = StandardRing::get(1);
  auto l = R.var<Rational>(R.lambda()), m = R.var<Rational>(R.mu());
  const QPoly one(R.vars(), Rational(1));
  QPoly p = (l * Rational(2) + one) * (m * Rational(2) + one) * Rational(-2);
  auto f = linear_factors(p);
  CHECK(f.content == Rational(-2));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == l * Rational(2) + one);
  CHECK(f.factors[1] == m * Rational(2) + one);
  CHECK(f.rest.is_one());
  CHECK(*divide_exact(p, m * Rational(2) + one) == (l * Rational(2) + one) * Rational(-2));
  CHECK_FALSE(divide_exact(p, l - one).has_value());
}
