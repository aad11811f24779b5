#include "doctest.h"

#include "json.hpp"
#include "sbdo/emit.hpp"

using namespace sbdo;

namespace {

const char* kRankinCohen =
    "2\\mu(2\\mu+1)\\frac{\\partial^2}{\\partial x^2}+2\\lambda(2\\lambda+1)\\frac{\\partial^2}{\\partial y^2}"
    "-2(2\\lambda+1)(2\\mu+1)\\frac{\\partial^2}{\\partial x\\partial y}";

}  // namespace

TEST_CASE("LaTeX for n = 1, k = 0, m = 1 is the three-term display") {
  const WeylOperator B = emitted_sbdo(1, 0, 1, std::nullopt, std::nullopt);
  CHECK(render_sbdo(B, 0, 1, std::nullopt, std::nullopt, EmitFormat::Latex) == std::string(kRankinCohen) + "\n");
}

TEST_CASE("LaTeX polynomials") {
  const auto& R = StandardRing::get(2);
  const CPoly l = R.var(R.lambda()), x1 = R.var(R.x(1));
  CHECK(latex_poly(l * GaussianRational(Rational(1, 2)) - x1 * x1) == "-x_{1}^2+\\frac{1}{2}\\lambda");
  CHECK(latex_poly(x1 * GaussianRational::i()) == "ix_{1}");
  CHECK(latex_factored((l + CPoly(R.vars(), GaussianRational(1))) * (l + CPoly(R.vars(), GaussianRational(1))) *
                       GaussianRational(-3)) == "-3(\\lambda+1)^2");
  CHECK(latex_factored(CPoly(R.vars(), GaussianRational(0))) == "0");
}

TEST_CASE("SBDO JSON schema") {
  const WeylOperator B = emitted_sbdo(2, 1, 1, Rational(1, 2), std::nullopt);
  const std::string text = render_sbdo(B, 1, 1, Rational(1, 2), std::nullopt, EmitFormat::Json);
  CHECK(text == render_sbdo(emitted_sbdo(2, 1, 1, Rational(1, 2), std::nullopt), 1, 1, Rational(1, 2), std::nullopt,
                            EmitFormat::Json));
  const auto j = nlohmann::json::parse(text);
  CHECK(j["n"] == 2);
  CHECK(j["k"] == 1);
  CHECK(j["lambda"] == "1/2");
  CHECK(j["mu"] == "symbolic");
  REQUIRE(j["terms"].size() == B.terms().size());
  for (const auto& t : j["terms"]) {
    CHECK(t["dx"].size() == 2);
    CHECK(t["dy"].size() == 2);
    CHECK(t["map"].size() == 2);
    CHECK(t["map"][0].size() == 4);
    unsigned order = 0;
    for (const auto& e : t["dx"]) order += e.get<unsigned>();
    for (const auto& e : t["dy"]) order += e.get<unsigned>();
    CHECK(order == 2);
  }
}

TEST_CASE("source JSON with rational parameters has rational entries") {
  const WeylOperator E = emitted_source(2, Rational(1, 2), Rational(1, 3));
  const auto j = nlohmann::json::parse(render_source(E, Rational(1, 2), Rational(1, 3), EmitFormat::Json));
  CHECK(j["lambda"] == "1/2");
  CHECK(j["mu"] == "1/3");
  // d(1/2, 1/3) = 1 / ((0)(2)(-1/3)(5/3)) has a pole.
  CHECK(j["normalization"] == "pole");
  bool saw_fraction = false;
  for (const auto& t : j["terms"])
    for (const auto& row : t["coeff"])
      for (const auto& e : row) {
        const std::string s = e.get<std::string>();
        CHECK(s.find("lambda") == std::string::npos);
        CHECK(s.find("mu") == std::string::npos);
        saw_fraction |= s.find('/') != std::string::npos;
      }
  CHECK(saw_fraction);
  const auto w = nlohmann::json::parse(weyl_json(build_M(1)));
  REQUIRE(w.size() == 1);
  CHECK(w[0]["coeff"][0][0] == "x1^2 - 2*x1*y1 + y1^2");
}

TEST_CASE("normalization d(lambda, mu) is c(s, t) at s = -2 lambda - 2, t = -2 mu - 2") {
  for (int n = 1; n <= 3; ++n) {
    const auto& R = StandardRing::get(n);
    const QPoly two(R.vars(), Rational(2));
    const QPoly sv = R.var<Rational>(R.lambda()) * Rational(-2) - two, tv = R.var<Rational>(R.mu()) * Rational(-2) - two;
    const QRatFunc c = c_st(n);
    const QRatFunc sub(c.numerator().substitute(R.s(), sv).substitute(R.t(), tv),
                       c.denominator().substitute(R.s(), sv).substitute(R.t(), tv));
    CHECK(sub == d_lambda_mu(n));
  }
}

TEST_CASE("parsing") {
  CHECK(parse_emit_format("latex") == EmitFormat::Latex);
  CHECK_THROWS_AS(parse_emit_format("yaml"), ParseError);
  CHECK_FALSE(parse_param("symbolic").has_value());
  CHECK(*parse_param("-3/4") == Rational(-3, 4));
  CHECK_THROWS_AS(parse_param("x"), ParseError);
}
