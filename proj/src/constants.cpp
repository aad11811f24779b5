#include "sbdo/constants.hpp"

#include <cmath>
#include <numbers>

namespace sbdo {

namespace {

std::optional<long long> integer_shift(const QPoly& d) {
  if (!d.is_constant()) return std::nullopt;
  const Rational c = d.constant_term();
  if (!c.is_integer()) return std::nullopt;
  return static_cast<long long>(c.to_double());
}

// log|Gamma(x)| and the sign of Gamma(x).
std::pair<double, int> log_gamma(double x) {
  const double nearest = std::round(x);
  if (nearest <= 0 && std::abs(x - nearest) < 1e-9) throw DomainError("Gamma argument too close to a pole");
  int sign = 1;
  if (x < 0 && static_cast<long long>(std::floor(x)) % 2 != 0) sign = -1;
  return {std::lgamma(x), sign};
}

QPoly s_poly(int n) { return StandardRing::get(n).var<Rational>(StandardRing::get(n).s()); }

}  // namespace

QRatFunc GammaProduct::shift_ratio(std::size_t var, int k) const {
  const auto shifted = [&](const QPoly& p) {
    return p.substitute(var, QPoly::variable(p.vars(), var) + QPoly(p.vars(), Rational(k)));
  };
  QRatFunc out(Rational(1));
  if (!log2.is_zero()) {
    auto e = integer_shift(shifted(log2) - log2);
    if (!e) throw DomainError("exponent of 2 does not shift by an integer");
    const Rational two = *e >= 0 ? Rational(1LL << *e) : Rational(1, 1LL << -*e);
    out *= QRatFunc(two);
  }
  for (const auto& f : factors) {
    auto d = integer_shift(shifted(f.arg) - f.arg);
    if (!d) throw DomainError("Gamma argument does not shift by an integer");
    // Gamma(z + d) / Gamma(z) = z (z+1) ... (z+d-1), or its inverse for d < 0.
    QPoly poch(f.arg.vars(), Rational(1));
    for (long long i = 0; i < std::llabs(*d); ++i)
      poch *= *d > 0 ? f.arg + QPoly(f.arg.vars(), Rational(i)) : f.arg - QPoly(f.arg.vars(), Rational(i + 1));
    const bool up = (*d > 0) == (f.power > 0);
    for (int p = 0; p < std::abs(f.power); ++p) out *= up ? QRatFunc(poch) : QRatFunc(poch).inverse();
  }
  return out;
}

GammaProduct scalar_riesz_constant(int n) {
  const QPoly s = s_poly(n), one(s.vars(), Rational(1));
  const Rational half(1, 2);
  return {s + one * Rational(n), {{(s + one * Rational(n)) * half, 1}, {-s * half, -1}}};
}

GammaProduct clifford_riesz_constant(int n) {
  const QPoly s = s_poly(n), one(s.vars(), Rational(1));
  const Rational half(1, 2);
  return {s + one * Rational(n), {{(s + one * Rational(n + 1)) * half, 1}, {-(s - one) * half, -1}}};
}

std::complex<double> scalar_riesz_value(double s, int n) {
  const auto [ln, sn] = log_gamma((s + n) / 2);
  const auto [ld, sd] = log_gamma(-s / 2);
  const double mag = std::exp((s + n) * std::log(2.0) + 0.5 * n * std::log(std::numbers::pi) + ln - ld);
  return {sn * sd * mag, 0.0};
}

std::complex<double> clifford_riesz_value(double s, int n) {
  const auto [ln, sn] = log_gamma((s + n + 1) / 2);
  const auto [ld, sd] = log_gamma(-(s - 1) / 2);
  const double mag = std::exp((s + n) * std::log(2.0) + 0.5 * n * std::log(std::numbers::pi) + ln - ld);
  return {0.0, -sn * sd * mag};
}

RieszConstantCheck riesz_constant_check(double s, int n) {
  using C = std::complex<double>;
  RieszConstantCheck r{s, n, 0, 0, 0};
  const C cs = clifford_riesz_value(s, n);
  r.ratio_residual = std::abs(clifford_riesz_value(s + 2, n) / cs + (s + 1) * (s + n + 1));
  r.consistency_residual = std::abs(cs - C(0, 1) * (-s + 1 - n) * scalar_riesz_value(s - 1, n)) / std::abs(cs);
  // Exact c_{s+2}/c_s from the functional equation, evaluated at s.
  const QRatFunc exact = scalar_riesz_constant(n).shift_ratio(StandardRing::get(n).s(), 2);
  const auto eval = [&](const QPoly& p) {
    double acc = 0;
    for (const auto& [m, c] : p.terms()) {
      double t = c.to_double();
      for (unsigned k = 0; k < m.exp[StandardRing::get(n).s()]; ++k) t *= s;
      acc += t;
    }
    return acc;
  };
  const double want = eval(exact.numerator()) / eval(exact.denominator());
  const C got = scalar_riesz_value(s + 2, n) / scalar_riesz_value(s, n);
  r.scalar_residual = std::abs(got - want) / std::abs(want);
  return r;
}

std::vector<double> riesz_sample_points(int n, std::size_t count) {
  std::vector<double> out;
  // Irrational stride through (-6, 6) so no sample lands on a half-integer.
  for (int i = 0; out.size() < count && i < 10 * static_cast<int>(count); ++i) {
    const double s = -6.0 + std::fmod(0.7 + i * std::numbers::sqrt2 * 1.3, 12.0);
    try {
      const auto c = riesz_constant_check(s, n);
      if (std::isfinite(c.ratio_residual) && std::isfinite(c.consistency_residual) && std::isfinite(c.scalar_residual))
        out.push_back(s);
    } catch (const DomainError&) {
    }
  }
  return out;
}

}  // namespace sbdo
