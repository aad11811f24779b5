#pragma once

#include <complex>
#include <vector>

#include "sbdo/ratfunc.hpp"
#include "sbdo/ring.hpp"

namespace sbdo {

// Formal product 2^{e(s)} prod Gamma(a_i(s))^{p_i}; constant factors are
// dropped since only ratios under integer shifts of s are ever formed.
struct GammaProduct {
  struct Factor {
    QPoly arg;
    int power;  // +1 numerator, -1 denominator
  };
  QPoly log2;
  std::vector<Factor> factors;

  // f(s + k) / f(s) as a rational function, by the functional equation.
  // Every Gamma argument must shift by an integer and the exponent of 2 by a
  // constant integer; anything else raises DomainError.
  QRatFunc shift_ratio(std::size_t var, int k) const;
};

// c_s = 2^{s+n} pi^{n/2} Gamma((s+n)/2) / Gamma(-s/2), constant part dropped.
GammaProduct scalar_riesz_constant(int n);
// Clifford constant = -i 2^{s+n} pi^{n/2} Gamma((s+n+1)/2) / Gamma(-(s-1)/2).
GammaProduct clifford_riesz_constant(int n);

// Floating point values. Raises DomainError when a Gamma argument lies within
// 1e-9 of a non-positive integer.
std::complex<double> scalar_riesz_value(double s, int n);
std::complex<double> clifford_riesz_value(double s, int n);

struct RieszConstantCheck {
  double s;
  int n;
  double ratio_residual;        // |c(s+2)/c(s) + (s+1)(s+n+1)| for the Clifford constant
  double consistency_residual;  // |c(s) - i(-s+1-n) c_{s-1}| / |c(s)|
  double scalar_residual;       // |c_{s+2}/c_s - exact shift ratio| / |exact|
};
RieszConstantCheck riesz_constant_check(double s, int n);

// 20 sample values of s in (-6, 6) avoiding every pole of the checks above.
std::vector<double> riesz_sample_points(int n, std::size_t count = 20);

}  // namespace sbdo
