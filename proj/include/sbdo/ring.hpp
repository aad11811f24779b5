#pragma once

#include <cstddef>
#include <memory>

#include "sbdo/poly.hpp"

namespace sbdo {

// Indeterminates shared by every polynomial built for a given dimension n:
//   x1..xn, y1..yn, xi1..xin, zeta1..zetan, s, t, lambda, mu.
// Tables are cached per n, so all polynomials of one dimension share the
// same pointer and never pay for a name comparison.
class StandardRing {
 public:
  static constexpr int kMaxDim = 5;

  static const StandardRing& get(int n);

  int n() const { return n_; }
  const VarTablePtr& vars() const { return vars_; }

  std::size_t x(int j) const { return static_cast<std::size_t>(j - 1); }
  std::size_t y(int j) const { return static_cast<std::size_t>(n_ + j - 1); }
  std::size_t xi(int j) const { return static_cast<std::size_t>(2 * n_ + j - 1); }
  std::size_t zeta(int j) const { return static_cast<std::size_t>(3 * n_ + j - 1); }
  std::size_t s() const { return static_cast<std::size_t>(4 * n_); }
  std::size_t t() const { return static_cast<std::size_t>(4 * n_ + 1); }
  std::size_t lambda() const { return static_cast<std::size_t>(4 * n_ + 2); }
  std::size_t mu() const { return static_cast<std::size_t>(4 * n_ + 3); }

  template <class C = GaussianRational>
  Poly<C> var(std::size_t index) const {
    return Poly<C>::variable(vars_, index);
  }
  template <class C = GaussianRational>
  Poly<C> constant(C c) const {
    return Poly<C>(vars_, std::move(c));
  }

 private:
  explicit StandardRing(int n);

  int n_;
  VarTablePtr vars_;
};

}  // namespace sbdo
