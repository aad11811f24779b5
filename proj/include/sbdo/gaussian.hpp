#pragma once

#include <string>

#include "sbdo/rational.hpp"

namespace sbdo {

// Element re + im*i of Q(i). Houses the imaginary unit that appears in the
// gamma matrices, in Fourier symbols (i xi)^alpha and in the Riesz constants.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT: real embedding
  GaussianRational(long long re) : re_(re) {}            // NOLINT
  GaussianRational(int re) : re_(re) {}                  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const {
    const Rational d = norm().inverse();  // throws on zero
    return {re_ * d, -im_ * d};
  }

  // "a/b", "c/d*i", "a/b+c/d*i" or "a/b-c/d*i".
  std::string str() const {
    if (im_.is_zero()) return re_.str();
    auto imag = [](const Rational& v) {
      if (v.is_one()) return std::string("i");
      if ((-v).is_one()) return std::string("-i");
      return v.str() + "*i";
    };
    if (re_.is_zero()) return imag(im_);
    if (im_.sign() > 0) return re_.str() + "+" + imag(im_);
    return re_.str() + imag(im_);
  }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (!o.im_.is_zero()) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (!o.im_.is_zero()) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const GaussianRational& g) { return g.str(); }

}  // namespace sbdo
