#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <utility>

#include "krzyz/errors.hpp"

namespace krzyz {

/// Rational p/q in canonical form. mpq_class(p, q) alone does not
/// canonicalize, so construction goes through here.
inline mpq_class make_rational(long p, long q = 1) {
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

/// "p/q" or "p" when q = 1.
inline std::string rational_str(const mpq_class& r) { return r.get_str(); }

// Complex number with arbitrary-precision rational real and imaginary
// parts. All arithmetic is exact; division by zero throws.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long n) : re_(n), im_(0) {}

  static GaussianRational i() { return GaussianRational(0, 1); }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  /// |z|^2, exactly.
  mpq_class norm_sq() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational operator+(const GaussianRational& o) const {
    return GaussianRational(re_ + o.re_, im_ + o.im_);
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return GaussianRational(re_ - o.re_, im_ - o.im_);
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return GaussianRational(re_ * o.re_ - im_ * o.im_,
                            re_ * o.im_ + im_ * o.re_);
  }
  GaussianRational operator/(const GaussianRational& o) const {
    mpq_class n = o.norm_sq();
    if (n == 0) throw DivisionByNonunit("division by zero Gaussian rational");
    return GaussianRational((re_ * o.re_ + im_ * o.im_) / n,
                            (im_ * o.re_ - re_ * o.im_) / n);
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    return *this = *this * o;
  }

  bool operator==(const GaussianRational& o) const {
    return re_ == o.re_ && im_ == o.im_;
  }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  /// "p/q", "p/q+r/si", "r/si", ... Real part omitted when zero and the
  /// imaginary part is not.
  std::string str() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

inline GaussianRational operator*(const mpq_class& r,
                                  const GaussianRational& z) {
  return GaussianRational(r) * z;
}

}  // namespace krzyz
