#include "krzyz/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>

namespace krzyz {

namespace {
std::atomic<double> g_float_tolerance{1e-10};
}  // namespace

double float_tolerance() { return g_float_tolerance.load(); }
void set_float_tolerance(double tol) { g_float_tolerance.store(tol); }

bool approx_equal(std::complex<double> a, std::complex<double> b) {
  const double diff = std::abs(a - b);
  const double scale = std::max(std::abs(a), std::abs(b));
  return diff <= std::max(kFloatAbsFloor, float_tolerance() * scale);
}

std::string GaussianRational::str() const {
  if (im_ == 0) return rational_str(re_);
  std::string imag_part =
      abs(im_) == 1 ? "i" : rational_str(abs(im_)) + "i";
  std::string sign = im_ < 0 ? "-" : "";
  if (re_ == 0) return sign + imag_part;
  if (sign.empty()) sign = "+";
  return rational_str(re_) + sign + imag_part;
}

const GaussianRational& Scalar::exact() const {
  if (auto* q = std::get_if<GaussianRational>(&v_)) return *q;
  throw ModeMismatch("exact value requested from a float-mode scalar");
}

std::complex<double> Scalar::to_complex() const {
  if (auto* q = std::get_if<GaussianRational>(&v_)) return q->to_complex();
  return std::get<std::complex<double>>(v_);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<GaussianRational>(&v_)) return q->is_zero();
  return std::abs(std::get<std::complex<double>>(v_)) <= float_tolerance();
}

Scalar Scalar::conj() const {
  if (auto* q = std::get_if<GaussianRational>(&v_)) return Scalar(q->conj());
  return Scalar(std::conj(std::get<std::complex<double>>(v_)));
}

Scalar Scalar::norm_sq() const {
  if (auto* q = std::get_if<GaussianRational>(&v_))
    return Scalar(GaussianRational(q->norm_sq()));
  return Scalar(std::complex<double>(
      std::norm(std::get<std::complex<double>>(v_))));
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<GaussianRational>(&v_)) return Scalar(-*q);
  return Scalar(-std::get<std::complex<double>>(v_));
}

namespace {

template <typename ExactOp, typename FloatOp>
Scalar binop(const Scalar& a, const Scalar& b, ExactOp eop, FloatOp fop,
             const char* name) {
  if (a.mode() != b.mode())
    throw ModeMismatch(std::string("mixed scalar modes in ") + name);
  if (a.is_exact()) return Scalar(eop(a.exact(), b.exact()));
  return Scalar(fop(a.to_complex(), b.to_complex()));
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  return binop(
      *this, o, [](const auto& x, const auto& y) { return x + y; },
      [](auto x, auto y) { return x + y; }, "add");
}

Scalar Scalar::operator-(const Scalar& o) const {
  return binop(
      *this, o, [](const auto& x, const auto& y) { return x - y; },
      [](auto x, auto y) { return x - y; }, "sub");
}

Scalar Scalar::operator*(const Scalar& o) const {
  return binop(
      *this, o, [](const auto& x, const auto& y) { return x * y; },
      [](auto x, auto y) { return x * y; }, "mul");
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (mode() != o.mode()) throw ModeMismatch("mixed scalar modes in div");
  if (o.is_zero()) throw DivisionByNonunit("scalar division by zero");
  if (is_exact()) return Scalar(exact() / o.exact());
  return Scalar(to_complex() / o.to_complex());
}

bool Scalar::operator==(const Scalar& o) const {
  if (mode() != o.mode())
    throw ModeMismatch("mixed scalar modes in equality");
  if (is_exact()) return exact() == o.exact();
  return approx_equal(to_complex(), o.to_complex());
}

std::string Scalar::str() const {
  if (auto* q = std::get_if<GaussianRational>(&v_)) return q->str();
  auto z = std::get<std::complex<double>>(v_);
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof(buf), "%.17g", z.real());
    return buf;
  }
  std::string out;
  std::snprintf(buf, sizeof(buf), "%.17g", z.real());
  out = buf;
  std::snprintf(buf, sizeof(buf), "%+.17g", z.imag());
  out += buf;
  out += "i";
  return out;
}

}  // namespace krzyz
