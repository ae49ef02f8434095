#pragma once

#include <complex>
#include <string>
#include <variant>

#include "krzyz/errors.hpp"
#include "krzyz/rational.hpp"

namespace krzyz {

enum class Mode { exact, floating };

inline const char* mode_name(Mode m) {
  return m == Mode::exact ? "exact" : "float";
}

/// Module-wide relative tolerance for float-mode equality assertions.
/// Default 1e-10; an absolute floor of 1e-14 always applies. Arithmetic
/// never consults it.
double float_tolerance();
void set_float_tolerance(double tol);

inline constexpr double kFloatAbsFloor = 1e-14;

// Coefficient value in one of two modes: exact (Gaussian rational, no
// rounding ever) or floating (complex double). A mode is fixed per value;
// mixing modes in arithmetic throws ModeMismatch.
class Scalar {
 public:
  Scalar() : v_(GaussianRational()) {}
  Scalar(GaussianRational q) : v_(std::move(q)) {}
  Scalar(std::complex<double> z) : v_(z) {}

  static Scalar integer(long n) { return Scalar(GaussianRational(n)); }
  static Scalar rational(long p, long q) {
    return Scalar(GaussianRational(make_rational(p, q)));
  }
  static Scalar zero(Mode m) {
    return m == Mode::exact ? Scalar() : Scalar(std::complex<double>(0.0));
  }
  static Scalar one(Mode m) {
    return m == Mode::exact ? integer(1) : Scalar(std::complex<double>(1.0));
  }

  Mode mode() const {
    return std::holds_alternative<GaussianRational>(v_) ? Mode::exact
                                                        : Mode::floating;
  }
  bool is_exact() const { return mode() == Mode::exact; }

  /// Exact value; throws ModeMismatch on a float-mode scalar.
  const GaussianRational& exact() const;

  /// Value as complex double (exact values are converted).
  std::complex<double> to_complex() const;

  Scalar to_float() const { return Scalar(to_complex()); }

  /// Exactly zero in exact mode; within float_tolerance of zero in float
  /// mode (preconditions such as "nonzero constant term" use this).
  bool is_zero() const;

  Scalar conj() const;
  /// |z|^2 as a real-valued scalar of the same mode.
  Scalar norm_sq() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Exact comparison in exact mode; tolerance-based in float mode
  /// (relative float_tolerance with absolute floor 1e-14).
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::variant<GaussianRational, std::complex<double>> v_;
};

/// Float-mode equality helper used by Scalar and by the CLI/report layer.
bool approx_equal(std::complex<double> a, std::complex<double> b);

}  // namespace krzyz
