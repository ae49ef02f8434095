#pragma once

#include <vector>

#include "krzyz/scalar.hpp"

namespace krzyz {

// Finitely many Taylor coefficients with an explicit truncation order N.
// Coefficients beyond z^N are unknown, not zero: every operation documents
// the order of its result, and binary operations return the minimum of the
// operand orders. All coefficients of one series share a scalar mode.
class TruncatedSeries {
 public:
  /// order = coeffs.size() - 1; coeffs must be nonempty and mode-uniform.
  explicit TruncatedSeries(std::vector<Scalar> coeffs);
  TruncatedSeries() : TruncatedSeries(std::vector<Scalar>{Scalar()}) {}

  static TruncatedSeries zero(int order, Mode mode);
  static TruncatedSeries constant(const Scalar& c, int order);
  /// c * z^k, coefficients above k zero up to `order`. Requires k <= order.
  static TruncatedSeries monomial(const Scalar& c, int k, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Mode mode() const { return coeffs_.front().mode(); }
  const Scalar& operator[](int k) const { return coeffs_.at(k); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  /// Drop coefficients above new_order (new_order <= order).
  TruncatedSeries truncated(int new_order) const;
  TruncatedSeries to_float() const;

  /// Same order and coefficientwise equality (mode-aware).
  bool operator==(const TruncatedSeries& o) const;
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

 private:
  std::vector<Scalar> coeffs_;
};

enum class ArithKind { add, sub, mul, div };

/// Coefficientwise add/sub, Cauchy-product mul, long-division div.
/// Result order = min(order(a), order(b)). div requires b[0] nonzero
/// (exactly in exact mode, above tolerance in float mode).
TruncatedSeries arith(const TruncatedSeries& a, const TruncatedSeries& b,
                      ArithKind kind);

inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return arith(a, b, ArithKind::add);
}
inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return arith(a, b, ArithKind::sub);
}
inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return arith(a, b, ArithKind::mul);
}
inline TruncatedSeries operator/(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return arith(a, b, ArithKind::div);
}

TruncatedSeries operator*(const Scalar& c, const TruncatedSeries& a);
TruncatedSeries operator-(const TruncatedSeries& a);

enum class ExpLogKind { exp, log };

/// exp via the recurrence n*g_n = sum_{k=1..n} k*a_k*g_{n-k} (requires
/// a[0] = 0, so exact mode stays exact); log is its inverse (a[0] = 1).
TruncatedSeries exp_log(const TruncatedSeries& a, ExpLogKind kind);

inline TruncatedSeries exp_series(const TruncatedSeries& a) {
  return exp_log(a, ExpLogKind::exp);
}
inline TruncatedSeries log_series(const TruncatedSeries& a) {
  return exp_log(a, ExpLogKind::log);
}

/// Coefficients of G(omega(z)) by Horner evaluation on truncated series.
/// Requires omega[0] = 0; result order = min(order(G), order(omega)).
TruncatedSeries compose(const TruncatedSeries& G, const TruncatedSeries& omega);

/// The row ({omega^1}_n, ..., {omega^n}_n) by iterated truncated
/// multiplication. Requires omega[0] = 0 and order(omega) >= n >= 1.
std::vector<Scalar> power_coefficients(const TruncatedSeries& omega, int n);

/// Termwise derivative; order drops by one (requires order >= 1).
TruncatedSeries derivative(const TruncatedSeries& a);

/// Antiderivative vanishing at 0; order grows by one.
TruncatedSeries integral(const TruncatedSeries& a);

/// z^k * a truncated at the same order.
TruncatedSeries shift_up(const TruncatedSeries& a, int k);

/// a / z^k; requires the first k coefficients to vanish. Order drops by k.
TruncatedSeries shift_down(const TruncatedSeries& a, int k);

}  // namespace krzyz
