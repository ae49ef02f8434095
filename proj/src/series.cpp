#include "krzyz/series.hpp"

#include <algorithm>

namespace krzyz {

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw Error("a truncated series needs at least the constant coefficient");
  const Mode m = coeffs_.front().mode();
  for (const Scalar& c : coeffs_)
    if (c.mode() != m)
      throw ModeMismatch("mixed scalar modes within one series");
}

TruncatedSeries TruncatedSeries::zero(int order, Mode mode) {
  if (order < 0) throw Error("negative truncation order");
  return TruncatedSeries(
      std::vector<Scalar>(order + 1, Scalar::zero(mode)));
}

TruncatedSeries TruncatedSeries::constant(const Scalar& c, int order) {
  std::vector<Scalar> v(order + 1, Scalar::zero(c.mode()));
  v[0] = c;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::monomial(const Scalar& c, int k, int order) {
  if (k < 0 || k > order)
    throw Error("monomial exponent outside the truncation order");
  std::vector<Scalar> v(order + 1, Scalar::zero(c.mode()));
  v[k] = c;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order())
    throw InsufficientOrder("cannot truncate to a higher order");
  return TruncatedSeries(
      std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::to_float() const {
  std::vector<Scalar> v;
  v.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) v.push_back(c.to_float());
  return TruncatedSeries(std::move(v));
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  if (order() != o.order()) return false;
  for (int k = 0; k <= order(); ++k)
    if (coeffs_[k] != o.coeffs_[k]) return false;
  return true;
}

namespace {

void require_same_mode(const TruncatedSeries& a, const TruncatedSeries& b,
                       const char* what) {
  if (a.mode() != b.mode())
    throw ModeMismatch(std::string("mixed series modes in ") + what);
}

}  // namespace

TruncatedSeries arith(const TruncatedSeries& a, const TruncatedSeries& b,
                      ArithKind kind) {
  require_same_mode(a, b, "arith");
  const int n = std::min(a.order(), b.order());
  std::vector<Scalar> out(n + 1, Scalar::zero(a.mode()));
  switch (kind) {
    case ArithKind::add:
      for (int k = 0; k <= n; ++k) out[k] = a[k] + b[k];
      break;
    case ArithKind::sub:
      for (int k = 0; k <= n; ++k) out[k] = a[k] - b[k];
      break;
    case ArithKind::mul:
      for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j) out[k] += a[j] * b[k - j];
      break;
    case ArithKind::div: {
      if (b[0].is_zero())
        throw DivisionByNonunit(
            "series division needs a nonzero constant term");
      for (int k = 0; k <= n; ++k) {
        Scalar acc = a[k];
        for (int j = 1; j <= k; ++j) acc -= b[j] * out[k - j];
        out[k] = acc / b[0];
      }
      break;
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const Scalar& c, const TruncatedSeries& a) {
  std::vector<Scalar> out;
  out.reserve(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) out.push_back(c * a[k]);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  std::vector<Scalar> out;
  out.reserve(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) out.push_back(-a[k]);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries exp_log(const TruncatedSeries& a, ExpLogKind kind) {
  const int n = a.order();
  const Mode m = a.mode();
  std::vector<Scalar> out(n + 1, Scalar::zero(m));
  auto int_scalar = [&](long v) {
    return m == Mode::exact ? Scalar::integer(v)
                            : Scalar(std::complex<double>(double(v)));
  };
  if (kind == ExpLogKind::exp) {
    if (!a[0].is_zero())
      throw BadConstantTerm("exp needs a zero constant term");
    out[0] = Scalar::one(m);
    for (int i = 1; i <= n; ++i) {
      Scalar acc = Scalar::zero(m);
      for (int k = 1; k <= i; ++k) acc += int_scalar(k) * a[k] * out[i - k];
      out[i] = acc / int_scalar(i);
    }
  } else {
    if (a[0] != Scalar::one(m))
      throw BadConstantTerm("log needs constant term 1");
    out[0] = Scalar::zero(m);
    for (int i = 1; i <= n; ++i) {
      Scalar acc = Scalar::zero(m);
      for (int k = 1; k < i; ++k) acc += int_scalar(k) * out[k] * a[i - k];
      out[i] = a[i] - acc / int_scalar(i);
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries compose(const TruncatedSeries& G,
                        const TruncatedSeries& omega) {
  require_same_mode(G, omega, "compose");
  if (!omega[0].is_zero())
    throw CompositionAtNonzero("composition needs omega(0) = 0");
  const int n = std::min(G.order(), omega.order());
  const TruncatedSeries w = omega.truncated(n);
  // Horner: coefficients of G above index n cannot influence the result
  // because omega vanishes at 0.
  TruncatedSeries acc = TruncatedSeries::constant(G[n], n);
  for (int j = n - 1; j >= 0; --j)
    acc = acc * w + TruncatedSeries::constant(G[j], n);
  return acc;
}

std::vector<Scalar> power_coefficients(const TruncatedSeries& omega, int n) {
  if (n < 1) throw Error("power_coefficients needs n >= 1");
  if (omega.order() < n)
    throw InsufficientOrder("series order below the requested index");
  if (!omega[0].is_zero())
    throw CompositionAtNonzero("power_coefficients needs omega(0) = 0");
  const TruncatedSeries w = omega.truncated(n);
  std::vector<Scalar> row;
  row.reserve(n);
  TruncatedSeries p = w;
  row.push_back(p[n]);
  for (int j = 2; j <= n; ++j) {
    p = p * w;
    row.push_back(p[n]);
  }
  return row;
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  if (a.order() < 1)
    throw InsufficientOrder("derivative needs order >= 1");
  const Mode m = a.mode();
  std::vector<Scalar> out;
  out.reserve(a.order());
  for (int k = 1; k <= a.order(); ++k) {
    Scalar f = m == Mode::exact ? Scalar::integer(k)
                                : Scalar(std::complex<double>(double(k)));
    out.push_back(f * a[k]);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries integral(const TruncatedSeries& a) {
  const Mode m = a.mode();
  std::vector<Scalar> out(a.order() + 2, Scalar::zero(m));
  for (int k = 0; k <= a.order(); ++k) {
    Scalar f = m == Mode::exact
                   ? Scalar::rational(1, k + 1)
                   : Scalar(std::complex<double>(1.0 / double(k + 1)));
    out[k + 1] = f * a[k];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries shift_up(const TruncatedSeries& a, int k) {
  if (k < 0) throw Error("negative shift");
  std::vector<Scalar> out(a.order() + 1, Scalar::zero(a.mode()));
  for (int j = k; j <= a.order(); ++j) out[j] = a[j - k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries shift_down(const TruncatedSeries& a, int k) {
  if (k < 0) throw Error("negative shift");
  if (a.order() < k)
    throw InsufficientOrder("shift below the constant coefficient");
  for (int j = 0; j < k; ++j)
    if (!a[j].is_zero())
      throw BadConstantTerm("shift_down needs the low coefficients to vanish");
  std::vector<Scalar> out(a.coeffs().begin() + k, a.coeffs().end());
  return TruncatedSeries(std::move(out));
}

}  // namespace krzyz
