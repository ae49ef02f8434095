#include "krzyz/caratheodory.hpp"

namespace krzyz {

const char* extension_kind_name(ExtensionKind k) {
  switch (k) {
    case ExtensionKind::all_positive:
      return "all-positive";
    case ExtensionKind::positive_then_zero:
      return "positive-then-zero";
    default:
      return "indefinite";
  }
}

CaratheodorySegment convex_to_caratheodory(const TruncatedSeries& f) {
  if (f.order() < 2)
    throw InsufficientOrder("need order >= 2 to form f''/f'");
  const Mode m = f.mode();
  if (!f[0].is_zero() || f[1] != Scalar::one(m))
    throw BadNormalization("input must satisfy f(0) = 0, f'(0) = 1");
  const TruncatedSeries fp = derivative(f);        // order-1, constant 1
  const TruncatedSeries fpp = derivative(fp);      // order-2
  const TruncatedSeries q = fpp / fp;              // order-2
  // h = 1 + z q: {h}_j = q_{j-1} for j >= 1, known through j = order-1.
  std::vector<Scalar> coeffs;
  coeffs.reserve(q.order() + 1);
  for (int j = 0; j <= q.order(); ++j) coeffs.push_back(q[j]);
  return CaratheodorySegment{std::move(coeffs)};
}

TruncatedSeries caratheodory_to_convex(const CaratheodorySegment& h) {
  if (h.size() < 1) throw EmptySegment("empty Caratheodory segment");
  // (h(v)-1)/v is the polynomial sum_{k>=1} h_k v^{k-1}.
  const TruncatedSeries integrand(
      std::vector<Scalar>(h.coeffs.begin(), h.coeffs.end()));
  const TruncatedSeries fprime = exp_series(integral(integrand));
  return integral(fprime);
}

CaratheodorySegment h_closed_form(const mpq_class& t, int n) {
  if (t <= 0) throw NonpositiveParameter("t must be positive");
  if (n < 1) throw Error("segment length must be >= 1");
  std::vector<Scalar> coeffs;
  coeffs.reserve(n);
  for (int j = 1; j <= n; ++j)
    coeffs.push_back(Scalar(GaussianRational(2 * (1 - j * t))));
  return CaratheodorySegment{std::move(coeffs)};
}

namespace {

// Determinant of the leading (k+1)x(k+1) block by Bareiss fraction-free
// elimination with row pivoting. Exact over Gaussian rationals.
GaussianRational bareiss_det(std::vector<std::vector<GaussianRational>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return GaussianRational(1);
  GaussianRational prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a[i][k].is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return GaussianRational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = GaussianRational(0);
    }
    prev = a[k][k];
  }
  GaussianRational det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

Classification classify(const std::vector<mpq_class>& minors) {
  const int n = static_cast<int>(minors.size());
  int d = -1;
  for (int i = 0; i < n; ++i) {
    if (minors[i] > 0) continue;
    d = i;
    break;
  }
  if (d < 0) return {ExtensionKind::all_positive, -1};
  if (minors[d] < 0) return {ExtensionKind::indefinite, d};
  for (int i = d + 1; i < n; ++i)
    if (minors[i] != 0) return {ExtensionKind::indefinite, i};
  return {ExtensionKind::positive_then_zero, d};
}

}  // namespace

ToeplitzMinorReport toeplitz_minors(const CaratheodorySegment& h) {
  if (h.size() == 0) throw EmptySegment("empty Caratheodory segment");
  for (const Scalar& c : h.coeffs)
    if (!c.is_exact())
      throw FloatModeRefused(
          "Toeplitz minors are a sign test and run in exact mode only");
  const int n = h.size();
  // entries(i,j): 2 on the diagonal, {h}_{j-i} above, conjugated below
  auto entry = [&](int i, int j) -> GaussianRational {
    if (i == j) return GaussianRational(2);
    if (j > i) return h.coeffs[j - i - 1].exact();
    return h.coeffs[i - j - 1].exact().conj();
  };
  ToeplitzMinorReport report;
  report.minors.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<GaussianRational>> a(
        k + 1, std::vector<GaussianRational>(k + 1));
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) a[i][j] = entry(i, j);
    const GaussianRational det = bareiss_det(std::move(a));
    if (det.imag() != 0)
      throw Error("Hermitian Toeplitz determinant came out non-real");
    report.minors.push_back(det.real());
  }
  report.classification = classify(report.minors);
  return report;
}

mpq_class closed_form_minor(const mpq_class& t, int n) {
  if (n < 0) throw Error("minor index must be >= 0");
  mpq_class pow(1);
  for (int i = 0; i < n; ++i) pow *= 4 * t;
  return pow * (2 - n * t);
}

ExtensionDecision extendability_check(const mpq_class& t, int n) {
  if (t <= 0) throw NonpositiveParameter("t must be positive");
  if (n < 1) throw Error("n must be >= 1");
  ExtensionDecision d;
  d.extendable = mpq_class(n) <= 2 / t + 1;
  d.unique = n >= 2 && t == mpq_class(2) / (n - 1);
  return d;
}

ToeplitzMinorReport minors_for_horizon(const mpq_class& t, int n) {
  if (n < 2) throw Error("horizon minors need n >= 2");
  ToeplitzMinorReport r = toeplitz_minors(h_closed_form(t, n - 1));
  r.t = t;
  return r;
}

}  // namespace krzyz
