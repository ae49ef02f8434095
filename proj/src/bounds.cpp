#include "krzyz/bounds.hpp"

#include <cmath>

namespace krzyz {

std::vector<Scalar> subordination_coeffs(const TruncatedSeries& G,
                                         const TruncatedSeries& omega,
                                         int n_max) {
  if (n_max < 1) throw Error("n_max must be >= 1");
  if (G.order() < n_max || omega.order() < n_max)
    throw InsufficientOrder("series order below the requested index");
  if (!omega[0].is_zero())
    throw CompositionAtNonzero("subordination needs omega(0) = 0");
  if (G.mode() != omega.mode())
    throw ModeMismatch("mixed series modes in subordination");
  const Mode m = G.mode();
  std::vector<Scalar> out(n_max, Scalar::zero(m));
  const TruncatedSeries w = omega.truncated(n_max);
  TruncatedSeries p = w;
  for (int j = 1; j <= n_max; ++j) {
    if (j > 1) p = p * w;
    for (int n = j; n <= n_max; ++n) out[n - 1] += G[j] * p[n];
  }
  return out;
}

namespace {

bool margin_passes(const Scalar& margin, Mode mode) {
  if (mode == Mode::exact) return margin.exact().real() >= 0;
  return margin.to_complex().real() >= -1e-12;
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.mode() == Mode::exact && b.mode() == Mode::exact)
    return a.exact().real() < b.exact().real();
  return a.to_complex().real() < b.to_complex().real();
}

}  // namespace

BoundCheckResult verify_bound(const mpq_class& t, const TruncatedSeries& omega,
                              Mode mode, std::string omega_descriptor) {
  BoundCheckResult r;
  r.t = t;
  r.mode = mode;
  r.horizon = bound_horizon(t);
  r.omega_descriptor = std::move(omega_descriptor);
  r.bound_value = r.horizon.bound;
  const int n = r.horizon.horizon;
  if (omega.order() < n)
    throw InsufficientOrder("omega must be known through z^" +
                            std::to_string(n));
  if (mode == Mode::exact && omega.mode() != Mode::exact)
    throw ModeMismatch("exact verification needs an exact omega");

  TruncatedSeries g = normalized_coeffs(t, n);
  TruncatedSeries w = omega.truncated(n);
  if (mode == Mode::floating) {
    g = g.to_float();
    if (w.mode() != Mode::floating) w = w.to_float();
  }
  const std::vector<Scalar> coeffs = subordination_coeffs(g, w, n);
  const Scalar one = Scalar::one(mode);
  for (int i = 1; i <= n; ++i) {
    BoundCheckRow row;
    row.index = i;
    row.coefficient = coeffs[i - 1];
    row.sq_modulus = row.coefficient.norm_sq();
    row.margin = one - row.sq_modulus;
    row.pass = margin_passes(row.margin, mode);
    if (!*row.pass) r.all_pass = false;
    r.rows.push_back(std::move(row));
  }
  return r;
}

BoundCheckResult extremal_equality(const mpq_class& t, int n,
                                   const Rotation& rot, Mode mode) {
  const BoundHorizon h = bound_horizon(t);
  if (n < 1) throw Error("index n must be >= 1");
  if (n > h.horizon)
    throw BeyondHorizon("extremal index beyond the proven horizon N(t) = " +
                        std::to_string(h.horizon));
  const Scalar lambda = rot.unimodular(mode);
  const TruncatedSeries omega =
      TruncatedSeries::monomial(lambda, n, h.horizon);
  BoundCheckResult r =
      verify_bound(t, omega, mode,
                   "extremal(n=" + std::to_string(n) + ", phi=" + rot.str() +
                       ")");
  ExtremalVerdict v;
  v.n = n;
  v.equality_at_n = true;
  v.zero_off_support = true;
  v.bounded_on_support = true;
  const Scalar one = Scalar::one(mode);
  const Scalar zero = Scalar::zero(mode);
  for (const BoundCheckRow& row : r.rows) {
    if (row.index == n) {
      if (row.sq_modulus != one) v.equality_at_n = false;
    } else if (row.index % n != 0) {
      if (row.sq_modulus != zero) v.zero_off_support = false;
    } else if (!margin_passes(row.margin, mode)) {
      v.bounded_on_support = false;
    }
  }
  r.extremal = v;
  return r;
}

BoundCheckResult probe_beyond(const mpq_class& t, const TruncatedSeries& omega,
                              int n_lo, int n_hi,
                              std::string omega_descriptor) {
  BoundCheckResult r;
  r.t = t;
  r.horizon = bound_horizon(t);
  r.omega_descriptor = std::move(omega_descriptor);
  r.bound_value = r.horizon.bound;
  r.mode = omega.mode();
  if (n_lo <= r.horizon.horizon)
    throw Error("probe must start beyond the proven horizon N(t) = " +
                std::to_string(r.horizon.horizon));
  if (n_hi < n_lo) throw Error("empty probe range");
  if (omega.order() < n_hi)
    throw InsufficientOrder("omega must be known through z^" +
                            std::to_string(n_hi));
  // (2/e) / (2t e^{-t}), the conjectural ceiling relative to the
  // normalized coefficients; squared for comparison against |.|^2.
  const double ratio =
      (2.0 / std::exp(1.0)) / r.bound_value;
  r.conjectural_sq = ratio * ratio;

  const TruncatedSeries g = r.mode == Mode::floating
                                ? normalized_coeffs(t, n_hi).to_float()
                                : normalized_coeffs(t, n_hi);
  const std::vector<Scalar> coeffs = subordination_coeffs(g, omega, n_hi);
  for (int i = n_lo; i <= n_hi; ++i) {
    BoundCheckRow row;
    row.index = i;
    row.coefficient = coeffs[i - 1];
    row.sq_modulus = row.coefficient.norm_sq();
    row.margin = Scalar::one(r.mode) - row.sq_modulus;
    row.pass = std::nullopt;  // no verdict: nothing is proved out here
    row.below_conjectural =
        row.sq_modulus.to_complex().real() <= *r.conjectural_sq;
    r.rows.push_back(std::move(row));
  }
  return r;
}

std::optional<int> rotation_power(const TruncatedSeries& omega, int up_to) {
  if (omega.order() < up_to)
    throw InsufficientOrder("series order below the inspection range");
  int k = -1;
  for (int i = 1; i <= up_to; ++i) {
    if (omega[i].is_zero()) continue;
    if (k >= 0) return std::nullopt;  // two nonzero coefficients
    k = i;
  }
  if (k < 0) return std::nullopt;
  const Scalar sq = omega[k].norm_sq();
  if (sq != Scalar::one(omega.mode())) return std::nullopt;
  return k;
}

SweepResult bound_check_sweep(const mpq_class& t, int samples, int degree_cap,
                              std::uint64_t seed_base, Mode mode) {
  if (samples < 1) throw Error("need at least one sample");
  if (degree_cap < 0) throw Error("degree cap must be >= 0");
  SweepResult sweep;
  sweep.t = t;
  sweep.mode = mode;
  sweep.horizon = bound_horizon(t);
  sweep.samples = samples;
  sweep.degree_cap = degree_cap;
  sweep.seed_base = seed_base;
  sweep.min_margin = Scalar::one(mode);
  sweep.results.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const BlaschkeProduct b =
        sample_omega(seed_base + i, i % (degree_cap + 1));
    TruncatedSeries omega = blaschke_series(b, sweep.horizon.horizon);
    if (mode == Mode::floating) omega = omega.to_float();
    BoundCheckResult r = verify_bound(t, omega, mode, b.descriptor());
    for (const BoundCheckRow& row : r.rows) {
      if (scalar_less(row.margin, sweep.min_margin))
        sweep.min_margin = row.margin;
      if (row.pass && !*row.pass) ++sweep.failed_rows;
    }
    if (!r.all_pass) sweep.all_pass = false;
    sweep.results.push_back(std::move(r));
  }
  return sweep;
}

TruncatedSeries pow_series(const TruncatedSeries& p, double beta) {
  if (p.mode() != Mode::floating)
    throw ModeMismatch("pow_series is a float-mode operation");
  return exp_series(Scalar(std::complex<double>(beta)) * log_series(p));
}

namespace {

void push_stage(WorkedExampleReport& r, const std::string& name, bool ok,
                const std::string& detail) {
  r.stages.push_back({name, ok, detail});
  if (!ok) r.all_ok = false;
}

std::string series_tail_str(const TruncatedSeries& s, int from) {
  std::string out = "(";
  for (int i = from; i <= s.order(); ++i) {
    if (i > from) out += ", ";
    out += s[i].str();
  }
  return out + ")";
}

}  // namespace

WorkedExampleReport reproduce_worked_example() {
  WorkedExampleReport r;
  r.all_ok = true;
  r.t = make_rational(1, 2);

  // (a) normalized majorant coefficients through z^5, constant set to 0
  TruncatedSeries f = normalized_coeffs(r.t, 5);
  {
    std::vector<Scalar> v = f.coeffs();
    v[0] = Scalar::integer(0);
    r.normalized = TruncatedSeries(std::move(v));
  }
  {
    const long num[5] = {1, 1, 1, -1, -19};
    const long den[5] = {1, 2, 6, 24, 120};
    bool ok = true;
    for (int i = 1; i <= 5; ++i)
      ok = ok && r.normalized[i] == Scalar::rational(num[i - 1], den[i - 1]);
    push_stage(r, "normalized-coefficients", ok, series_tail_str(r.normalized, 1));
  }

  // (b) Caratheodory segment via h = 1 + z f''/f'
  r.h_segment = convex_to_caratheodory(r.normalized);
  {
    const long expect[4] = {1, 0, -1, -2};
    bool ok = r.h_segment.size() == 4;
    for (int i = 0; ok && i < 4; ++i)
      ok = r.h_segment.coeffs[i] == Scalar::integer(expect[i]);
    std::string detail = "(";
    for (int i = 0; i < r.h_segment.size(); ++i) {
      if (i) detail += ", ";
      detail += r.h_segment.coeffs[i].str();
    }
    push_stage(r, "caratheodory-segment", ok, detail + ")");
  }

  // (c) exact Toeplitz minors, unique degenerate extension
  r.minors = toeplitz_minors(r.h_segment);
  r.minors.t = r.t;
  r.decision = extendability_check(r.t, 5);
  {
    const long expect[5] = {2, 3, 4, 4, 0};
    bool ok = r.minors.minors.size() == 5;
    for (int i = 0; ok && i < 5; ++i)
      ok = r.minors.minors[i] == expect[i];
    ok = ok &&
         r.minors.classification.kind == ExtensionKind::positive_then_zero &&
         r.minors.classification.index == 4 && r.decision.extendable &&
         r.decision.unique;
    std::string detail = "(";
    for (size_t i = 0; i < r.minors.minors.size(); ++i) {
      if (i) detail += ", ";
      detail += rational_str(r.minors.minors[i]);
    }
    detail += "), ";
    detail += extension_kind_name(r.minors.classification.kind);
    push_stage(r, "toeplitz-minors", ok, detail);
  }

  // (d) Cayley transform of the h segment
  {
    std::vector<Scalar> h_series(5, Scalar::integer(0));
    h_series[0] = Scalar::integer(1);
    for (int i = 0; i < 4; ++i) h_series[i + 1] = r.h_segment.coeffs[i];
    r.omega_series =
        cayley(TruncatedSeries(std::move(h_series)), CayleyDirection::c_to_omega);
  }
  {
    const long num[4] = {-1, 1, 3, 9};
    const long den[4] = {2, 4, 8, 16};
    bool ok = r.omega_series.order() == 4 && r.omega_series[0].is_zero();
    for (int i = 1; ok && i <= 4; ++i)
      ok = r.omega_series[i] == Scalar::rational(num[i - 1], den[i - 1]);
    push_stage(r, "cayley-omega", ok, series_tail_str(r.omega_series, 1));
  }

  // (e) Schur parameters and the rational inner function
  r.schur_params = schur_parameters(r.omega_series);
  r.inner = reconstruct_inner(r.omega_series, 4);
  {
    bool ok = r.schur_params.degeneracy && *r.schur_params.degeneracy == 3 &&
              r.schur_params.gammas.size() == 4 &&
              r.schur_params.gammas[0] == Scalar::rational(-1, 2);
    const GaussPoly want_num = {GaussianRational(0), GaussianRational(1),
                                GaussianRational(0), GaussianRational(-1),
                                GaussianRational(-2)};
    const GaussPoly want_den = {GaussianRational(-2), GaussianRational(-1),
                                GaussianRational(0), GaussianRational(1)};
    ok = ok && poly_equal(r.inner.numerator, want_num) &&
         poly_equal(r.inner.denominator, want_den) &&
         r.inner.unimodular == GaussianRational(1);
    push_stage(r, "inner-reconstruction", ok, r.inner.str());
  }

  // (f) back to h as a rational function: h = (D - N)/(D + N)
  {
    r.h_numerator = poly_sub(r.inner.denominator, r.inner.numerator);
    r.h_denominator = poly_add(r.inner.denominator, r.inner.numerator);
    canonical_fraction(r.h_numerator, r.h_denominator);
    const GaussPoly want_num = {GaussianRational(1), GaussianRational(1),
                                GaussianRational(0), GaussianRational(-1),
                                GaussianRational(-1)};
    const GaussPoly want_den = {GaussianRational(1), GaussianRational(0),
                                GaussianRational(0), GaussianRational(0),
                                GaussianRational(1)};
    bool ok = poly_equal(r.h_numerator, want_num) &&
              poly_equal(r.h_denominator, want_den);
    // the reconstructed function must also re-expand to the omega series
    ok = ok && rational_series(r.inner, 4) == r.omega_series;
    push_stage(r, "h-rational", ok,
               "(" + poly_str(r.h_numerator) + ")/(" +
                   poly_str(r.h_denominator) + ")");
  }

  // (g) float cross-check of the closed-form integrand against
  //     f' = exp(int (h-1)/v dv), first 10 coefficients
  {
    const int ord = 9;
    auto poly_to_series = [&](const GaussPoly& p) {
      std::vector<Scalar> v(ord + 1, Scalar::zero(Mode::exact));
      for (size_t i = 0; i < p.size() && i <= size_t(ord); ++i)
        v[i] = Scalar(p[i]);
      return TruncatedSeries(std::move(v));
    };
    const TruncatedSeries h =
        poly_to_series(r.h_numerator) / poly_to_series(r.h_denominator);
    const TruncatedSeries hm1 =
        h - TruncatedSeries::constant(Scalar::integer(1), ord);
    const TruncatedSeries fprime =
        exp_series(integral(shift_down(hm1, 1)).truncated(ord));

    const double s2 = std::sqrt(2.0);
    auto quad = [&](double lin) {
      std::vector<Scalar> v(ord + 1, Scalar(std::complex<double>(0.0)));
      v[0] = Scalar(std::complex<double>(1.0));
      v[1] = Scalar(std::complex<double>(lin));
      v[2] = Scalar(std::complex<double>(1.0));
      return TruncatedSeries(std::move(v));
    };
    std::vector<Scalar> quartic(ord + 1, Scalar(std::complex<double>(0.0)));
    quartic[0] = Scalar(std::complex<double>(1.0));
    quartic[4] = Scalar(std::complex<double>(1.0));
    const TruncatedSeries integrand =
        pow_series(quad(s2), s2 / 4.0) * pow_series(quad(-s2), -s2 / 4.0) *
        pow_series(TruncatedSeries(std::move(quartic)), -0.5);

    r.max_residual = 0.0;
    for (int k = 0; k <= ord; ++k) {
      const double a = fprime[k].to_complex().real();
      const double b = integrand[k].to_complex().real();
      r.fprime_coeffs.push_back(a);
      r.integrand_coeffs.push_back(b);
      const double res = std::abs(fprime[k].to_complex() -
                                  integrand[k].to_complex());
      r.residuals.push_back(res);
      r.max_residual = std::max(r.max_residual, res);
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max residual %.3e", r.max_residual);
    push_stage(r, "integral-crosscheck", r.max_residual < 1e-10, buf);
  }

  return r;
}

}  // namespace krzyz
