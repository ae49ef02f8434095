#include "krzyz/schur.hpp"

#include <algorithm>
#include <cmath>

namespace krzyz {

std::string BlaschkeProduct::descriptor() const {
  std::string out = "blaschke(m=" + std::to_string(zero_order) +
                    ", lambda=" + unimodular.str() + ", zeros=[";
  for (size_t i = 0; i < zeros.size(); ++i) {
    if (i) out += ", ";
    out += zeros[i].str();
  }
  return out + "])";
}

TruncatedSeries cayley(const TruncatedSeries& x, CayleyDirection dir) {
  const Mode m = x.mode();
  const Scalar expected = dir == CayleyDirection::c_to_omega
                              ? Scalar::one(m)
                              : Scalar::zero(m);
  if (x[0] != expected)
    throw BadConstantTerm(
        dir == CayleyDirection::c_to_omega
            ? "Cayley c_to_omega needs constant term 1"
            : "Cayley omega_to_c needs constant term 0");
  const TruncatedSeries one = TruncatedSeries::constant(Scalar::one(m),
                                                        x.order());
  return (one - x) / (one + x);
}

namespace {

bool sq_modulus_is_one(const Scalar& g) {
  if (g.is_exact()) return g.exact().norm_sq() == 1;
  return std::abs(1.0 - std::norm(g.to_complex())) < 1e-9;
}

bool sq_modulus_above_one(const Scalar& g) {
  if (g.is_exact()) return g.exact().norm_sq() > 1;
  return std::norm(g.to_complex()) > 1.0 + 1e-9;
}

}  // namespace

SchurParameters schur_parameters(const TruncatedSeries& omega) {
  if (!omega[0].is_zero())
    throw CompositionAtNonzero("Schur recursion needs omega(0) = 0");
  if (omega.order() < 1)
    throw InsufficientOrder("omega must carry at least the z coefficient");
  const Mode m = omega.mode();
  TruncatedSeries phi = shift_down(omega, 1);
  SchurParameters out;
  for (int k = 0;; ++k) {
    const Scalar gamma = phi[0];
    if (sq_modulus_above_one(gamma))
      throw NotInOmega("Schur parameter with modulus above 1 at index " +
                       std::to_string(k));
    out.gammas.push_back(gamma);
    if (sq_modulus_is_one(gamma)) {
      // A Schur-class function with a unimodular value at 0 is that
      // constant; leftover coefficients mean the input was not in the class.
      if (m == Mode::exact) {
        for (int j = 1; j <= phi.order(); ++j)
          if (!phi[j].is_zero())
            throw NotInOmega(
                "unimodular Schur parameter with a nonconstant remainder");
      } else {
        out.numerically_degenerate = true;
      }
      out.degeneracy = k;
      return out;
    }
    if (phi.order() == 0) return out;  // truncation exhausted, no verdict
    const TruncatedSeries num =
        phi - TruncatedSeries::constant(gamma, phi.order());
    const TruncatedSeries den =
        TruncatedSeries::constant(Scalar::one(m), phi.order()) -
        gamma.conj() * phi;
    phi = shift_down(num / den, 1);
  }
}

TruncatedSeries schur_synthesis(const SchurParameters& params, int order) {
  if (params.gammas.empty())
    throw InvalidParameters("no Schur parameters to synthesize from");
  const int last = static_cast<int>(params.gammas.size()) - 1;
  if (params.degeneracy && *params.degeneracy != last)
    throw InvalidParameters("degeneracy index must point at the last gamma");
  for (int k = 0; k < last; ++k)
    if (sq_modulus_is_one(params.gammas[k]) ||
        sq_modulus_above_one(params.gammas[k]))
      throw InvalidParameters("interior Schur parameter with |gamma| >= 1");
  if (params.degeneracy) {
    if (!sq_modulus_is_one(params.gammas[last]))
      throw InvalidParameters("degenerate parameter must be unimodular");
  } else if (sq_modulus_above_one(params.gammas[last])) {
    throw InvalidParameters("Schur parameter with modulus above 1");
  }
  if (order < 1) throw Error("synthesis order must be >= 1");

  const int ord = order - 1;  // order of phi
  TruncatedSeries phi = TruncatedSeries::constant(params.gammas[last], ord);
  for (int k = last - 1; k >= 0; --k) {
    const Scalar& g = params.gammas[k];
    const TruncatedSeries zphi = shift_up(phi, 1);
    const TruncatedSeries num =
        TruncatedSeries::constant(g, ord) + zphi;
    const TruncatedSeries den =
        TruncatedSeries::constant(Scalar::one(phi.mode()), ord) +
        g.conj() * zphi;
    phi = num / den;
  }
  // omega = z phi at the requested order (one above phi's)
  std::vector<Scalar> out(order + 1, Scalar::zero(phi.mode()));
  for (int k = 0; k <= ord; ++k) out[k + 1] = phi[k];
  return TruncatedSeries(std::move(out));
}

namespace {

// ---- reconstruct_inner -------------------------------------------------

// Null space of an M x N rational matrix by Gauss-Jordan elimination.
std::vector<std::vector<mpq_class>> null_space(
    std::vector<std::vector<mpq_class>> a, int cols) {
  const int rows = static_cast<int>(a.size());
  std::vector<int> pivot_of_col(cols, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    const mpq_class inv = a[r][c];
    for (int j = 0; j < cols; ++j) a[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_of_col[c] = r;
    ++r;
  }
  std::vector<std::vector<mpq_class>> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<mpq_class> v(cols, 0);
    v[c] = 1;
    for (int cc = 0; cc < cols; ++cc)
      if (pivot_of_col[cc] >= 0) v[cc] = -a[pivot_of_col[cc]][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

RationalInner reconstruct_inner(const TruncatedSeries& omega, int degree) {
  if (omega.mode() != Mode::exact)
    throw FloatModeRefused(
        "inner reconstruction makes exact rank decisions; use exact input");
  if (!omega[0].is_zero())
    throw CompositionAtNonzero("inner reconstruction needs omega(0) = 0");
  if (degree < 1) throw Error("degree must be >= 1");
  const int m_ord = omega.order();
  const int n = degree;

  // Unknowns alpha_0..alpha_{n-1} split into real and imaginary parts
  // (columns 2j, 2j+1). For k = 1..order:
  //   sum_j alpha_j {omega}_{k-j} - lambda conj(alpha_{n-k}) = 0.
  auto solve_for = [&](const GaussianRational& lambda)
      -> std::vector<std::vector<mpq_class>> {
    std::vector<std::vector<mpq_class>> rows;
    for (int k = 1; k <= m_ord; ++k) {
      std::vector<mpq_class> re_row(2 * n, 0), im_row(2 * n, 0);
      for (int j = 0; j < n; ++j) {
        if (k - j < 0) continue;
        const GaussianRational w = omega[k - j].exact();
        re_row[2 * j] += w.real();
        re_row[2 * j + 1] += -w.imag();
        im_row[2 * j] += w.imag();
        im_row[2 * j + 1] += w.real();
      }
      const int p = n - k;
      if (p >= 0 && p < n) {
        // lambda * conj(alpha_p): real lr*x + li*y, imag li*x - lr*y
        re_row[2 * p] -= lambda.real();
        re_row[2 * p + 1] -= lambda.imag();
        im_row[2 * p] -= lambda.imag();
        im_row[2 * p + 1] += lambda.real();
      }
      rows.push_back(std::move(re_row));
      rows.push_back(std::move(im_row));
    }
    return null_space(std::move(rows), 2 * n);
  };

  const GaussianRational candidates[2] = {GaussianRational(1),
                                          GaussianRational::i()};
  std::vector<mpq_class> solution;
  GaussianRational lambda_used(0);
  for (const GaussianRational& lambda : candidates) {
    auto basis = solve_for(lambda);
    if (basis.size() >= 2)
      throw RankDeficient(
          "multiple inner functions match; lower the requested degree");
    if (basis.size() == 1) {
      solution = std::move(basis.front());
      lambda_used = lambda;
      break;
    }
  }
  if (lambda_used.is_zero())
    throw SingularSystem(
        "no rational inner function of this degree matches the series");

  GaussPoly alpha(n);
  for (int j = 0; j < n; ++j)
    alpha[j] = GaussianRational(solution[2 * j], solution[2 * j + 1]);
  if (alpha[0].is_zero())
    throw SingularSystem("matched denominator vanishes at 0");

  GaussPoly num(n + 1, GaussianRational(0));
  for (int j = 0; j < n; ++j) num[j + 1] = lambda_used * alpha[n - 1 - j].conj();
  GaussPoly den = alpha;  // keep full length until lambda is derived
  canonical_fraction(num, den);

  // lambda from num = lambda z den* (den padded back to length n).
  GaussPoly padded = den;
  padded.resize(n, GaussianRational(0));
  GaussianRational lambda_out(0);
  for (int j = 0; j < n; ++j) {
    const GaussianRational rev = padded[n - 1 - j].conj();
    if (!rev.is_zero()) {
      lambda_out = num.at(j + 1) / rev;
      break;
    }
  }

  RationalInner out;
  out.numerator = poly_trim(num);
  out.denominator = poly_trim(den);
  out.unimodular = lambda_out;
  return out;
}

TruncatedSeries blaschke_series(const BlaschkeProduct& b, int order) {
  if (b.zero_order < 1) throw Error("zero_order must be >= 1");
  if (b.unimodular.norm_sq() != 1)
    throw Error("Blaschke constant must be unimodular");
  for (const auto& a : b.zeros)
    if (a.norm_sq() >= 1)
      throw ZeroOutsideDisk("Blaschke zero with |a| >= 1: " + a.str());
  if (order < 0) throw Error("negative order");
  TruncatedSeries acc =
      TruncatedSeries::constant(Scalar(b.unimodular), order);
  for (const auto& a : b.zeros) {
    // (a - z)/(1 - conj(a) z)
    std::vector<Scalar> num(order + 1, Scalar::zero(Mode::exact));
    std::vector<Scalar> den(order + 1, Scalar::zero(Mode::exact));
    num[0] = Scalar(a);
    if (order >= 1) num[1] = Scalar::integer(-1);
    den[0] = Scalar::integer(1);
    if (order >= 1) den[1] = Scalar(-a.conj());
    acc = acc * (TruncatedSeries(std::move(num)) /
                 TruncatedSeries(std::move(den)));
  }
  return shift_up(acc, b.zero_order);
}

TruncatedSeries rational_series(const RationalInner& r, int order,
                                Mode mode) {
  auto to_series = [&](const GaussPoly& p) {
    std::vector<Scalar> v(order + 1, Scalar::zero(Mode::exact));
    for (size_t i = 0; i < p.size() && i <= static_cast<size_t>(order); ++i)
      v[i] = Scalar(p[i]);
    TruncatedSeries s{std::move(v)};
    return mode == Mode::floating ? s.to_float() : s;
  };
  return to_series(r.numerator) / to_series(r.denominator);
}

GaussianRational evaluate(const RationalInner& r, const GaussianRational& z) {
  return poly_eval(r.numerator, z) / poly_eval(r.denominator, z);
}

std::string RationalInner::str() const {
  const GaussPoly num = poly_trim(numerator);
  int v = 0;
  while (v < static_cast<int>(num.size()) && num[v].is_zero()) ++v;
  GaussPoly inner(num.begin() + v, num.end());
  std::string zpow = v == 0 ? "" : (v == 1 ? "z" : "z^" + std::to_string(v));
  std::string num_str;
  if (poly_degree(inner) <= 0) {
    // constant * z^v renders as a plain monomial
    const GaussianRational c = inner.empty() ? GaussianRational(0) : inner[0];
    if (c == GaussianRational(1))
      num_str = zpow.empty() ? "1" : zpow;
    else if (c == GaussianRational(-1))
      num_str = "-" + (zpow.empty() ? std::string("1") : zpow);
    else
      num_str = c.str() + zpow;
  } else {
    num_str = zpow + "(" + poly_str(inner) + ")";
  }
  if (poly_degree(denominator) <= 0 && !denominator.empty() &&
      denominator[0] == GaussianRational(1))
    return num_str;
  return num_str + "/(" + poly_str(denominator) + ")";
}

namespace {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

}  // namespace

BlaschkeProduct sample_omega(std::uint64_t seed, int degree,
                             int denominator_bound) {
  if (degree < 0) throw Error("degree must be >= 0");
  if (denominator_bound < 1) throw Error("denominator bound must be >= 1");
  SplitMix64 rng{seed};
  BlaschkeProduct b;
  b.zero_order = 1 + static_cast<int>(rng.next() % 2);
  static const GaussianRational lambdas[4] = {
      GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
      -GaussianRational::i()};
  b.unimodular = lambdas[rng.next() % 4];
  b.zeros.reserve(degree);
  for (int i = 0; i < degree; ++i) {
    for (;;) {
      const long q = 1 + static_cast<long>(rng.next() % denominator_bound);
      const long p = static_cast<long>(rng.next() % (2 * q + 1)) - q;
      const long r = static_cast<long>(rng.next() % (2 * q + 1)) - q;
      if (p * p + r * r >= q * q) continue;
      b.zeros.emplace_back(make_rational(p, q), make_rational(r, q));
      break;
    }
  }
  return b;
}

}  // namespace krzyz
