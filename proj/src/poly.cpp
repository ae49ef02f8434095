#include "krzyz/poly.hpp"

#include <algorithm>

namespace krzyz {

GaussPoly poly_add(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return poly_trim(out);
}

GaussPoly poly_sub(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  return poly_trim(out);
}

GaussPoly poly_mul(const GaussPoly& a, const GaussPoly& b) {
  if (a.empty() || b.empty()) return {GaussianRational(0)};
  GaussPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(out);
}

GaussPoly poly_scale(const GaussianRational& c, const GaussPoly& a) {
  GaussPoly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return poly_trim(out);
}

GaussPoly poly_trim(const GaussPoly& a) {
  GaussPoly out = a;
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  if (out.empty()) out.push_back(GaussianRational(0));
  return out;
}

bool poly_equal(const GaussPoly& a, const GaussPoly& b) {
  const GaussPoly ta = poly_trim(a);
  const GaussPoly tb = poly_trim(b);
  return ta == tb;
}

GaussianRational poly_eval(const GaussPoly& a, const GaussianRational& z) {
  GaussianRational acc(0);
  for (size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
  return acc;
}

int poly_degree(const GaussPoly& a) {
  for (size_t i = a.size(); i-- > 0;)
    if (!a[i].is_zero()) return static_cast<int>(i);
  return -1;
}

namespace {

// Nearest Gaussian integer, for the Euclidean step in Z[i].
GaussianRational gauss_round(const GaussianRational& z) {
  auto round_q = [](const mpq_class& q) {
    mpq_class shifted = q + mpq_class(1, 2);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num().get_mpz_t(),
               shifted.get_den().get_mpz_t());
    return mpq_class(fl);
  };
  return GaussianRational(round_q(z.real()), round_q(z.imag()));
}

}  // namespace

GaussianRational gaussian_int_gcd(GaussianRational a, GaussianRational b) {
  while (!b.is_zero()) {
    const GaussianRational q = gauss_round(a / b);
    const GaussianRational r = a - q * b;
    a = b;
    b = r;
  }
  return a;
}

void canonical_fraction(GaussPoly& num, GaussPoly& den) {
  mpz_class l(1);
  auto fold_den = [&l](const GaussianRational& c) {
    mpz_class tmp;
    mpz_lcm(tmp.get_mpz_t(), l.get_mpz_t(), c.real().get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), tmp.get_mpz_t(), c.imag().get_den().get_mpz_t());
  };
  for (const auto& c : num) fold_den(c);
  for (const auto& c : den) fold_den(c);
  const GaussianRational scale{mpq_class(l)};
  for (auto& c : num) c *= scale;
  for (auto& c : den) c *= scale;

  GaussianRational g(0);
  for (const auto& c : num)
    if (!c.is_zero()) g = g.is_zero() ? c : gaussian_int_gcd(g, c);
  for (const auto& c : den)
    if (!c.is_zero()) g = g.is_zero() ? c : gaussian_int_gcd(g, c);
  if (!g.is_zero()) {
    for (auto& c : num) c = c / g;
    for (auto& c : den) c = c / g;
  }

  const int lead = poly_degree(den);
  if (lead < 0) return;
  const GaussianRational units[4] = {
      GaussianRational(1), GaussianRational::i(), GaussianRational(-1),
      -GaussianRational::i()};
  for (const GaussianRational& u : units) {
    const GaussianRational c = den[lead] * u;
    if (c.real() > 0 && -c.real() < c.imag() && c.imag() <= c.real()) {
      for (auto& x : num) x *= u;
      for (auto& x : den) x *= u;
      return;
    }
  }
}

std::string poly_str(const GaussPoly& a) {
  std::string out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    std::string coeff = a[i].str();
    const bool complex_coeff = !a[i].is_real() && a[i].real() != 0;
    std::string term;
    if (i == 0) {
      term = complex_coeff ? "(" + coeff + ")" : coeff;
    } else {
      std::string var = i == 1 ? "z" : "z^" + std::to_string(i);
      if (a[i] == GaussianRational(1))
        term = var;
      else if (a[i] == GaussianRational(-1))
        term = "-" + var;
      else if (complex_coeff)
        term = "(" + coeff + ")" + var;
      else
        term = coeff + var;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace krzyz
