#include "krzyz/cli.hpp"

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "krzyz/bounds.hpp"
#include "krzyz/report.hpp"

namespace krzyz::cli {

namespace {

// Rationals arrive only as "p/q" or integer literals. Decimal input is
// rejected: silently coercing 0.5 to 1/2 would fake exactness.
mpq_class parse_rational(const std::string& s) {
  if (s.find('.') != std::string::npos)
    throw Error("'" + s +
                "' is a decimal; pass an exact rational like 1/2 instead");
  const auto slash = s.find('/');
  auto parse_int = [](const std::string& part) {
    if (part.empty() ||
        part.find_first_not_of("+-0123456789") != std::string::npos ||
        part.find_first_of("+-", 1) != std::string::npos)
      throw Error("'" + part + "' is not an integer");
    return mpz_class(part);
  };
  mpz_class num = parse_int(s.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string::npos) {
    den = parse_int(s.substr(slash + 1));
    if (den <= 0) throw Error("denominator must be positive in '" + s + "'");
  }
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

Rotation parse_phi(const std::string& s) {
  if (s == "0") return Rotation::quarter(0);
  if (s == "pi/2") return Rotation::quarter(1);
  if (s == "pi") return Rotation::quarter(2);
  if (s == "-pi/2") return Rotation::quarter(3);
  throw Error("--phi accepts 0, pi, pi/2 or -pi/2");
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

nlohmann::json row_json(const BoundCheckRow& row) {
  nlohmann::json j{{"n", row.index},
                   {"coefficient", row.coefficient.str()},
                   {"sq_modulus", row.sq_modulus.str()},
                   {"margin", row.margin.str()}};
  if (row.pass) j["pass"] = *row.pass;
  if (row.below_conjectural) j["below_conjectural"] = *row.below_conjectural;
  return j;
}

struct CommandResult {
  Report report;
  int exit_code = 0;
};

CommandResult run_coeffs(const mpq_class& t, int n, bool normalized) {
  Report r;
  r.command = "coeffs";
  r.inputs = {{"t", rational_str(t)}, {"n", n}, {"normalized", normalized}};
  ReportTable table{{"index", "coefficient"}, {}};
  nlohmann::json coeffs = nlohmann::json::array();
  if (normalized) {
    const TruncatedSeries f = normalized_coeffs(t, n);
    for (int k = 1; k <= n; ++k) {
      coeffs.push_back(f[k].str());
      table.rows.push_back({std::to_string(k), f[k].str()});
    }
    r.payload = {{"coefficients", coeffs},
                 {"first_index", 1},
                 {"description", "coefficients of F(z,t) = F*(z,t)/{F*}_1(t)"}};
  } else {
    const MajorantCoefficients f = fstar_coeffs(t, n);
    for (int k = 0; k <= n; ++k) {
      coeffs.push_back(f.rational_part[k].str());
      table.rows.push_back({std::to_string(k), f.rational_part[k].str()});
    }
    r.payload = {{"coefficients", coeffs},
                 {"first_index", 0},
                 {"prefactor", MajorantCoefficients::prefactor},
                 {"description",
                  "rational part U of F*(z,t) = e^{-t} U(z); multiply by "
                  "the prefactor for the true coefficients"}};
  }
  r.table = std::move(table);
  return {std::move(r), 0};
}

CommandResult run_minors(const mpq_class& t, int n) {
  Report r;
  r.command = "minors";
  r.inputs = {{"t", rational_str(t)}, {"n", n}};
  const ToeplitzMinorReport rep = minors_for_horizon(t, n);
  const CaratheodorySegment seg = h_closed_form(t, n - 1);
  nlohmann::json minors = nlohmann::json::array();
  ReportTable table{{"k", "M_k"}, {}};
  for (size_t k = 0; k < rep.minors.size(); ++k) {
    minors.push_back(rational_str(rep.minors[k]));
    table.rows.push_back({std::to_string(k), rational_str(rep.minors[k])});
  }
  nlohmann::json segment = nlohmann::json::array();
  for (const Scalar& c : seg.coeffs) segment.push_back(c.str());
  r.payload = {{"minors", minors},
               {"segment", segment},
               {"classification", extension_kind_name(rep.classification.kind)},
               {"classification_index", rep.classification.index}};
  r.summary = {{"t", rational_str(t)},
               {"classification",
                std::string(extension_kind_name(rep.classification.kind))}};
  r.table = std::move(table);
  return {std::move(r), 0};
}

CommandResult run_classify(const mpq_class& t, int n) {
  Report r;
  r.command = "classify";
  r.inputs = {{"t", rational_str(t)}, {"n", n}};
  const ExtensionDecision d = extendability_check(t, n);
  const BoundHorizon h = bound_horizon(t);
  r.payload = {{"extendable", d.extendable},
               {"unique", d.unique},
               {"horizon", h.horizon},
               {"boundary", h.boundary},
               {"bound", float_str(h.bound)}};
  r.summary = {{"extendable", bool_str(d.extendable)},
               {"unique", bool_str(d.unique)},
               {"horizon", std::to_string(h.horizon)}};
  r.table = ReportTable{
      {"t", "n", "extendable", "unique", "horizon", "boundary"},
      {{rational_str(t), std::to_string(n), bool_str(d.extendable),
        bool_str(d.unique), std::to_string(h.horizon), bool_str(h.boundary)}}};
  return {std::move(r), 0};
}

CommandResult run_bound_check(const mpq_class& t, int samples, int degree,
                              std::uint64_t seed, Mode mode) {
  Report r;
  r.command = "bound-check";
  r.mode = mode;
  r.inputs = {{"t", rational_str(t)},
              {"samples", samples},
              {"degree", degree},
              {"seed", seed},
              {"mode", mode_name(mode)}};
  const SweepResult sweep = bound_check_sweep(t, samples, degree, seed, mode);
  ReportTable table{
      {"seed", "degree", "n", "sq_modulus", "margin", "pass"}, {}};
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < sweep.samples; ++i) {
    const BoundCheckResult& res = sweep.results[i];
    for (const BoundCheckRow& row : res.rows) {
      const std::uint64_t s = sweep.seed_base + i;
      table.rows.push_back({std::to_string(s),
                            std::to_string(i % (sweep.degree_cap + 1)),
                            std::to_string(row.index), row.sq_modulus.str(),
                            row.margin.str(), bool_str(*row.pass)});
      rows.push_back(
          {{"seed", s}, {"n", row.index}, {"sq_modulus", row.sq_modulus.str()},
           {"margin", row.margin.str()}, {"pass", *row.pass}});
    }
  }
  r.payload = {{"horizon", sweep.horizon.horizon},
               {"bound", float_str(sweep.horizon.bound)},
               {"all_pass", sweep.all_pass},
               {"failed_rows", sweep.failed_rows},
               {"min_margin", sweep.min_margin.str()},
               {"rows", rows}};
  r.summary = {{"t", rational_str(t)},
               {"horizon", std::to_string(sweep.horizon.horizon)},
               {"samples", std::to_string(samples)},
               {"all_pass", bool_str(sweep.all_pass)},
               {"min_margin", sweep.min_margin.str()}};
  r.table = std::move(table);
  return {std::move(r), sweep.all_pass ? 0 : 1};
}

CommandResult run_extremal(const mpq_class& t, int n, const std::string& phi) {
  Report r;
  r.command = "extremal";
  r.inputs = {{"t", rational_str(t)}, {"n", n}, {"phi", phi}};
  const BoundCheckResult res = extremal_equality(t, n, parse_phi(phi));
  ReportTable table{{"index", "sq_modulus", "margin"}, {}};
  nlohmann::json rows = nlohmann::json::array();
  for (const BoundCheckRow& row : res.rows) {
    table.rows.push_back(
        {std::to_string(row.index), row.sq_modulus.str(), row.margin.str()});
    rows.push_back(row_json(row));
  }
  const ExtremalVerdict& v = *res.extremal;
  r.payload = {{"horizon", res.horizon.horizon},
               {"rows", rows},
               {"equality_at_n", v.equality_at_n},
               {"zero_off_support", v.zero_off_support},
               {"bounded_on_support", v.bounded_on_support},
               {"ok", v.ok()}};
  r.summary = {{"t", rational_str(t)},
               {"n", std::to_string(n)},
               {"phi", phi},
               {"ok", bool_str(v.ok())}};
  r.table = std::move(table);
  return {std::move(r), v.ok() ? 0 : 1};
}

CommandResult run_probe(const mpq_class& t, std::uint64_t omega_seed, int from,
                        int to, int degree) {
  Report r;
  r.command = "probe";
  r.inputs = {{"t", rational_str(t)},
              {"omega_seed", omega_seed},
              {"from", from},
              {"to", to},
              {"degree", degree}};
  const BlaschkeProduct b = sample_omega(omega_seed, degree);
  const TruncatedSeries omega = blaschke_series(b, to);
  const BoundCheckResult res = probe_beyond(t, omega, from, to, b.descriptor());
  ReportTable table{{"n", "sq_modulus", "below_conjectural"}, {}};
  nlohmann::json rows = nlohmann::json::array();
  for (const BoundCheckRow& row : res.rows) {
    table.rows.push_back({std::to_string(row.index), row.sq_modulus.str(),
                          bool_str(*row.below_conjectural)});
    rows.push_back(row_json(row));
  }
  r.payload = {
      {"label", "conjectural"},
      {"note",
       "no theorem applies beyond the horizon; these rows carry no verdict"},
      {"horizon", res.horizon.horizon},
      {"conjectural_sq", float_str(*res.conjectural_sq)},
      {"omega", res.omega_descriptor},
      {"rows", rows}};
  r.summary = {{"t", rational_str(t)},
               {"label", "conjectural (no verdict)"},
               {"omega", res.omega_descriptor},
               {"conjectural_sq", float_str(*res.conjectural_sq)}};
  r.table = std::move(table);
  return {std::move(r), 0};
}

CommandResult run_example() {
  Report r;
  r.command = "example-krzyz7";
  const WorkedExampleReport w = reproduce_worked_example();
  nlohmann::json stages = nlohmann::json::array();
  for (const WorkedExampleStage& s : w.stages)
    stages.push_back({{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}});
  nlohmann::json normalized = nlohmann::json::array();
  for (int k = 1; k <= w.normalized.order(); ++k)
    normalized.push_back(w.normalized[k].str());
  nlohmann::json segment = nlohmann::json::array();
  for (const Scalar& c : w.h_segment.coeffs) segment.push_back(c.str());
  nlohmann::json minors = nlohmann::json::array();
  for (const mpq_class& m : w.minors.minors) minors.push_back(rational_str(m));
  nlohmann::json omega = nlohmann::json::array();
  for (int k = 1; k <= w.omega_series.order(); ++k)
    omega.push_back(w.omega_series[k].str());
  r.payload = {{"stages", stages},
               {"all_ok", w.all_ok},
               {"normalized", normalized},
               {"h_segment", segment},
               {"minors", minors},
               {"omega_series", omega},
               {"inner", w.inner.str()},
               {"h_rational", "(" + poly_str(w.h_numerator) + ")/(" +
                                  poly_str(w.h_denominator) + ")"},
               {"max_residual", float_str(w.max_residual)}};
  for (const WorkedExampleStage& s : w.stages)
    r.summary.push_back(
        {std::string(s.ok ? "[pass] " : "[FAIL] ") + s.name, s.detail});
  r.summary.push_back({"all_ok", bool_str(w.all_ok)});
  // nested stage log: no flat tabular view, csv is refused
  return {std::move(r), w.all_ok ? 0 : 1};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  if (const char* tol = std::getenv("KRZYZ_FLOAT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(tol, &end);
    if (end && *end == '\0' && v > 0) set_float_tolerance(v);
  }

  CLI::App app{
      "exact-arithmetic toolkit for sharp Taylor-coefficient bounds of "
      "bounded nonvanishing functions"};
  app.require_subcommand(1);

  std::string t_str, format = "table", phi = "0", mode_str = "exact";
  int n = 0, samples = 1000, degree = 4, from = 0, to = 0;
  std::uint64_t seed = 0, omega_seed = 0;
  bool normalized = false;

  auto* coeffs = app.add_subcommand(
      "coeffs", "Taylor coefficients of the majorant family");
  coeffs->add_option("--t", t_str, "parameter t as p/q")->required();
  coeffs->add_option("--n", n, "highest coefficient index")->required();
  coeffs->add_flag("--normalized", normalized,
                   "report F = F*/{F*}_1 instead of the e^{-t}-prefactored U");
  coeffs->add_option("--format", format, "json|csv|table");

  auto* minors = app.add_subcommand(
      "minors", "Toeplitz minors deciding extendability of the degree-n "
                "segment of F");
  minors->add_option("--t", t_str, "parameter t as p/q")->required();
  minors->add_option("--n", n, "Taylor horizon (reports M_0..M_{n-1})")
      ->required()
      ->check(CLI::Range(2, 1000000));
  minors->add_option("--format", format, "json|csv|table");

  auto* classify = app.add_subcommand(
      "classify", "extendability and uniqueness of the degree-n segment");
  classify->add_option("--t", t_str, "parameter t as p/q")->required();
  classify->add_option("--n", n, "segment degree")->required();
  classify->add_option("--format", format, "json|csv|table");

  auto* bound_check = app.add_subcommand(
      "bound-check", "sweep sampled Blaschke products through the sharp "
                     "bound up to N(t)");
  bound_check->add_option("--t", t_str, "parameter t as p/q")->required();
  bound_check->add_option("--samples", samples, "number of samples");
  bound_check->add_option("--degree", degree,
                          "degree cap; sample i uses degree i mod (cap+1)");
  bound_check->add_option("--seed", seed, "seed base");
  bound_check->add_option("--mode", mode_str, "exact|float");
  bound_check->add_option("--format", format, "json|csv|table");

  auto* extremal = app.add_subcommand(
      "extremal", "sharpness of the bound on a rotation lambda z^n");
  extremal->add_option("--t", t_str, "parameter t as p/q")->required();
  extremal->add_option("--n", n, "rotation power")->required();
  extremal->add_option("--phi", phi, "0|pi|pi/2|-pi/2");
  extremal->add_option("--format", format, "json|csv|table");

  auto* probe = app.add_subcommand(
      "probe", "conjectural report beyond the proven horizon (no verdict)");
  probe->add_option("--t", t_str, "parameter t as p/q")->required();
  probe->add_option("--omega-seed", omega_seed, "sample seed")->required();
  probe->add_option("--from", from, "first index, must exceed N(t)")
      ->required();
  probe->add_option("--to", to, "last index")->required();
  probe->add_option("--degree", degree, "Blaschke degree of the sample");
  probe->add_option("--format", format, "json|csv|table");

  auto* example = app.add_subcommand(
      "example-krzyz7",
      "end-to-end degenerate extension pipeline at t = 1/2");
  example->add_option("--format", format, "json|table (no csv: stage log)");

  std::vector<const char*> argv;
  argv.push_back("krzyz");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const ReportFormat fmt = parse_format(format);
    Mode mode = Mode::exact;
    if (mode_str == "float")
      mode = Mode::floating;
    else if (mode_str != "exact")
      throw Error("--mode accepts exact or float");

    CommandResult result;
    if (coeffs->parsed())
      result = run_coeffs(parse_rational(t_str), n, normalized);
    else if (minors->parsed())
      result = run_minors(parse_rational(t_str), n);
    else if (classify->parsed())
      result = run_classify(parse_rational(t_str), n);
    else if (bound_check->parsed())
      result = run_bound_check(parse_rational(t_str), samples, degree, seed,
                               mode);
    else if (extremal->parsed())
      result = run_extremal(parse_rational(t_str), n, phi);
    else if (probe->parsed())
      result = run_probe(parse_rational(t_str), omega_seed, from, to, degree);
    else
      result = run_example();

    out << emit(result.report, fmt);
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace krzyz::cli
