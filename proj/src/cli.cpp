#include "rothyp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "rothyp/classifier.hpp"
#include "rothyp/errors.hpp"
#include "rothyp/geometry.hpp"
#include "rothyp/lk_operator.hpp"
#include "rothyp/profile_solvers.hpp"
#include "rothyp/proof_audit.hpp"
#include "rothyp/spec_document.hpp"
#include "rothyp/symfunc.hpp"

#ifndef ROTHYP_VERSION
#define ROTHYP_VERSION "0.0.0"
#endif

namespace rothyp::cli {

using nlohmann::json;

const char* version() { return ROTHYP_VERSION; }

namespace {

constexpr double kLkTolerance = 1e-4;
constexpr double kMinimalTolerance = 1e-6;

struct Options {
  std::string spec_path;
  std::string n_text;
  std::string k_text = "auto";
  int samples = 64;
  double tol_fit = 1e-6;
  double tol_flat = 1e-8;
  double tol_min = 1e-8;
  std::string out_path;
  std::string format = "json";
  // solve-minimal
  double c1 = 1.0;
  double c2 = 0.0;
  double f0 = 1.0;
  double f1 = 2.0;
  int branch = 1;
};

struct DimensionRange {
  int lo = 3;
  int hi = 3;
};

DimensionRange parse_dimensions(const std::string& text) {
  DimensionRange range;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      range.lo = range.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      range.lo = std::stoi(text.substr(0, dots));
      range.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--n", "expected an integer or a range a..b, got '" + text + "'");
  }
  if (range.lo > range.hi) throw CLI::ValidationError("--n", "empty range " + text);
  return range;
}

std::string big(const BigInt& v) { return v.str(); }

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

/// Shared context of one invocation.
class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out), start_(std::chrono::steady_clock::now()) {}

  ProfileSpecDocument spec() const {
    if (opt_.spec_path.empty()) throw CLI::RequiredError("--spec");
    auto doc = ProfileSpecDocument::load(opt_.spec_path);
    if (!opt_.n_text.empty()) doc.n = parse_dimensions(opt_.n_text).lo;
    if (doc.n < 3) throw SpecParseError("n", "dimension must be at least 3");
    return doc;
  }

  json report(const std::string& command, json inputs, json outputs, json tolerances) const {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return json{{"command", command},
                {"version", version()},
                {"inputs", std::move(inputs)},
                {"outputs", std::move(outputs)},
                {"tolerances", std::move(tolerances)},
                {"elapsed_seconds", elapsed}};
  }

  /// Writes to --out when given, otherwise to the output stream.
  void emit(const std::string& text) const {
    if (opt_.out_path.empty()) {
      out_ << text;
      if (!text.empty() && text.back() != '\n') out_ << '\n';
      return;
    }
    std::ofstream file(opt_.out_path);
    if (!file) throw DomainError("cannot write " + opt_.out_path);
    file << text;
  }

  const Options& opt() const { return opt_; }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
};

int resolve_k(const std::string& text, int n) {
  if (text == "auto") return n - 3;
  try {
    std::size_t used = 0;
    const int k = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    if (k < 0 || k > n - 2) throw CLI::ValidationError("--k", "order must lie in 0.." + std::to_string(n - 2));
    return k;
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--k", "expected an integer or 'auto', got '" + text + "'");
  }
}

int cmd_curvature(const Session& s) {
  const auto doc = s.spec();
  const auto profile = doc.build();
  const int n = doc.n;
  json rows = json::array();
  std::ostringstream csv;
  csv << std::setprecision(17) << "r,k1,kj,H,K";
  for (int m = 1; m <= n - 1; ++m) csv << ",s" << m;
  csv << '\n';
  for (double r : profile.domain().interior_samples(s.opt().samples)) {
    const auto spectrum = shape_spectrum(profile, r, n);
    const auto sym = symmetric_functions(spectrum);
    rows.push_back({{"r", r}, {"k1", spectrum.k1}, {"kj", spectrum.kj}, {"H", spectrum.H}, {"K", spectrum.K}, {"s", sym.s}});
    csv << r << ',' << spectrum.k1 << ',' << spectrum.kj << ',' << spectrum.H << ',' << spectrum.K;
    for (double v : sym.s) csv << ',' << v;
    csv << '\n';
  }
  if (s.opt().format == "csv") {
    s.emit(csv.str());
  } else {
    s.emit(s.report("curvature", json::parse(doc.dump()), {{"epsilon", epsilon(n)}, {"samples", rows}}, json::object())
               .dump(2));
  }
  return kOk;
}

int cmd_lk(const Session& s) {
  const auto doc = s.spec();
  const auto profile = doc.build();
  const int n = doc.n;
  const int k = resolve_k(s.opt().k_text, n);
  json rows = json::array();
  double worst = 0.0;
  for (double r : profile.domain().interior_samples(s.opt().samples, 0.1)) {
    const auto p = ChartPoint::origin(r, n);
    LkGaussValue closed;
    std::string route = "identity";
    if (k == n - 3) {
      try {
        closed = lk_gauss_closed(profile, p);
        route = "closed";
      } catch (const SingularFormula&) {
        closed = lk_gauss_identity(profile, p, k);
      }
    } else {
      closed = lk_gauss_identity(profile, p, k);
    }
    const Vec numeric = lk_gauss_numeric(profile, p, k, LkOptions{0.0, true});
    const double err = (closed.vector - numeric).norm() / std::max(1.0, closed.vector.norm());
    worst = std::max(worst, err);
    rows.push_back({{"r", r},
                    {"route", route},
                    {"closed", vector_json(closed.vector)},
                    {"numeric", vector_json(numeric)},
                    {"normal_coefficient", closed.normal_coefficient},
                    {"relative_error", err}});
  }
  json outputs{{"k", k}, {"max_relative_error", worst}, {"points", rows}};
  s.emit(s.report("lk", json::parse(doc.dump()), outputs, {{"lk_relative", kLkTolerance}}).dump(2));
  return worst < kLkTolerance ? kOk : kToleranceFailure;
}

int cmd_classify(const Session& s) {
  const auto doc = s.spec();
  const auto profile = doc.build();
  ClassifierOptions options;
  options.samples = s.opt().samples;
  options.tolerances.fit = s.opt().tol_fit;
  options.tolerances.flat = s.opt().tol_flat;
  options.tolerances.minimal = s.opt().tol_min;
  options.seed = seed_from_environment(0);
  const json tolerances{{"fit", options.tolerances.fit},
                        {"flat", options.tolerances.flat},
                        {"minimal", options.tolerances.minimal},
                        {"constancy", options.tolerances.constancy}};
  try {
    const auto v = classify(profile, doc.n, options);
    json outputs{{"case", std::string(to_string(v.verdict))},
                 {"A", matrix_json(v.candidate.A)},
                 {"residual", v.candidate.residual},
                 {"relative_residual", v.candidate.relative_residual},
                 {"eta", v.candidate.eta},
                 {"phiA", v.candidate.phiA},
                 {"lambda", v.candidate.lambda},
                 {"diagonal_pattern", v.candidate.diagonal_pattern},
                 {"regular", v.regular},
                 {"diagnostics", v.diagnostics},
                 {"seed", options.seed}};
    if (v.verdict == EigenCase::Hypersphere) {
      outputs["hypersphere_matrix"] = matrix_json(hypersphere_matrix(v.diagnostics.at("sphere_radius"), doc.n));
    }
    if (s.opt().format == "text") {
      std::ostringstream text;
      text << std::setprecision(10) << "case      " << to_string(v.verdict) << "\nregular   " << (v.regular ? "yes" : "no")
           << "\neta       " << v.candidate.eta << "\nphiA      " << v.candidate.phiA << "\nlambda    "
           << v.candidate.lambda << "\nrel. res  " << v.candidate.relative_residual << '\n';
      s.emit(text.str());
      return kOk;
    }
    s.emit(s.report("classify", json::parse(doc.dump()), outputs, tolerances).dump(2));
    return kOk;
  } catch (const Unclassifiable& e) {
    s.emit(s.report("classify", json::parse(doc.dump()), {{"case", "Unclassifiable"}, {"diagnostic", e.what()}},
                    tolerances)
               .dump(2));
    return kToleranceFailure;
  }
}

int cmd_solve_minimal(const Session& s) {
  const auto& o = s.opt();
  const int n = o.n_text.empty() ? 4 : parse_dimensions(o.n_text).lo;
  const double c1 = o.c1 <= 0.0 ? std::numeric_limits<double>::infinity() : o.c1;
  const auto sol = solve_minimal_profile(n, o.f0, o.f1, c1, o.c2, o.branch, std::max(o.samples, 2));
  double h_max = 0.0, residual_max = 0.0;
  for (const auto& g : sol.grid) {
    h_max = std::max(h_max, std::abs(g.H));
    residual_max = std::max(residual_max, std::abs(g.ode_residual));
  }
  const bool ok = h_max < kMinimalTolerance &&
                  (!sol.hypergeometric_form_available || sol.closed_form_error < kMinimalTolerance);
  if (o.format == "csv") {
    std::ostringstream csv;
    sol.write_csv(csv);
    s.emit(csv.str());
    return ok ? kOk : kToleranceFailure;
  }
  json outputs{{"f_range", {sol.f_lo, sol.f_hi}},
               {"truncated", sol.truncated},
               {"max_abs_H", h_max},
               {"max_abs_ode_residual", residual_max},
               {"hypergeometric_form_available", sol.hypergeometric_form_available},
               {"closed_form_relative_error", sol.closed_form_error},
               {"grid_points", sol.grid.size()}};
  json inputs{{"n", n}, {"c1", o.c1}, {"c2", o.c2}, {"f0", o.f0}, {"f1", o.f1}, {"branch", o.branch}};
  s.emit(s.report("solve-minimal", inputs, outputs, {{"H", kMinimalTolerance}, {"closed_form", kMinimalTolerance}})
             .dump(2));
  return ok ? kOk : kToleranceFailure;
}

int cmd_audit(const Session& s) {
  const auto range = parse_dimensions(s.opt().n_text.empty() ? "3..12" : s.opt().n_text);
  if (range.lo < 3) throw InvalidDimension("audit needs n >= 3");
  json rows = json::array();
  std::ostringstream text;
  text << std::setw(4) << "n" << std::setw(8) << "d=0" << std::setw(12) << "nonzero" << "  beta_sum\n";
  for (int n = range.lo; n <= range.hi; ++n) {
    const auto rep = beta_sum(n);
    rows.push_back({{"n", n},
                    {"a", big(rep.abcd.a)},
                    {"b", big(rep.abcd.b)},
                    {"c", big(rep.abcd.c)},
                    {"d", big(rep.abcd.d)},
                    {"d_zero", rep.abcd.d == 0},
                    {"frak_a", big(rep.gothic.a)},
                    {"frak_b", big(rep.gothic.b)},
                    {"frak_c", big(rep.gothic.c)},
                    {"frak_d", big(rep.gothic.d)},
                    {"frak_e", big(rep.gothic.e)},
                    {"frak_f", big(rep.gothic.f)},
                    {"betas", {big(rep.betas[0]), big(rep.betas[1]), big(rep.betas[2]), big(rep.betas[3])}},
                    {"beta_sum", big(rep.beta_sum)},
                    {"nonvanishing", rep.nonvanishing}});
    text << std::setw(4) << n << std::setw(8) << (rep.abcd.d == 0 ? "yes" : "no") << std::setw(12)
         << (rep.nonvanishing ? "yes" : "ZERO") << "  " << rep.beta_sum << '\n';
  }
  if (s.opt().format == "text") {
    s.emit(text.str());
  } else {
    s.emit(s.report("audit", {{"n", {range.lo, range.hi}}}, {{"table", rows}}, json::object()).dump(2));
  }
  return kOk;
}

int cmd_fixtures(const Session& s) {
  const int n = s.opt().n_text.empty() ? 4 : parse_dimensions(s.opt().n_text).lo;
  json items = json::array();
  for (const auto& f : fixture_profiles(n)) {
    items.push_back({{"name", f.name}, {"expected", f.expected}, {"spec", json::parse(ProfileSpecDocument::from_profile(f.profile, n).dump())}});
  }
  s.emit(s.report("fixtures", {{"n", n}}, {{"fixtures", items}}, json::object()).dump(2));
  return kOk;
}

int cmd_export(const Session& s) {
  const auto doc = s.spec();
  const auto profile = doc.build();
  const int n = doc.n;
  const int count = std::max(s.opt().samples, 2);
  std::ostringstream csv;
  csv << std::setprecision(17) << "r";
  for (int i = 1; i <= n - 2; ++i) csv << ",theta" << i;
  for (int i = 1; i <= n; ++i) csv << ",x" << i;
  csv << '\n';
  // r grid times a full turn in theta_1; the remaining angles stay at 0.
  for (double r : profile.domain().interior_samples(count, 0.01)) {
    for (int j = 0; j < count; ++j) {
      ChartPoint p = ChartPoint::origin(r, n);
      p.angles[0] = -std::numbers::pi + 2 * std::numbers::pi * j / count;
      const Vec x = immerse(profile, p);
      csv << r;
      for (double a : p.angles) csv << ',' << a;
      for (Eigen::Index i = 0; i < x.size(); ++i) csv << ',' << x[i];
      csv << '\n';
    }
  }
  s.emit(csv.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Rotational hypersurfaces: curvature, L_k operator, eigen-classification and proof audit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  auto add_spec = [&](CLI::App* c) { c->add_option("--spec", opt.spec_path, "Profile specification JSON")->check(CLI::ExistingFile); };
  auto add_n = [&](CLI::App* c) { c->add_option("--n", opt.n_text, "Ambient dimension (overrides the spec) or range a..b"); };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", opt.out_path, "Write the result to this file"); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  };
  auto add_samples = [&](CLI::App* c) { c->add_option("--samples", opt.samples, "Number of sample points")->check(CLI::PositiveNumber); };

  auto* curvature = app.add_subcommand("curvature", "Principal curvatures, H, K and s_j along the profile");
  auto* lk = app.add_subcommand("lk", "Closed-form vs finite-difference L_k G");
  auto* cls = app.add_subcommand("classify", "Fit L_{n-3} G = A G and classify");
  auto* solve = app.add_subcommand("solve-minimal", "Minimal rotational profile");
  auto* audit = app.add_subcommand("audit", "Exact integer constants of the elimination proof");
  auto* fixtures = app.add_subcommand("fixtures", "Emit the classification fixture set");
  auto* exporter = app.add_subcommand("export", "Immersion coordinate grid as CSV");

  for (auto* c : {curvature, lk, cls, exporter}) {
    add_spec(c);
    add_n(c);
    add_out(c);
    add_samples(c);
  }
  for (auto* c : {curvature, cls}) add_format(c);
  lk->add_option("--k", opt.k_text, "Operator order or 'auto' (= n-3)");
  for (auto* c : {cls}) {
    c->add_option("--tol-fit", opt.tol_fit, "Relative RMS fit tolerance");
    c->add_option("--tol-flat", opt.tol_flat, "|K| tolerance");
    c->add_option("--tol-min", opt.tol_min, "|H| tolerance");
  }
  add_n(solve);
  add_out(solve);
  add_format(solve);
  add_samples(solve);
  solve->add_option("--c1", opt.c1, "First-integral constant (<= 0 selects the plane limit)");
  solve->add_option("--c2", opt.c2, "Additive constant of phi");
  solve->add_option("--f0", opt.f0, "Lower end of the f range");
  solve->add_option("--f1", opt.f1, "Upper end of the f range");
  solve->add_option("--branch", opt.branch, "Branch sign +1 or -1")->check(CLI::IsMember({1, -1}));
  add_n(audit);
  add_out(audit);
  add_format(audit);
  add_n(fixtures);
  add_out(fixtures);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  Session session(opt, out);
  try {
    if (curvature->parsed()) return cmd_curvature(session);
    if (lk->parsed()) return cmd_lk(session);
    if (cls->parsed()) return cmd_classify(session);
    if (solve->parsed()) return cmd_solve_minimal(session);
    if (audit->parsed()) return cmd_audit(session);
    if (fixtures->parsed()) return cmd_fixtures(session);
    if (exporter->parsed()) return cmd_export(session);
  } catch (const SpecParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedSpec;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  err << app.help();
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace rothyp::cli
