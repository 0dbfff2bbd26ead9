// Copyright 2026 The holder-bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holder/holder.hpp"
#include "holder/io/format.hpp"

namespace holder::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Raised for malformed input that parsed syntactically.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int precision_bits = 256;
  std::uint64_t seed = 0;
  long trials = 100000;
  io::OutputFormat format = io::OutputFormat::kMarkdown;
  int digits = 15;

  Bits prec() const { return static_cast<Bits>(precision_bits); }

  void validate() const {
    if (precision_bits < 64) throw UsageError("--precision must be >= 64");
    if (trials < 1) throw UsageError("--trials must be >= 1");
    if (digits < 1) throw UsageError("--digits must be >= 1");
    if (digits > precision_bits * 3 / 10) throw UsageError("--digits must not exceed 0.3 * precision");
  }
};

/// A labelled inequality check for tabular output.
struct Case {
  std::string label;
  BoundReport report;
};

/// Parses "v1,v2,..." or "@path" (one value per line, optional ",weight").
inline WeightedSequence parse_sequence(const std::string& spec, Bits prec) {
  WeightedSequence f(prec);
  auto add = [&](const std::string& cell_value, const std::string& cell_weight, const std::string& where) {
    try {
      Real v = Real::parse(cell_value, prec);
      Real w = cell_weight.empty() ? Real(1, prec) : Real::parse(cell_weight, prec);
      f.push_back(v, w);
    } catch (const std::invalid_argument& e) {
      throw UsageError(where + ": " + e.what());
    }
  };
  auto trim = [](std::string s) {
    const char* ws = " \t\r\n";
    s.erase(0, s.find_first_not_of(ws));
    s.erase(s.find_last_not_of(ws) + 1);
    return s;
  };

  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw UsageError("cannot open '" + spec.substr(1) + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      line = trim(line);
      if (line.empty()) continue;
      std::string where = spec.substr(1) + ":" + std::to_string(line_no);
      auto comma = line.find(',');
      if (comma == std::string::npos) {
        add(line, "", where);
      } else {
        if (line.find(',', comma + 1) != std::string::npos) throw UsageError(where + ": expected at most two columns");
        add(trim(line.substr(0, comma)), trim(line.substr(comma + 1)), where);
      }
    }
    return f;
  }

  std::stringstream ss(spec);
  std::string cell;
  int index = 0;
  while (std::getline(ss, cell, ',')) add(trim(cell), "", "value " + std::to_string(++index));
  return f;
}

inline BigRational parse_rational_arg(const std::string& text, const std::string& name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + ": not a number: '" + text + "'");
  }
}

inline Exponent parse_exponent_arg(const std::string& text, const std::string& name) {
  try {
    return Exponent::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

/// A decimal, hex float, or exact fraction such as 1/3.
inline Real parse_real_arg(const std::string& text, const std::string& name, Bits prec) {
  try {
    if (text.find('/') != std::string::npos) return Real(parse_rational(text), prec);
    return Real::parse(text, prec);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + ": not a number: '" + text + "'");
  }
}

class Emitter {
 public:
  Emitter(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  /// Prints cases (and any extra JSON fields) and returns the exit code.
  int cases(const std::string& subject, const std::vector<Case>& cases, nlohmann::json extra = nlohmann::json::object(),
            const std::vector<std::string>& notes = {}) {
    bool all = true;
    for (const Case& c : cases) all = all && c.report.holds;
    const int d = config_.digits;
    if (config_.format == io::OutputFormat::kJson) {
      nlohmann::json j = extra;
      j["subject"] = subject;
      j["precision_bits"] = config_.precision_bits;
      j["all_hold"] = all;
      nlohmann::json arr = nlohmann::json::array();
      for (const Case& c : cases) {
        nlohmann::json r = io::report_json(c.report, d);
        r["case"] = c.label;
        arr.push_back(r);
      }
      j["reports"] = arr;
      if (!notes.empty()) j["notes"] = notes;
      out_ << j.dump(2) << "\n";
    } else {
      io::Table t;
      t.headers = {"case", "lhs", "rhs", "margin", "holds"};
      for (const Case& c : cases)
        t.rows.push_back({c.label, c.report.lhs.to_string(d), c.report.rhs.to_string(d),
                          c.report.margin.to_string(std::min(d, 6)), c.report.holds ? "yes" : "NO"});
      t.footnotes = notes;
      out_ << (config_.format == io::OutputFormat::kCsv ? io::render_csv(t) : io::render_markdown(t));
    }
    return all ? kOk : kViolation;
  }

 private:
  const RunConfig& config_;
  std::ostream& out_;
};

inline int cmd_zeta_table(int k_max, const RunConfig& config, std::ostream& out) {
  if (k_max < 1) throw UsageError("--k-max must be >= 1");
  const int d = config.digits;
  std::vector<ZetaTableRow> rows = zeta_table(k_max, config.prec());
  bool all = true;
  std::vector<std::string> notes;
  for (const ZetaTableRow& r : rows) {
    all = all && r.zeta_value.upper() <= r.bound_numeric && r.closed_form_consistent;
    if (differs_from_published(r)) {
      const PublishedZetaRow* p = published_row(r.odd_index);
      Real ratio = p->closed_form.evaluate(config.prec()) / r.bound_closed.evaluate(config.prec());
      notes.push_back("* zeta(" + std::to_string(r.odd_index) + "): the published closed form " + p->closed_form_text +
                      " evaluates to " + p->closed_form.evaluate(config.prec()).to_string(d) + " (" +
                      ratio.to_string(6) + " times the bound); the exact form is " + r.bound_closed.to_string() + ".");
    }
  }

  if (config.format == io::OutputFormat::kJson) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ZetaTableRow& r : rows) {
      arr.push_back({{"odd_index", r.odd_index},
                     {"zeta", io::number_json(r.zeta_value.estimate, d)},
                     {"zeta_error_bound", r.zeta_value.error_bound.to_string(3)},
                     {"bound", io::number_json(r.bound_numeric, d)},
                     {"closed_form", io::radical_json(r.bound_closed)},
                     {"ratio", io::number_json(r.ratio, d)},
                     {"holds", r.zeta_value.upper() <= r.bound_numeric},
                     {"differs_from_published", differs_from_published(r)}});
    }
    nlohmann::json j = {{"precision_bits", config.precision_bits}, {"rows", arr}, {"all_hold", all}};
    if (!notes.empty()) j["notes"] = notes;
    out << j.dump(2) << "\n";
  } else {
    io::Table t;
    t.headers = {"2k+1", "zeta(2k+1)", "bound sqrt(zeta(2k) zeta(2k+2))", "closed form", "ratio"};
    for (const ZetaTableRow& r : rows)
      t.rows.push_back({std::to_string(r.odd_index), r.zeta_value.estimate.to_string(d), r.bound_numeric.to_string(d),
                        r.bound_closed.to_string() + (differs_from_published(r) ? " *" : ""),
                        r.ratio.to_string(std::min(d, 10))});
    t.footnotes = notes;
    out << (config.format == io::OutputFormat::kCsv ? io::render_csv(t) : io::render_markdown(t));
  }
  return all ? kOk : kViolation;
}

struct CheckParams {
  std::string f_values;
  std::string g_values;
  std::string p = "2";
  int n = 3;
  int m = 4;
  int grid_depth = 30;
  long big_n = 50;
  std::string s = "3/2";
  std::vector<std::string> ys;
  std::vector<std::string> xs;
  int count = 200;
  std::string integrand = "sin";
  std::string a = "0";
  std::string b;
  std::string tol = "1e-13";
};

inline int check_simplex(const std::string& subject, int n, int m, const CheckParams& params, const RunConfig& config,
                         std::ostream& out) {
  GeneralInequalityResult r = verify_general_inequality(n, m, config.trials, params.grid_depth, config.seed, config.prec());
  std::ostringstream argmax;
  for (size_t i = 0; i < r.argmax.size(); ++i) argmax << (i ? ", " : "") << Real(r.argmax[i], 64).to_string(8);
  std::vector<std::string> notes = {
      "argmax = (" + argmax.str() + ")",
      "premise caps ||g||_1 <= (n-1)/(2n), ||g||_inf <= 1/4: " + std::to_string(r.premise_violations) +
          " violations over " + std::to_string(r.points_evaluated) + " points",
      "closed-boundary limit = " + r.boundary_limit.to_string(config.digits)};
  std::vector<Case> cases = {{"max over simplex (n=" + std::to_string(n) + ", s=1+1/" + std::to_string(m) + ")", r.report}};
  int code = Emitter(config, out).cases(subject, cases, io::general_result_json(r, config.digits), notes);
  return (code == kOk && r.premise_violations == 0) ? kOk : kViolation;
}

/// Keeps the case with the smallest relative margin plus every violation.
inline void collapse_sweep(std::vector<Case>& all, const std::string& label) {
  if (all.empty()) return;
  std::vector<Case> kept;
  size_t worst = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    if (all[i].report.relative_margin() < all[worst].report.relative_margin()) worst = i;
    if (!all[i].report.holds) kept.push_back(all[i]);
  }
  Case w = all[worst];
  w.label = "worst of " + std::to_string(all.size()) + " " + label + ": " + w.label;
  kept.insert(kept.begin(), w);
  all = std::move(kept);
}

inline int cmd_check(const std::string& subject, const CheckParams& params, const RunConfig& config, std::ostream& out) {
  const Bits prec = config.prec();
  Emitter emit(config, out);

  if (subject == "holder") {
    if (params.f_values.empty() || params.g_values.empty()) throw UsageError("check holder needs --f and --g");
    WeightedSequence f = parse_sequence(params.f_values, prec);
    WeightedSequence g = parse_sequence(params.g_values, prec);
    if (!f.same_measure(g)) throw UsageError("--f and --g must have the same length and weights");
    Exponent p = parse_exponent_arg(params.p, "p");
    return emit.cases(subject, {{"||fg||_1 <= ||f||_" + p.to_string() + " ||g||_" + p.conjugate().to_string(),
                                 holder_check(f, g, p)}});
  }
  if (subject == "dinu") return check_simplex(subject, 3, 4, params, config, out);
  if (subject == "general") {
    if (params.n < 3) throw UsageError("--n must be >= 3");
    if (params.m < 1) throw UsageError("--m must be >= 1");
    return check_simplex(subject, params.n, params.m, params, config, out);
  }
  if (subject == "binomial") {
    if (params.big_n < 1 || params.big_n > 10000) throw UsageError("--N must be in [1, 10000]");
    BigRational s = parse_rational_arg(params.s, "s");
    if (s < 1 || s > 2) throw UsageError("--s must be in [1, 2]");
    auto n = static_cast<unsigned long>(params.big_n);
    Real brute = binomial_moment_brute(n, Real(s, prec), prec);
    Real bound = binomial_moment_bound(n, s, prec);
    return emit.cases(subject, {{"sum C(" + std::to_string(n) + ",k) k^" + to_string(s), make_report(brute, bound, prec)}});
  }
  if (subject == "gamma") {
    std::vector<Case> cases;
    auto one = [&](const Real& y) {
      auto [bracket, bound] = gamma_upper_bound(y, prec);
      EnclosedValue ref = gamma_reference(y + 1, prec);
      return Case{"y=" + y.to_string(10), make_report(ref.upper(), bound, prec)};
    };
    if (!params.ys.empty()) {
      for (const std::string& y : params.ys) {
        Real yv = parse_real_arg(y, "y", prec);
        if (!(yv > 1)) throw UsageError("--y must be > 1");
        cases.push_back(one(yv));
      }
    } else {
      std::mt19937_64 rng(config.seed);
      std::uniform_real_distribution<double> dist(1.0, 50.0);
      std::vector<Case> sweep;
      for (int i = 0; i < params.count; ++i) {
        double y = dist(rng);
        if (y <= 1.0) continue;
        sweep.push_back(one(Real(y, prec)));
      }
      collapse_sweep(sweep, "random y in (1,50)");
      cases = std::move(sweep);
      for (int y = 2; y <= 10; ++y) cases.push_back(one(Real(y, prec)));
    }
    return emit.cases(subject, cases);
  }
  if (subject == "beta") {
    std::vector<Case> cases;
    auto one = [&](const Real& x, const Real& y) {
      Real bound = beta_upper_bound(x, y, prec);
      EnclosedValue ref = beta_reference(x + 1, y + 1, prec);
      return Case{"x=" + x.to_string(6) + " y=" + y.to_string(6), make_report(ref.upper(), bound, prec)};
    };
    if (!params.xs.empty() || !params.ys.empty()) {
      if (params.xs.size() != params.ys.size()) throw UsageError("check beta needs matching --x and --y lists");
      for (size_t i = 0; i < params.xs.size(); ++i) {
        Real x = parse_real_arg(params.xs[i], "x", prec);
        Real y = parse_real_arg(params.ys[i], "y", prec);
        if (!(x >= 1 && y >= 1)) throw UsageError("--x and --y must be >= 1");
        cases.push_back(one(x, y));
      }
    } else {
      std::vector<Case> grid;
      for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j)
          grid.push_back(one(Real(1, prec) + Real(make_rational(5 * i, 19), prec), Real(1, prec) + Real(make_rational(5 * j, 19), prec)));
      collapse_sweep(grid, "grid points on [1,6]^2");
      cases = std::move(grid);
    }
    return emit.cases(subject, cases);
  }
  if (subject == "integral") {
    RealFunction f;
    try {
      f = named_integrand(params.integrand);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    BigRational s = parse_rational_arg(params.s, "s");
    if (s <= 1 || s >= 2) throw UsageError("--s must lie in (1, 2)");
    QuadratureOptions opts;
    opts.precision = std::min<Bits>(prec, 128);
    Real a = parse_real_arg(params.a, "a", opts.precision);
    Real b = params.b.empty() ? (params.integrand == "sin" ? pi_value(opts.precision) / 2 : Real(1, opts.precision))
                              : parse_real_arg(params.b, "b", opts.precision);
    if (!(a < b)) throw UsageError("--a must be below --b");
    Real tol = parse_real_arg(params.tol, "tol", opts.precision);
    if (!(tol > 0)) throw UsageError("--tol must be positive");
    IntegralBound r = lp_integral_bound(f, a, b, s, tol, Exponent(1), Exponent(2), opts);
    std::string label = "int " + params.integrand + "^" + to_string(s) + " on [" + a.to_string(6) + ", " + b.to_string(6) + "]";
    nlohmann::json extra = {{"integral_error_bound", r.integral_s.error_bound.to_string(3)}};
    return emit.cases(subject, {{label, r.report}}, extra);
  }
  throw UsageError("unknown check subject '" + subject + "'");
}

struct BoundParams {
  std::string l;
  std::string s;
  std::string m;
  std::string values;
  std::string norm_l;
  std::string norm_m;
};

inline int cmd_bound(const BoundParams& params, const RunConfig& config, std::ostream& out) {
  const Bits prec = config.prec();
  Exponent l = parse_exponent_arg(params.l, "l");
  Exponent s = parse_exponent_arg(params.s, "s");
  Exponent m = parse_exponent_arg(params.m, "m");
  try {
    interpolation_exponents(l, s, m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::string label = "||f||_" + s.to_string() + "^" + s.to_string() + " (l=" + l.to_string() + ", m=" + m.to_string() + ")";

  if (!params.values.empty()) {
    WeightedSequence f = parse_sequence(params.values, prec);
    return Emitter(config, out).cases("bound", {{label, convex_holder_bound(f, l, s, m)}});
  }
  if (params.norm_l.empty() || params.norm_m.empty()) throw UsageError("bound needs --values or both --norm-l and --norm-m");
  Real nl = parse_real_arg(params.norm_l, "norm-l", prec);
  Real nm = parse_real_arg(params.norm_m, "norm-m", prec);
  if (nl < 0 || nm < 0) throw UsageError("norms must be >= 0");
  Real rhs = bound_from_norms(nl, nm, l, s, m);
  InterpolationSplit split = interpolation_exponents(l, s, m);
  if (config.format == io::OutputFormat::kJson) {
    nlohmann::json j = {{"subject", "bound"},
                        {"precision_bits", config.precision_bits},
                        {"exp_l", to_string(split.exp_l)},
                        {"exp_m", to_string(split.exp_m)},
                        {"rhs", io::number_json(rhs, config.digits)}};
    out << j.dump(2) << "\n";
  } else {
    io::Table t;
    t.headers = {"bound", "exp_l", "exp_m", "rhs"};
    t.rows.push_back({label, to_string(split.exp_l), to_string(split.exp_m), rhs.to_string(config.digits)});
    out << (config.format == io::OutputFormat::kCsv ? io::render_csv(t) : io::render_markdown(t));
  }
  return kOk;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex Hölder interpolation bounds, verified in high precision"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "markdown";
  if (const char* env = std::getenv("HOLDER_PRECISION_BITS")) {
    try {
      config.precision_bits = std::stoi(env);
    } catch (const std::exception&) {
      err << "error: HOLDER_PRECISION_BITS is not an integer\n";
      return kUsage;
    }
  }
  app.add_option("--precision", config.precision_bits, "Working precision in bits (env HOLDER_PRECISION_BITS)");
  app.add_option("--seed", config.seed, "Random seed");
  app.add_option("--trials", config.trials, "Random samples for simplex checks");
  app.add_option("--format", format, "markdown | csv | json");
  app.add_option("--digits", config.digits, "Significant digits in output");

  int k_max = 5;
  auto* zeta = app.add_subcommand("zeta-table", "Odd zeta values against sqrt(zeta(2k) zeta(2k+2))");
  zeta->add_option("k_max,--k-max", k_max, "Rows k = 1..k_max");

  CheckParams check_params;
  auto* check = app.add_subcommand("check", "Verify one family of inequalities");
  check->require_subcommand(1);
  check->fallthrough();
  std::string subject;
  auto add_subject = [&](const std::string& name, const std::string& help) {
    auto* sub = check->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&subject, name] { subject = name; });
    return sub;
  };
  auto* holder_sub = add_subject("holder", "||fg||_1 <= ||f||_p ||g||_q");
  holder_sub->add_option("--f", check_params.f_values, "Values: v1,v2,... or @file");
  holder_sub->add_option("--g", check_params.g_values, "Values: v1,v2,... or @file");
  holder_sub->add_option("--p", check_params.p, "Exponent p in [1, inf]");
  auto* dinu_sub = add_subject("dinu", "(ab)^(5/4)+(bc)^(5/4)+(ca)^(5/4) over the simplex");
  dinu_sub->add_option("--grid-depth", check_params.grid_depth, "Lattice depth");
  auto* general_sub = add_subject("general", "Leave-one-out product bound for n variables");
  general_sub->add_option("--n", check_params.n, "Number of variables (>= 3)");
  general_sub->add_option("--m", check_params.m, "s = 1 + 1/m");
  general_sub->add_option("--grid-depth", check_params.grid_depth, "Lattice depth");
  auto* binomial_sub = add_subject("binomial", "sum C(N,k) k^s against its interpolation bound");
  binomial_sub->add_option("--N", check_params.big_n, "N");
  binomial_sub->add_option("--s", check_params.s, "s in [1, 2]");
  auto* gamma_sub = add_subject("gamma", "Gamma(y+1) <= l! (l+1)^(y-l)");
  gamma_sub->add_option("--y", check_params.ys, "Points y > 1 (default: random sweep)");
  gamma_sub->add_option("--count", check_params.count, "Random sweep size");
  auto* beta_sub = add_subject("beta", "Beta upper bound from floor brackets");
  beta_sub->add_option("--x", check_params.xs, "Points x >= 1");
  beta_sub->add_option("--y", check_params.ys, "Points y >= 1");
  auto* integral_sub = add_subject("integral", "int f^s <= (int f)^(2-s) (int f^2)^(s-1)");
  integral_sub->add_option("--f", check_params.integrand, "sin | x | x2 | exp-neg");
  integral_sub->add_option("--s", check_params.s, "s in (1, 2)");
  integral_sub->add_option("--a", check_params.a, "Lower limit");
  integral_sub->add_option("--b", check_params.b, "Upper limit (default pi/2 for sin, else 1)");
  integral_sub->add_option("--tol", check_params.tol, "Quadrature tolerance");

  BoundParams bound_params;
  auto* bound = app.add_subcommand("bound", "Evaluate the convex Hölder bound");
  bound->add_option("--l", bound_params.l, "Lower exponent l")->required();
  bound->add_option("--s", bound_params.s, "Interpolated exponent s")->required();
  bound->add_option("--m", bound_params.m, "Upper exponent m (or inf)")->required();
  bound->add_option("--values", bound_params.values, "Sequence: v1,v2,... or @file");
  bound->add_option("--norm-l", bound_params.norm_l, "Known ||f||_l");
  bound->add_option("--norm-m", bound_params.norm_m, "Known ||f||_m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    config.format = io::parse_format(format);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    config.validate();
    if (zeta->parsed()) return cmd_zeta_table(k_max, config, out);
    if (check->parsed()) return cmd_check(subject, check_params, config, out);
    if (bound->parsed()) return cmd_bound(bound_params, config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << " (best estimate " << e.best().estimate.to_string(config.digits) << " +/- "
        << e.best().error_bound.to_string(3) << ")\n";
    return kViolation;
  }
  return kUsage;
}

}  // namespace holder::cli
