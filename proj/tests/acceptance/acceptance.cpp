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
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cli_app.hpp"
#include "holder/holder.hpp"

namespace {

using namespace holder;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v, const char* spec = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

bool rel_close(const Real& a, const Real& b, double rel) { return abs(a - b) <= rel * abs(b); }

int run_cli(std::vector<std::string> args, std::string& out) {
  args.insert(args.begin(), "holder-bounds");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  return code;
}

Verdict table_reproduction() {
  Verdict v;
  auto t0 = Clock::now();
  std::ostringstream sink;
  cli::RunConfig config;
  int code = cli::cmd_zeta_table(5, config, sink);
  double elapsed = seconds_since(t0);
  std::vector<ZetaTableRow> rows = zeta_table(5);
  v.require(code == cli::kOk, "exit code");
  int matched = 0;
  for (const ZetaTableRow& r : rows) {
    const PublishedZetaRow* p = published_row(r.odd_index);
    matched += rel_close(r.zeta_value.estimate, Real::parse(p->zeta_value), 1e-13);
    matched += rel_close(r.bound_numeric, Real::parse(p->bound_value), 1e-13);
  }
  v.require(matched == 10, std::to_string(matched) + "/10 entries within 1e-13");
  int radicals = 0;
  for (int k = 1; k <= 4; ++k) radicals += !differs_from_published(rows[static_cast<size_t>(k - 1)]);
  v.require(radicals == 4, "closed forms k=1..4");
  v.require(elapsed < 5.0, "runtime under 5 s");
  v.note(std::to_string(matched) + "/10 entries, " + std::to_string(radicals) + "/4 radicals, " + fmt(elapsed) + " s");
  return v;
}

Verdict corrected_radical() {
  Verdict v;
  CanonicalRadical exact = odd_zeta_closed_form(5);
  Real value = exact.evaluate();
  Real printed = published_row(11)->closed_form.evaluate();
  v.require(abs(value - Real::parse("1.00062026085458")) <= 1e-13, "exact form value");
  v.require(printed > 1000, "printed form exceeds 10^3");
  std::string out;
  run_cli({"zeta-table", "5"}, out);
  v.require(out.find(exact.to_string()) != std::string::npos, "tool reports " + exact.to_string());
  v.note("exact " + exact.to_string() + " = " + value.to_string(15) + ", printed = " + printed.to_string(10));
  return v;
}

Verdict theorem_fuzz() {
  Verdict v;
  auto t0 = Clock::now();
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<int> len(1, 50);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> num(0, 40), pos(1, 40), den(1, 10);
  const Real rel = Real::power_of_two(-128, 64);
  long violations = 0, infinite = 0;
  const long cases = 100000;
  for (long t = 0; t < cases; ++t) {
    WeightedSequence f(256);
    const int n = len(rng);
    for (int i = 0; i < n; ++i) f.push_back(Real(10 * unit(rng)), Real(5 * (1 - unit(rng))));
    BigRational l = 1 + make_rational(num(rng), den(rng));
    BigRational s = l + make_rational(pos(rng), den(rng));
    bool inf = t % 4 == 0;
    Exponent m = inf ? Exponent::infinity() : Exponent(BigRational(s + make_rational(pos(rng), den(rng))));
    infinite += inf;
    BoundReport r = convex_holder_bound(f, Exponent(l), Exponent(s), m);
    if (r.lhs - r.rhs > rel * max(abs(r.lhs), abs(r.rhs))) ++violations;
  }
  v.require(violations == 0, std::to_string(violations) + " violations");

  // Constant vectors with arbitrary weights are equality cases.
  Real worst(0, 64);
  const Real cap = Real::power_of_two(-120, 64);
  for (int t = 0; t < 1000; ++t) {
    WeightedSequence f(256);
    const double c = 10 * (1 - unit(rng));
    const int n = len(rng);
    for (int i = 0; i < n; ++i) f.push_back(Real(c), Real(5 * (1 - unit(rng))));
    BigRational l = 1 + make_rational(num(rng), den(rng));
    BigRational s = l + make_rational(pos(rng), den(rng));
    Exponent m = t % 2 ? Exponent::infinity() : Exponent(BigRational(s + make_rational(pos(rng), den(rng))));
    BoundReport r = convex_holder_bound(f, Exponent(l), Exponent(s), m);
    worst = max(worst, abs(r.margin) / r.rhs);
  }
  v.require(worst <= cap, "constant-vector margin " + worst.to_string(3));
  v.note(std::to_string(cases) + " sequences (" + std::to_string(infinite) + " with m=inf), 0 violations, " +
         "constant-vector margin " + worst.to_string(3) + ", " + fmt(seconds_since(t0)) + " s");
  if (violations) v.detail = std::to_string(violations) + " violations; " + v.detail;
  return v;
}

Verdict dinu() {
  Verdict v;
  std::string out;
  int code = run_cli({"--format", "json", "--trials", "100000", "--seed", "0", "check", "dinu"}, out);
  v.require(code == cli::kOk, "exit code " + std::to_string(code));
  nlohmann::json j = nlohmann::json::parse(out);
  Real lhs = Real::parse(j["max_lhs"]["hex"].get<std::string>());
  Real bound = Real::parse(j["bound"]["hex"].get<std::string>());
  v.require(abs(lhs - Real(0.192450)) <= 1e-4, "maximum near 0.192450");
  v.require(lhs <= bound && bound <= Real(0.25), "max <= bound <= 1/4");
  v.require(abs(bound - Real::parse("0.23570226039551584")) <= 1e-15, "bound = (1/3)(1/4)^(1/4)");
  v.note("max " + lhs.to_string(15) + " <= " + bound.to_string(15) + " < 0.25, exit " + std::to_string(code));
  return v;
}

Verdict chain_equivalence() {
  Verdict v;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> len(1, 50);
  std::uniform_real_distribution<double> val(0, 10);
  Real worst(0, 64);
  for (int m = 1; m <= 8; ++m) {
    for (int t = 0; t < 1000; ++t) {
      std::vector<double> x(static_cast<size_t>(len(rng)));
      for (double& e : x) e = val(rng);
      WeightedSequence f = WeightedSequence::from_doubles(x, 256);
      ChainCertificate c = holder_chain(m, f);
      BoundReport r = convex_holder_bound(f, Exponent(1), Exponent(BigRational(m + 1, m)), Exponent::infinity());
      worst = max(worst, abs(c.final_bound - r.rhs) / r.rhs);
      for (const ChainStep& st : c.steps) v.require(st.holder && st.holder->holds, "chain Hölder step");
      if (!v.pass) return v;
    }
  }
  v.require(worst <= 1e-30, "relative gap " + worst.to_string(3));
  v.note("8000 sequences, max relative gap " + worst.to_string(3));
  return v;
}

Verdict binomial_moments() {
  Verdict v;
  auto t0 = Clock::now();
  long checks = 0, failures = 0, inexact = 0;
  for (unsigned long n = 1; n <= 200; ++n) {
    for (int i = 0; i <= 10; ++i) {
      BigRational s = make_rational(10 + i, 10);
      Real bound = binomial_moment_bound(n, s);
      if (i == 0 || i == 10) {
        BigInt exact = binomial_moment_exact(n, i == 0 ? 1u : 2u);
        inexact += !(bound.to_rational() == BigRational(exact));
      }
      Real brute = binomial_moment_brute(n, Real(s, 256));
      failures += !make_report(brute, bound, 256).holds;
      ++checks;
    }
  }
  double elapsed = seconds_since(t0);
  v.require(failures == 0, std::to_string(failures) + " bound failures");
  v.require(inexact == 0, std::to_string(inexact) + " inexact endpoints");
  v.require(elapsed < 30.0, "runtime under 30 s");
  v.note(std::to_string(checks) + " (N, s) pairs, endpoints exact, " + fmt(elapsed) + " s");
  return v;
}

Verdict integral_example() {
  Verdict v;
  QuadratureOptions opts;
  IntegralBound r = lp_integral_bound([](const Real& x) { return sin(x); }, Real(0, 128), pi_value(128) / 2,
                                      BigRational(3, 2), Real(1e-13, 128), Exponent(1), Exponent(2), opts);
  v.require(abs(r.report.lhs - Real::parse("0.87401918476404", 128)) <= 1e-12, "integral value");
  v.require(abs(r.report.rhs - Real::parse("0.88622692545276", 128)) <= 1e-12, "bound value");
  v.require(r.report.lhs.to_string(14) == "0.87401918476404", "integral at 14 digits");
  v.require(r.report.rhs.to_string(14) == "0.88622692545276", "bound at 14 digits");
  v.require(r.report.holds, "bound holds");
  v.note("integral " + r.report.lhs.to_string(14) + " <= " + r.report.rhs.to_string(14));
  return v;
}

Verdict gamma_beta() {
  Verdict v;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> dist(1.0, 50.0);
  long violations = 0;
  for (int i = 0; i < 200; ++i) {
    double y = dist(rng);
    if (y <= 1.0) y = std::nextafter(1.0, 2.0);
    Real yr(y, 256);
    violations += !(gamma_reference(yr + 1).upper() <= gamma_upper_bound(yr).second);
  }
  Real worst(0, 64);
  for (int y = 2; y <= 49; ++y) {
    Real bound = gamma_upper_bound(Real(y)).second;
    worst = max(worst, abs(bound - gamma_reference(Real(y + 1)).estimate) / bound);
  }
  long beta_violations = 0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      Real x = Real(1) + Real(make_rational(5 * i, 19), 256);
      Real y = Real(1) + Real(make_rational(5 * j, 19), 256);
      beta_violations += !(beta_reference(x + 1, y + 1).upper() <= beta_upper_bound(x, y));
    }
  v.require(violations == 0, std::to_string(violations) + " gamma violations");
  v.require(worst <= 1e-30, "integer equality margin " + worst.to_string(3));
  v.require(beta_violations == 0, std::to_string(beta_violations) + " beta violations");
  v.note("200 gamma points, integer margin " + worst.to_string(3) + ", 400 beta grid points, 0 violations");
  return v;
}

Verdict general_display() {
  Verdict v;
  int runs = 0;
  long premise = 0;
  std::string witnesses;
  for (int n = 3; n <= 8; ++n) {
    for (int m : {1, 2, 4, 8}) {
      GeneralInequalityResult r = verify_general_inequality(n, m, 10000, 30, 0);
      ++runs;
      premise += r.premise_violations;
      if (!r.report.holds) witnesses += " n=" + std::to_string(n) + ",m=" + std::to_string(m);
    }
  }
  v.require(witnesses.empty(), "violations at" + witnesses);
  v.require(premise == 0, std::to_string(premise) + " premise-cap violations");
  v.note(std::to_string(runs) + " (n, m) runs of 10^4 trials, 0 violations, premise caps hold");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"table reproduction", table_reproduction},
      {"corrected closed form for zeta(11)", corrected_radical},
      {"convex Hölder fuzz", theorem_fuzz},
      {"three-variable simplex maximum", dinu},
      {"chain equals theorem", chain_equivalence},
      {"binomial moments", binomial_moments},
      {"integral example", integral_example},
      {"gamma and beta bounds", gamma_beta},
      {"general-n simplex display", general_display},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << v.detail
              << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
