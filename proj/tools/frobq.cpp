#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "frobq/congruence.hpp"
#include "frobq/decomp.hpp"
#include "frobq/frobgen.hpp"
#include "frobq/motzkin.hpp"
#include "frobq/qseries.hpp"
#include "frobq/rational.hpp"
#include "frobq/verify.hpp"

using namespace frobq;

namespace {

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  return 2;
}

// a is given undoubled ("0", "1", "1/2", "3/2"); store 2a.
bool parse_a2(const std::string& text, long long& a2) {
  try {
    Rat doubled = parse_rat(text) * 2;
    if (doubled.get_den() != 1 || doubled < 0 ||
        !doubled.get_num().fits_slong_p())
      return false;
    a2 = doubled.get_num().get_si();
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::string half_label(long long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

int cmd_series(long long k, const std::string& a_text, long long N,
               const std::string& method) {
  long long a2 = 0;
  if (k < 1) return usage_error("k must be a positive integer");
  if (!parse_a2(a_text, a2))
    return usage_error("a must be a nonnegative integer or half-integer");
  if ((a2 - k) % 2 != 0)
    return usage_error("parity: a - k/2 must be an integer");
  if (N < 1) return usage_error("N must be positive");
  Rat prec = make_rat(N);

  std::vector<std::string> names;
  std::vector<QSeries> results;
  if (method == "direct" || method == "all") {
    names.push_back("direct");
    results.push_back(cpsi_direct((int)k, a2, prec));
  }
  if (method == "decomp" || method == "all") {
    names.push_back("decomp");
    results.push_back(cpsi_from_h(k, a2, prec));
  }
  if (method == "enumerate" || method == "all") {
    names.push_back("enumerate");
    results.push_back(cpsi_enumerated((int)k, a2, N - 1));
  }
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i] != results[0]) {
      QSeries::Diff d = QSeries::first_difference(results[0], results[i]);
      std::cerr << "methods disagree: " << names[0] << " vs " << names[i]
                << " at q^" << rat_str(d.exponent) << ": " << rat_str(d.lhs)
                << " vs " << rat_str(d.rhs) << '\n';
      return 1;
    }
  }
  std::string line;
  for (long long n = 0; n < N; ++n) {
    if (n) line += ' ';
    line += rat_str(results[0].coeff(n));
  }
  std::cout << line << '\n';
  return 0;
}

int cmd_decompose(long long k, bool simplify, bool central,
                  const std::string& render) {
  if (k < 1) return usage_error("k must be a positive integer");
  RenderMode mode = RenderMode::theta;
  if (render == "pochhammer") mode = RenderMode::pochhammer;
  else if (render == "etaklein") mode = RenderMode::etaklein;
  else if (render != "theta") return usage_error("unknown render mode: " + render);

  HVector h = h_vector(k);
  for (long long c2 = k % 2; c2 <= k; c2 += 2) {
    if (central && c2 != k) continue;
    ThetaExpr e = h.entry(c2);
    if (simplify) e = sym_simplify(e);
    std::string body = mode == RenderMode::theta
                           ? sym_render(e, mode)
                           : render_cpsi(k, c2, e, mode);
    if (central) {
      std::cout << body << '\n';
    } else if (mode == RenderMode::theta) {
      std::cout << "h[" << half_label(k) << "," << half_label(c2)
                << "] = " << body << '\n';
    } else {
      std::cout << "CPsi[" << k << "," << half_label(c2) << "] = " << body
                << '\n';
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, long long kmax, long long prec,
               long long nmax) {
  SuiteOptions opt;
  opt.kmax = kmax;
  opt.nmax = nmax;
  opt.prec = prec >= 0 ? make_rat(prec) : Rat(-1);
  std::vector<CheckResult> results;
  try {
    results = run_suite(suite, opt);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  long long passed = 0;
  for (const CheckResult& r : results) {
    if (r.ok) {
      std::cout << "ok   " << r.name << '\n';
      ++passed;
    } else {
      std::cout << "FAIL " << r.name;
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << '\n';
      return 1;
    }
  }
  std::cout << passed << " checks passed\n";
  return 0;
}

int cmd_motzkin(long long k, const std::string& a_text, long long n,
                long long depth, long long prec) {
  long long a2 = 0;
  if (k < 1) return usage_error("k must be a positive integer");
  if (!parse_a2(a_text, a2))
    return usage_error("a must be a nonnegative integer or half-integer");
  if ((a2 - k) % 2 != 0)
    return usage_error("parity: a - k/2 must be an integer");
  if (n < 0) return usage_error("n must be nonnegative");

  if (depth >= 0) {
    ConvergenceReport rep = convergence_check((int)k, a2, n, depth);
    std::cout << "n=" << rep.n << " depth=" << rep.depth
              << " guaranteed=" << rep.guaranteed
              << " agreement=" << rep.agreement << (rep.ok ? " ok" : " FAIL")
              << '\n';
    return rep.ok ? 0 : 1;
  }
  long long degree = (k * n * (n + 1) + a2 * n * (2 * n + 1)) / 2;
  if (prec >= 0 && prec - 1 < degree) degree = prec - 1;
  if (degree < 0) return usage_error("prec must be positive");
  QSeries cm = cm_poly((int)k, a2, n, make_rat(degree) + 1);
  std::string line;
  for (long long e = 0; e <= degree; ++e) {
    if (e) line += ' ';
    line += rat_str(cm.coeff(e));
  }
  std::cout << line << '\n';
  return 0;
}

int cmd_scan(long long k, const std::string& a_text, long long Amax,
             long long Mmax, long long nmax, long long workers, bool records) {
  long long a2 = 0;
  if (k < 1) return usage_error("k must be a positive integer");
  if (!parse_a2(a_text, a2))
    return usage_error("a must be a nonnegative integer or half-integer");
  if ((a2 - k) % 2 != 0)
    return usage_error("parity: a - k/2 must be an integer");
  if (Amax < 1 || Mmax < 2 || nmax < 0 || workers < 1)
    return usage_error("need Amax >= 1, Mmax >= 2, nmax >= 0, workers >= 1");
  std::vector<CongruenceClaim> claims;
  try {
    claims = scan_congruences((int)k, a2, Amax, Mmax, nmax, (int)workers);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  if (records) {
    for (const CongruenceClaim& c : claims) std::cout << claim_line(c) << '\n';
  } else {
    std::cout << claim_table(claims);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series engine for colored Frobenius partitions"};
  app.require_subcommand(1);

  long long k = 1, N = 10, n = 0, depth = -1, prec = -1;
  long long kmax = -1, nmax = -1, Amax = 8, Mmax = 64, scan_nmax = 399;
  long long workers = 1;
  std::string a_text = "0", method = "direct", render = "theta", suite;
  bool simplify = false, central = false, records = false;

  CLI::App* series = app.add_subcommand(
      "series", "print generating-function coefficients");
  series->add_option("-k", k, "number of colors")->required();
  series->add_option("-a", a_text, "shift (integer or half-integer)")
      ->required();
  series->add_option("-N", N, "number of coefficients")->required();
  series->add_option("--method", method, "direct | decomp | enumerate | all")
      ->check(CLI::IsMember({"direct", "decomp", "enumerate", "all"}));

  CLI::App* decompose =
      app.add_subcommand("decompose", "print the theta decomposition");
  decompose->add_option("-k", k, "number of colors")->required();
  decompose->add_flag("--simplify", simplify, "apply theta rewriting");
  decompose->add_flag("--central", central, "central entry only");
  decompose->add_option("--render", render, "theta | pochhammer | etaklein")
      ->check(CLI::IsMember({"theta", "pochhammer", "etaklein"}));

  CLI::App* verify = app.add_subcommand("verify", "run an identity suite");
  verify
      ->add_option("suite", suite,
                   "jtp | lemmas | reconstruction | formulas | congruences |"
                   " motzkin")
      ->required();
  verify->add_option("--kmax", kmax, "largest level");
  verify->add_option("--prec", prec, "series precision");
  verify->add_option("--nmax", nmax, "largest tested index");

  CLI::App* motzkin =
      app.add_subcommand("motzkin", "deficit polynomials and convergence");
  motzkin->add_option("-k", k, "number of colors")->required();
  motzkin->add_option("-a", a_text, "shift (integer or half-integer)")
      ->required();
  motzkin->add_option("-n", n, "paths have length 2n+1")->required();
  motzkin->add_option("--depth", depth,
                      "compare against the series through q^depth");
  motzkin->add_option("--prec", prec, "truncate printed coefficients");

  CLI::App* scan = app.add_subcommand("scan", "search for congruences");
  scan->add_option("-k", k, "number of colors")->required();
  scan->add_option("-a", a_text, "shift (integer or half-integer)")
      ->required();
  scan->add_option("--Amax", Amax, "largest progression modulus");
  scan->add_option("--Mmax", Mmax, "largest divisor");
  scan->add_option("--nmax", scan_nmax, "largest tested index");
  scan->add_option("--workers", workers, "thread count");
  scan->add_flag("--records", records, "line-delimited records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (series->parsed()) return cmd_series(k, a_text, N, method);
    if (decompose->parsed()) return cmd_decompose(k, simplify, central, render);
    if (verify->parsed()) return cmd_verify(suite, kmax, prec, nmax);
    if (motzkin->parsed()) return cmd_motzkin(k, a_text, n, depth, prec);
    if (scan->parsed())
      return cmd_scan(k, a_text, Amax, Mmax, scan_nmax, workers, records);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
