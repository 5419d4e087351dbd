#include "frobq/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "frobq/congruence.hpp"
#include "frobq/decomp.hpp"
#include "frobq/frobgen.hpp"
#include "frobq/motzkin.hpp"
#include "frobq/rational.hpp"
#include "frobq/thetafun.hpp"
#include "frobq/zetaseries.hpp"

namespace frobq {

namespace {

std::string qdiff_detail(const QSeries& a, const QSeries& b) {
  QSeries::Diff d = QSeries::first_difference(a, b);
  if (!d.differs) return "precision mismatch";
  return "q^" + rat_str(d.exponent) + ": " + rat_str(d.lhs) + " vs " +
         rat_str(d.rhs);
}

std::string zdiff_detail(const ZetaSeries& a, const ZetaSeries& b) {
  ZetaSeries::Diff d = ZetaSeries::first_difference(a, b);
  if (!d.differs) return "precision mismatch";
  std::string r = d.r2 % 2 == 0 ? std::to_string(d.r2 / 2)
                                : std::to_string(d.r2) + "/2";
  return "zeta^" + r + " q^" + rat_str(d.qdiff.exponent) + ": " +
         rat_str(d.qdiff.lhs) + " vs " + rat_str(d.qdiff.rhs);
}

CheckResult q_equal(std::string name, const QSeries& a, const QSeries& b) {
  CheckResult r{std::move(name), a == b, ""};
  if (!r.ok) r.detail = qdiff_detail(a, b);
  return r;
}

CheckResult z_equal(std::string name, const ZetaSeries& a,
                    const ZetaSeries& b) {
  CheckResult r{std::move(name), a == b, ""};
  if (!r.ok) r.detail = zdiff_detail(a, b);
  return r;
}

// Exhaustive deficit polynomial for short paths, the oracle for cm_poly.
QSeries deficit_poly_by_enumeration(int k, long long a2, long long n,
                                    const Rat& prec) {
  std::map<long long, long long> counts;
  for (const MotzkinPath& p : enumerate_paths(k, a2, (int)(2 * n + 1)))
    counts[path_deficit(p)]++;
  std::vector<std::pair<long long, Rat>> terms;
  for (const auto& [e, c] : counts) terms.emplace_back(e, Rat(make_int(c)));
  return QSeries::from_terms(1, terms, prec);
}

}  // namespace

bool all_ok(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.ok; });
}

std::vector<CheckResult> verify_jtp(Rat prec) {
  if (prec <= 0) prec = Rat(25);
  std::vector<CheckResult> out;
  for (long long m2 : {1, 2, 3, 4, 6, 8, 12}) {
    bool ok = true;
    std::string det;
    for (long long b2 = 0; b2 <= m2 && ok; ++b2) {
      ThetaIndex idx{m2, b2};
      QSeries lattice = theta_const(idx, prec);
      QSeries product = theta_product_form(idx, prec);
      if (product != lattice) {
        ok = false;
        det = theta_name(idx) + " " + qdiff_detail(product, lattice);
      }
    }
    out.push_back({"triple product (2m=" + std::to_string(m2) + ")", ok, det});
  }
  for (long long m2 : {1, 2, 3, 4, 6, 12}) {
    bool ok = true;
    std::string det;
    for (long long b2 = 0; b2 <= m2 && ok; ++b2) {
      ThetaIndex idx{m2, b2};
      QSeries lattice = theta_const(idx, prec);
      QSeries klein = theta_eta_klein_form(idx, prec);
      if (klein != lattice) {
        ok = false;
        det = theta_name(idx) + " " + qdiff_detail(klein, lattice);
      }
    }
    out.push_back({"eta-Klein form (2m=" + std::to_string(m2) + ")", ok, det});
  }
  return out;
}

std::vector<CheckResult> verify_lemmas(long long lmax, Rat prec) {
  if (lmax < 1) lmax = 3;
  if (prec <= 0) prec = Rat(20);
  std::vector<CheckResult> out;
  ZetaSeries big = jacobi_theta_shifted(prec);

  {
    ZetaSeries lhs = big * big;
    ZetaSeries rhs =
        theta_two_var({2, 0}, prec).scaled_q(theta_const({2, 2}, prec)) +
        theta_two_var({2, 2}, prec).scaled_q(theta_const({2, 0}, prec));
    out.push_back(z_equal("shifted-theta square", lhs, rhs));
  }

  for (long long ell = 1; ell <= lmax; ++ell) {
    for (long long c = 0; c < ell; ++c) {
      {
        ZetaSeries lhs = big * theta_two_var({2 * ell, 2 * c}, prec);
        ZetaSeries rhs(prec);
        for (long long a = 0; a <= 2 * ell; ++a) {
          QSeries th = theta_const(
              {2 * ell * (2 * ell + 1), 2 * (c - 2 * ell * a - ell)}, prec);
          rhs = rhs +
                theta_two_var({2 * ell + 1, 2 * (a + c) + 1}, prec).scaled_q(th);
        }
        out.push_back(z_equal("mixed product (l=" + std::to_string(ell) +
                                  ", c=" + std::to_string(c) + ")",
                              lhs, rhs));
      }
      for (long long eps = 0; eps <= 1; ++eps) {
        ZetaSeries lhs = theta_two_var({2, 2 * eps}, prec) *
                         theta_two_var({2 * ell, 2 * c}, prec);
        ZetaSeries rhs(prec);
        for (long long a = 0; a <= ell; ++a) {
          QSeries th = theta_const(
              {2 * ell * (ell + 1), 2 * ((2 * a + eps) * ell - c)}, prec);
          rhs = rhs + theta_two_var({2 * (ell + 1), 2 * (2 * a + c + eps)}, prec)
                          .scaled_q(th);
        }
        out.push_back(z_equal("unit-index product (l=" + std::to_string(ell) +
                                  ", c=" + std::to_string(c) +
                                  ", eps=" + std::to_string(eps) + ")",
                              lhs, rhs));
      }
    }
  }

  {
    QSeries lhs = theta_const({4, 4}, prec) * theta_const({12, 0}, prec) +
                  theta_const({4, 0}, prec) * theta_const({12, 12}, prec);
    QSeries rhs =
        (theta_const({4, 2}, prec) * theta_const({12, 6}, prec)).scaled(Rat(2));
    out.push_back(q_equal("two-six even relation", lhs, rhs));
  }
  {
    QSeries lhs = theta_const({4, 4}, prec) * theta_const({12, 8}, prec) +
                  theta_const({4, 0}, prec) * theta_const({12, 4}, prec);
    QSeries rhs = theta_const({4, 2}, prec) *
                  (theta_const({12, 2}, prec) + theta_const({12, 10}, prec));
    out.push_back(q_equal("two-six odd relation", lhs, rhs));
  }
  return out;
}

std::vector<CheckResult> verify_reconstruction(long long kmax, Rat prec) {
  if (kmax < 1) kmax = 8;
  if (prec <= 0) prec = Rat(8);
  std::vector<CheckResult> out;
  ZetaSeries big = jacobi_theta_shifted(prec);
  for (long long k = 1; k <= kmax; ++k)
    out.push_back(z_equal("reconstruction (k=" + std::to_string(k) + ")",
                          reconstruct(k, prec), big.pow(k)));
  return out;
}

std::vector<CheckResult> verify_formulas(Rat prec) {
  if (prec <= 0) prec = Rat(61);
  std::vector<CheckResult> out;

  out.push_back(q_equal(
      "Andrews CPhi2", cphi_direct(2, prec),
      eval_product_string("(q^2;q^4) / ((q;q^2)^4 (q^4;q^4))", prec)));

  out.push_back(q_equal(
      "Andrews CPhi3", cphi_direct(3, prec),
      eval_product_string(
          "(q^12;q^12) (q^6;q^12)^3"
          " / ((q;q^6)^5 (q^5;q^6)^5 (q^4;q^4)^2 (q^3;q^6)^7)"
          " + 4 q^(1) (q^12;q^12) (q^4;q^4)"
          " / ((q^6;q^12) (q^2;q^4) (q;q)^3)",
          prec)));

  out.push_back(q_equal(
      "Drake CPsi20", cpsi_direct(2, 0, prec),
      eval_product_string("2 / ((q;q) (q;q^4) (q^2;q^4)^2 (q^3;q^4))", prec)));

  {
    auto T = [](long long m2, long long b2) {
      return ThetaExpr::theta({m2, b2});
    };
    ThetaExpr display =
        (T(2, 0) * T(2, 2) * T(2, 2) * T(4, 2) * T(12, 6)).scaled(make_int(6)) +
        T(2, 0) * T(2, 0) * T(2, 0) * (T(4, 4) * T(12, 12) + T(4, 0) * T(12, 0));
    ThetaExpr got = sym_simplify(h_vector(6).entry(6));
    CheckResult r{"CPhi6 closed form", got == display, ""};
    if (!r.ok) r.detail = "simplified to " + got.str();
    out.push_back(r);
  }
  out.push_back(
      q_equal("CPhi6 series", cphi_direct(6, prec), cpsi_from_h(6, 6, prec)));
  out.push_back(
      q_equal("CPhi7 series", cphi_direct(7, prec), cpsi_from_h(7, 7, prec)));

  {
    ThetaExpr e = sym_simplify(h_vector(4).entry(0));
    std::string rendered = render_cpsi(4, 0, e, RenderMode::pochhammer);
    out.push_back(q_equal("CPsi40 rendered product", cpsi_direct(4, 0, prec),
                          eval_product_string(rendered, prec)));
  }

  {
    QSeries odd = series_4_0_odd(prec);
    QSeries direct = cpsi_direct(4, 0, prec * 2 + 1);
    long long N = rat_ceil(prec) - 1;
    bool ok = true;
    std::string det;
    for (long long n = 0; n <= N && ok; ++n) {
      Rat lhs = odd.coeff(n);
      Rat rhs = direct.coeff(2 * n + 1);
      if (lhs != rhs) {
        ok = false;
        det = "q^" + std::to_string(n) + ": " + rat_str(lhs) + " vs " +
              rat_str(rhs);
      }
    }
    out.push_back({"CPsi40 odd-index closed form", ok, det});
  }
  return out;
}

std::vector<CheckResult> verify_congruences(long long n_max) {
  if (n_max < 0) n_max = 399;
  std::vector<CheckResult> out;
  QSeries s40 = cpsi_from_h(4, 0, make_rat(n_max) + 1);
  QSeries s42 = cpsi_from_h(4, 2, make_rat(n_max) + 1);
  struct Item {
    const QSeries* s;
    CongruenceClaim c;
  };
  const Item items[] = {
      {&s40, {4, 0, 2, 1, 32, CongruenceStatus::proved, n_max}},
      {&s40, {4, 0, 4, 3, 64, CongruenceStatus::proved, n_max}},
      {&s40, {4, 0, 7, 2, 7, CongruenceStatus::conjectured, n_max}},
      {&s42, {4, 2, 1, 0, 4, CongruenceStatus::proved, n_max}},
      {&s42, {4, 2, 7, 3, 7, CongruenceStatus::conjectured, n_max}},
  };
  for (const Item& it : items) {
    CongruenceCounterexample ce;
    bool ok = verify_claim(it.c, *it.s, &ce);
    std::ostringstream name;
    name << "cpsi[4," << it.c.a2 / 2 << "](" << it.c.A << "n+" << it.c.B
         << ") == 0 mod " << it.c.M << " [" << status_str(it.c.status) << "]";
    std::string det;
    if (!ok)
      det = "index " + std::to_string(ce.index) + ": coefficient " +
            rat_str(ce.coefficient);
    out.push_back({name.str(), ok, det});
  }
  return out;
}

std::vector<CheckResult> verify_motzkin(long long kmax, long long n,
                                        long long wmax) {
  if (kmax < 1) kmax = 4;
  if (n < 0) n = 12;
  if (wmax < 0) wmax = 6;
  std::vector<CheckResult> out;
  for (int k = 1; k <= (int)kmax; ++k) {
    if (k <= 4) {
      bool ok = true;
      std::string det;
      for (long long a2 = k % 2; a2 <= k + 2 && ok; a2 += 2) {
        for (long long nn = 0; nn <= 2 && ok; ++nn) {
          Rat prec =
              make_rat(k * nn * (nn + 1) + a2 * nn * (2 * nn + 1), 2) + 1;
          QSeries dp = cm_poly(k, a2, nn, prec);
          QSeries oracle = deficit_poly_by_enumeration(k, a2, nn, prec);
          if (dp != oracle) {
            ok = false;
            det = "a2=" + std::to_string(a2) +
                  " length=" + std::to_string(2 * nn + 1) + " " +
                  qdiff_detail(dp, oracle);
          }
        }
      }
      out.push_back(
          {"deficit DP matches enumeration (k=" + std::to_string(k) + ")", ok,
           det});
    }
    {
      bool ok = true;
      std::string det;
      for (long long a2 = k % 2; a2 <= k && ok; a2 += 2) {
        for (long long w = 0; w <= wmax && ok; ++w) {
          count_drake(k, a2, w, [&](const DrakeSymbol& d) {
            if (!ok) return;
            MotzkinPath p = partition_to_path(d, k, a2, 2 * w + 1);
            if (!path_valid(p) || path_deficit(p) != w) {
              ok = false;
              det = "a2=" + std::to_string(a2) + " weight " +
                    std::to_string(w) + ": " + drake_str(d);
            }
          });
        }
      }
      out.push_back(
          {"path deficit equals symbol weight (k=" + std::to_string(k) + ")",
           ok, det});
    }
    {
      bool ok = true;
      std::string det;
      long long depth = std::max<long long>(0, (n + 1) / 2 - 2);
      for (long long a2 : {(long long)(k % 2), (long long)k}) {
        ConvergenceReport rep = convergence_check(k, a2, n, depth);
        if (!rep.ok) {
          ok = false;
          det = "a2=" + std::to_string(a2) + ": agreement " +
                std::to_string(rep.agreement) + " < guaranteed " +
                std::to_string(rep.guaranteed);
          break;
        }
        if (a2 == k) break;  // avoid re-checking when k % 2 == k
      }
      out.push_back(
          {"deficit polynomial approximates the series (k=" +
               std::to_string(k) + ", n=" + std::to_string(n) + ")",
           ok, det});
    }
  }
  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite,
                                   const SuiteOptions& opt) {
  if (suite == "jtp") return verify_jtp(opt.prec);
  if (suite == "lemmas") return verify_lemmas(opt.kmax, opt.prec);
  if (suite == "reconstruction")
    return verify_reconstruction(opt.kmax, opt.prec);
  if (suite == "formulas") return verify_formulas(opt.prec);
  if (suite == "congruences") return verify_congruences(opt.nmax);
  if (suite == "motzkin") return verify_motzkin(opt.kmax, opt.nmax, -1);
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace frobq
