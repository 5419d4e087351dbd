#include <doctest.h>

#include <stdexcept>
#include <string>

#include "frobq/decomp.hpp"
#include "frobq/frobgen.hpp"
#include "oracles.hpp"

using namespace frobq;

namespace {

ThetaExpr T(long long m2, long long b2) { return ThetaExpr::theta({m2, b2}); }

}  // namespace

TEST_SUITE("decomp") {

TEST_CASE("theta expressions canonicalize and merge") {
  // index folding: b -> b mod 2m -> min(b, 2m-b)
  CHECK(T(2, 4) == T(2, 0));
  CHECK(T(12, -6) == T(12, 6));
  CHECK(T(12, 22) == T(12, 2));

  ThetaExpr e = T(2, 0) * T(2, 2) + T(2, 2) * T(2, 0);
  CHECK(e == (T(2, 2) * T(2, 0)).scaled(2));
  CHECK((e + e.scaled(-1)).is_zero());
  CHECK(ThetaExpr::zero().is_zero());
  CHECK(ThetaExpr::one().str() == "1");
  CHECK(e.str() == "2 theta[1,0] theta[1,1]");
  CHECK((T(2, 0) * T(2, 0) * T(4, 2)).str() == "theta[1,0]^2 theta[2,1]");
  CHECK((T(2, 0) + T(3, 1).scaled(-1)).str() == "theta[1,0] - theta[3/2,1/2]");
  CHECK(e.latex() == "2\\theta_{1,0}\\theta_{1,1}");

  ThetaCache cache{Rat(5)};
  CHECK(ThetaExpr::one().eval(cache) == QSeries::one(Rat(5)));
  CHECK(ThetaExpr::zero().eval(cache) == QSeries::zero(Rat(5)));
}

TEST_CASE("base vectors") {
  HVector h1 = h_one();
  CHECK(h1.k == 1);
  CHECK(h1.entry(1) == ThetaExpr::one());
  CHECK(h1.entry(-1) == ThetaExpr::one());
  CHECK(h1.symmetric());

  HVector h2 = h_base();
  CHECK(h2.k == 2);
  CHECK(h2.entry(0) == T(2, 2));
  CHECK(h2.entry(2) == T(2, 0));
  CHECK(h2.entry(-2) == T(2, 0));
  CHECK(h2.symmetric());

  // h_{1,0} = theta_{1,1} = 2q^(1/4) + 2q^(9/4) + O(q^3)
  ThetaCache cache{Rat(3)};
  CHECK(h2.entry(0).eval(cache) ==
        QSeries::from_terms(4, {{1, Rat(2)}, {9, Rat(2)}}, Rat(3)));
}

TEST_CASE("full step reproduces the level-two displays") {
  ThetaExpr t10 = T(2, 0), t11 = T(2, 2);
  ThetaExpr t20 = T(4, 0), t21 = T(4, 2), t22 = T(4, 4);

  HVector h4 = h_vector(4);
  CHECK(h4.k == 4);
  CHECK(h4.entry(0) == t11 * t11 * t20 + t10 * t10 * t22);
  CHECK(h4.entry(2) == (t10 * t11 * t21).scaled(2));
  CHECK(h4.entry(4) == t11 * t11 * t22 + t10 * t10 * t20);
  CHECK(h4.entry(6) == h4.entry(2));
  CHECK(h4.symmetric());
}

TEST_CASE("full step reproduces the level-three displays") {
  HVector h4 = h_vector(4);
  HVector h6 = h_vector(6);
  ThetaExpr t10 = T(2, 0), t11 = T(2, 2);

  // h_{3,3} = theta_{1,0}theta_{6,6}h_{2,0} + 2theta_{1,1}theta_{6,3}h_{2,1}
  //           + theta_{1,0}theta_{6,0}h_{2,2}
  CHECK(h6.entry(6) == t10 * T(12, 12) * h4.entry(0) +
                           (t11 * T(12, 6) * h4.entry(2)).scaled(2) +
                           t10 * T(12, 0) * h4.entry(4));
  // h_{3,0} = theta_{1,1}theta_{6,0}h_{2,0} + 2theta_{1,0}theta_{6,3}h_{2,1}
  //           + theta_{1,1}theta_{6,6}h_{2,2}
  CHECK(h6.entry(0) == t11 * T(12, 0) * h4.entry(0) +
                           (t10 * T(12, 6) * h4.entry(2)).scaled(2) +
                           t11 * T(12, 12) * h4.entry(4));
  // h_{3,1} = h_{3,5}
  CHECK(h6.entry(2) == h6.entry(10));
  CHECK(h6.entry(2) == t10 * T(12, 4) * h4.entry(0) +
                           t11 * (T(12, 2) + T(12, 10)) * h4.entry(2) +
                           t10 * T(12, 8) * h4.entry(4));
  CHECK(h6.symmetric());
}

TEST_CASE("half step extracts half-integer levels") {
  // h_{3/2,3/2} = theta_{1,1}theta_{3,3} + theta_{1,0}theta_{3,0}
  HVector h3 = h_vector(3);
  CHECK(h3.k == 3);
  CHECK(h3.entry(3) == T(2, 2) * T(6, 6) + T(2, 0) * T(6, 0));
  CHECK(h3.symmetric());

  // h_{7/2,7/2} = h_{3,0}theta_{21,21} + 2h_{3,1}theta_{21,14}
  //               + 2h_{3,2}theta_{21,7} + h_{3,3}theta_{21,0}
  HVector h6 = h_vector(6);
  HVector h7 = h_vector(7);
  CHECK(h7.entry(7) == h6.entry(0) * T(42, 42) +
                           (h6.entry(2) * T(42, 28)).scaled(2) +
                           (h6.entry(4) * T(42, 14)).scaled(2) +
                           h6.entry(6) * T(42, 0));
  CHECK(h7.symmetric());
}

TEST_CASE("symmetry holds at every level") {
  for (long long k = 1; k <= 8; ++k) {
    HVector h = h_vector(k);
    CHECK(h.k == k);
    CHECK(h.entries.size() == static_cast<size_t>(k));
    CHECK(h.symmetric());
  }
}

TEST_CASE("two construction paths agree") {
  // the odd-level detour must evaluate to the same coefficients
  HVector alt2 = h_step_half_to_full(h_one());
  CHECK(alt2.entries == h_base().entries);

  for (long long k : {4, 6, 8}) {
    HVector direct = h_vector(k);
    HVector detour = h_step_half_to_full(h_step_half(h_vector(k - 2)));
    REQUIRE(detour.k == k);
    CHECK(detour.symmetric());
    Rat prec = k == 8 ? Rat(12) : Rat(20);
    ThetaCache cache{prec};
    for (const auto& [c2, e] : direct.entries)
      CHECK(e.eval(cache) == detour.entries.at(c2).eval(cache));
  }
}

TEST_CASE("step preconditions") {
  CHECK_THROWS_AS(h_step_full(h_one()), std::invalid_argument);
  CHECK_THROWS_AS(h_step_half(h_vector(3)), std::invalid_argument);
  CHECK_THROWS_AS(h_step_half_to_full(h_base()), std::invalid_argument);
  CHECK_THROWS_AS(h_vector(0), std::invalid_argument);
  CHECK_THROWS_AS(h_vector(-2), std::invalid_argument);
}

TEST_CASE("reconstruction identity") {
  for (long long k = 1; k <= 8; ++k) {
    Rat prec = k <= 6 ? Rat(10) : Rat(8);
    CHECK(reconstruct(k, prec) == jacobi_theta_shifted(prec).pow(k));
  }
}

TEST_CASE("mixed-product lemmas") {
  Rat prec(15);
  ZetaSeries big = jacobi_theta_shifted(prec);

  for (long long ell = 1; ell <= 3; ++ell)
    for (long long c = 0; c < ell; ++c) {
      // -vartheta(z+1/2)vartheta_{l,c}
      //   = sum_a theta_{l(2l+1),c-2la-l} vartheta_{l+1/2,a+c+1/2}
      ZetaSeries lhs = big * theta_two_var({2 * ell, 2 * c}, prec);
      ZetaSeries rhs(prec);
      for (long long a = 0; a <= 2 * ell; ++a) {
        QSeries th =
            theta_const({2 * ell * (2 * ell + 1), 2 * (c - 2 * ell * a - ell)}, prec);
        rhs = rhs +
              theta_two_var({2 * ell + 1, 2 * (a + c) + 1}, prec).scaled_q(th);
      }
      CHECK(lhs == rhs);

      // vartheta_{1,eps}vartheta_{l,c}
      //   = sum_a theta_{l(l+1),(2a+eps)l-c} vartheta_{l+1,2a+c+eps}
      for (long long eps = 0; eps <= 1; ++eps) {
        ZetaSeries lhs2 =
            theta_two_var({2, 2 * eps}, prec) * theta_two_var({2 * ell, 2 * c}, prec);
        ZetaSeries rhs2(prec);
        for (long long a = 0; a <= ell; ++a) {
          QSeries th = theta_const(
              {2 * ell * (ell + 1), 2 * ((2 * a + eps) * ell - c)}, prec);
          rhs2 = rhs2 +
                 theta_two_var({2 * (ell + 1), 2 * (2 * a + c + eps)}, prec)
                     .scaled_q(th);
        }
        CHECK(lhs2 == rhs2);
      }
    }
}

TEST_CASE("simplification rewrites the two-six products") {
  // theta_{2,2}theta_{6,0} + theta_{2,0}theta_{6,6} -> 2 theta_{2,1}theta_{6,3}
  CHECK(sym_simplify(T(4, 4) * T(12, 0) + T(4, 0) * T(12, 12)) ==
        (T(4, 2) * T(12, 6)).scaled(2));
  // theta_{2,2}theta_{6,4} + theta_{2,0}theta_{6,2}
  //   -> theta_{2,1}(theta_{6,1} + theta_{6,5})
  CHECK(sym_simplify(T(4, 4) * T(12, 8) + T(4, 0) * T(12, 4)) ==
        T(4, 2) * (T(12, 2) + T(12, 10)));

  // unmatched coefficients transfer only the common part
  ThetaExpr lop = (T(4, 4) * T(12, 0)).scaled(3) + T(4, 0) * T(12, 12);
  CHECK(sym_simplify(lop) ==
        (T(4, 4) * T(12, 0)).scaled(2) + (T(4, 2) * T(12, 6)).scaled(2));

  // opposite signs do not combine; fixed points are returned unchanged
  ThetaExpr mixed = T(4, 4) * T(12, 0) + (T(4, 0) * T(12, 12)).scaled(-1);
  CHECK(sym_simplify(mixed) == mixed);
  ThetaExpr inert = T(2, 0) * T(2, 2) + T(4, 2) * T(12, 6);
  CHECK(sym_simplify(inert) == inert);
  CHECK(sym_simplify(ThetaExpr::zero()).is_zero());
}

TEST_CASE("simplified central entries match the classical formulas") {
  ThetaExpr t10 = T(2, 0), t11 = T(2, 2);

  // level 3 central entry: 6theta_{1,0}theta_{1,1}^2theta_{2,1}theta_{6,3}
  //   + theta_{1,0}^3(theta_{2,2}theta_{6,6} + theta_{2,0}theta_{6,0})
  ThetaExpr c6 = sym_simplify(h_vector(6).entry(6));
  CHECK(c6 == (t10 * t11 * t11 * T(4, 2) * T(12, 6)).scaled(6) +
                  t10 * t10 * t10 * (T(4, 4) * T(12, 12) + T(4, 0) * T(12, 0)));

  // level 7/2 central entry
  ThetaExpr c7 = sym_simplify(h_vector(7).entry(7));
  ThetaExpr expect7 =
      (t10 * t11 * T(4, 2) *
       (T(12, 6) * (t10 * T(42, 42) + t11 * T(42, 0)) +
        (t11 * T(42, 28) + t10 * T(42, 14)) * (T(12, 2) + T(12, 10))))
          .scaled(6) +
      (t10 * t10 * t10 * T(42, 0) + t11 * t11 * t11 * T(42, 42)) *
          (T(4, 0) * T(12, 0) + T(4, 4) * T(12, 12)) +
      ((t10 * t10 * t10 * T(42, 28) + t11 * t11 * t11 * T(42, 14)) *
       (T(4, 0) * T(12, 8) + T(4, 4) * T(12, 4)))
          .scaled(2);
  CHECK(c7 == expect7);

  // numeric agreement of the unsimplified entry with the display
  ThetaCache cache{Rat(30)};
  CHECK(h_vector(7).entry(7).eval(cache) == expect7.eval(cache));
}

TEST_CASE("simplification preserves evaluation") {
  ThetaCache cache{Rat(40)};
  for (long long k = 1; k <= 8; ++k) {
    HVector h = h_vector(k);
    for (const auto& [c2, e] : h.entries) {
      ThetaExpr s = sym_simplify(e);
      CHECK(s.eval(cache) == e.eval(cache));
    }
  }
}

TEST_CASE("decomposition reproduces the generating functions") {
  for (int k = 1; k <= 7; ++k) {
    FrobProduct fp(k, Rat(40));
    for (long long a2 = k % 2; a2 <= k + 4; a2 += 2)
      CHECK(cpsi_from_h(k, a2, Rat(40)) == fp.cpsi(a2));
  }

  CHECK_THROWS_AS(cpsi_from_h(2, 1, Rat(10)), std::invalid_argument);
  CHECK_THROWS_AS(cpsi_from_h(2, -2, Rat(10)), std::invalid_argument);
  CHECK_THROWS_AS(cpsi_from_h(0, 0, Rat(10)), std::invalid_argument);
}

TEST_CASE("quotient display for the k=4 constant term") {
  // CPsi_{4,0} = (theta_{1,1}^2 theta_{2,0} + theta_{1,0}^2 theta_{2,2})
  //              / (q^(1/2) (q;q)^4)
  Rat inner(31);
  ThetaCache cache{inner};
  ThetaExpr num = T(2, 2) * T(2, 2) * T(4, 0) + T(2, 0) * T(2, 0) * T(4, 4);
  QSeries expect = (num.eval(cache) * pochhammer(1, 1, 1, inner).pow(4).inverse())
                       .mul_monomial(Rat(1), -1, 2)
                       .truncated(Rat(30));
  CHECK(cpsi_from_h(4, 0, Rat(30)) == expect);
  CHECK(cpsi_direct(4, 0, Rat(30)) == expect);
}

TEST_CASE("pochhammer rendering") {
  // theta_{1,0} = (q^2;q^2)^5 / ((q;q)^2 (q^4;q^4)^2)
  CHECK(sym_render(T(2, 0), RenderMode::pochhammer) ==
        "(q^2;q^2)^5 / ((q;q)^2 (q^4;q^4)^2)");
  // theta_{1,1} = 2 q^(1/4) (q^4;q^4)^2 / (q^2;q^2)
  CHECK(sym_render(T(2, 2), RenderMode::pochhammer) ==
        "2 q^(1/4) (q^4;q^4)^2 / (q^2;q^2)");
  CHECK(sym_render(T(2, 0), RenderMode::theta) == "theta[1,0]");
  CHECK(sym_render(ThetaExpr::zero(), RenderMode::pochhammer) == "0");

  // rendered strings evaluate back to the theta constants
  for (long long m2 : {2L, 4L, 12L})
    for (long long b2 = 0; b2 <= m2; b2 += 2) {
      std::string s = sym_render(T(m2, b2), RenderMode::pochhammer);
      CHECK(eval_product_string(s, Rat(20)) == theta_const({m2, b2}, Rat(20)));
      std::string t = sym_render(T(m2, b2), RenderMode::etaklein);
      CHECK(eval_product_string(t, Rat(20)) == theta_const({m2, b2}, Rat(20)));
    }

  // multi-term render round-trip
  ThetaExpr c6 = sym_simplify(h_vector(6).entry(6));
  ThetaCache cache{Rat(15)};
  CHECK(eval_product_string(sym_render(c6, RenderMode::pochhammer), Rat(15)) ==
        c6.eval(cache));
  CHECK(eval_product_string(sym_render(c6, RenderMode::etaklein), Rat(15)) ==
        c6.eval(cache));
}

TEST_CASE("generating-function rendering") {
  // central k=2 quotient consolidates to the classical two-coloured form
  std::string s2 =
      render_cpsi(2, 2, h_vector(2).entry(2), RenderMode::pochhammer);
  CHECK(s2 == "(q^2;q^2)^5 / ((q;q)^4 (q^4;q^4)^2)");
  QSeries direct = cpsi_direct(2, 2, Rat(30));
  CHECK(eval_product_string(s2, Rat(30)) == direct);
  CHECK(eval_product_string("(q^2;q^4) / ((q;q^2)^4 (q^4;q^4))", Rat(30)) ==
        direct);

  // eta/Klein mode round-trips through the parser as well
  std::string s40 =
      render_cpsi(4, 0, h_vector(4).entry(0), RenderMode::etaklein);
  CHECK(eval_product_string(s40, Rat(25)) == cpsi_direct(4, 0, Rat(25)));
  std::string p40 =
      render_cpsi(4, 0, h_vector(4).entry(0), RenderMode::pochhammer);
  CHECK(eval_product_string(p40, Rat(25)) == cpsi_direct(4, 0, Rat(25)));

  // theta mode shows the quotient shape
  std::string t40 = render_cpsi(4, 0, h_vector(4).entry(0), RenderMode::theta);
  CHECK(t40 ==
        "q^(-1/2) (theta[1,0]^2 theta[2,2] + theta[1,1]^2 theta[2,0]) / (q;q)^4");
}

TEST_CASE("product strings evaluate atom by atom") {
  CHECK(eval_product_string("eta(1)", Rat(5)) == eta_series(Rat(5)));
  CHECK(eval_product_string("t(1/2;2)", Rat(5)) ==
        klein_form(1, 2, Rat(3)).substitute(2));
  CHECK(eval_product_string("q^(-1/2) q^(1/2)", Rat(5)) == QSeries::one(Rat(5)));
  CHECK(eval_product_string("3 + -2", Rat(4)) ==
        QSeries::from_terms(1, {{0, Rat(1)}}, Rat(4)));
  CHECK(eval_product_string("(q;q)^2 / (q;q)", Rat(9)) ==
        pochhammer(1, 1, 1, Rat(9)));
  CHECK(eval_product_string("2 q^(1/4) (q^4;q^4)^2 / (q^2;q^2)", Rat(12)) ==
        theta_const({2, 2}, Rat(12)));
  CHECK(eval_product_string("1 / (q;q)", Rat(8)) ==
        pochhammer(1, 1, 1, Rat(8)).inverse());

  CHECK_THROWS_AS(eval_product_string("", Rat(5)), std::invalid_argument);
  CHECK_THROWS_AS(eval_product_string("q^", Rat(5)), std::invalid_argument);
  CHECK_THROWS_AS(eval_product_string("(q;q", Rat(5)), std::invalid_argument);
  CHECK_THROWS_AS(eval_product_string("eta(0)", Rat(5)), std::invalid_argument);
  CHECK_THROWS_AS(eval_product_string("t(3/2;4)", Rat(5)), std::invalid_argument);
  CHECK_THROWS_AS(eval_product_string("2 / / 3", Rat(5)), std::invalid_argument);
  CHECK_THROWS_AS(eval_product_string("+ 1", Rat(5)), std::invalid_argument);
  CHECK_THROWS_AS(eval_product_string("(q;q))", Rat(5)), std::invalid_argument);
}

}  // TEST_SUITE
