#include <doctest.h>

#include <set>
#include <stdexcept>

#include "frobq/frobgen.hpp"
#include "frobq/thetafun.hpp"
#include "oracles.hpp"

using namespace frobq;
using namespace frobq::testing;

TEST_SUITE("frobgen") {

TEST_CASE("symbol weights and validity") {
  // ((3,1)(2,2)(0,1) / (1,3)(0,1)) in 3 colors
  FrobPartition f{{{3, 1}, {2, 2}, {0, 1}}, {{1, 3}, {0, 1}}};
  CHECK(fp_weight(f) == 3 + 5 + 1);
  CHECK(fp_valid(f, 3, 5));   // a - k/2 = 1 => a2 = 5
  CHECK(!fp_valid(f, 3, 3));  // wrong row-length difference
  CHECK(fp_str(f) == "(3_1 2_2 0_1 / 1_3 0_1)");

  // rows must strictly decrease in (value, color)
  CHECK(!fp_valid(FrobPartition{{{2, 1}, {2, 1}}, {}}, 3, 7));
  CHECK(fp_valid(FrobPartition{{{2, 2}, {2, 1}}, {}}, 3, 7));
  CHECK(!fp_valid(FrobPartition{{{2, 1}, {2, 2}}, {}}, 3, 7));
  CHECK(!fp_valid(FrobPartition{{{1, 4}}, {{0, 1}}}, 3, 3));  // color out of range

  // empty symbol only fits the central residue
  CHECK(fp_valid(FrobPartition{}, 2, 2));
  CHECK(!fp_valid(FrobPartition{}, 2, 0));
  CHECK(count_plain(2, 2, 0) == 1);

  DrakeSymbol d{{{1, 2}}, {{0, 2}}, {3, 1}};
  CHECK(drake_weight(d) == 1 + 1 + 1);
  CHECK(drake_valid(d, 4, 0));  // |T| = k/2 - a + r - s = 2
  CHECK(!drake_valid(d, 4, 4));
  CHECK(drake_str(d) == "(1_2 / 0_2 ; {3 1})");
  CHECK(!drake_valid(DrakeSymbol{{}, {}, {1, 3}}, 4, 0));  // colors must decrease
}

TEST_CASE("weight-zero counts are binomial") {
  for (int k = 1; k <= 6; ++k)
    for (long long a2 = -k; a2 <= k; a2 += 2) {
      INFO("k=", k, " a2=", a2);
      Int expect = binomial(k, (k - a2) / 2);
      CHECK(count_plain(k, a2, 0) == expect);
      CHECK(count_drake(k, a2, 0) == expect);
      CHECK(cpsi_direct(k, a2, Rat(1)).coeff(0) == Rat(expect));
    }
  // residues beyond |a| = k/2 start later: for k=2, a=2 the lightest symbols
  // are ((0_c) / -) of weight 1, one per color
  CHECK(count_plain(2, 4, 0) == 0);
  CHECK(count_plain(2, 4, 1) == 2);
}

TEST_CASE("parity of the residue is enforced") {
  CHECK_THROWS_AS(count_plain(2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(cpsi_direct(3, 2, Rat(5)), std::invalid_argument);
  CHECK_THROWS_AS(cpsi_enumerated(1, 0, 3), std::invalid_argument);
}

TEST_CASE("drake symbols biject onto plain symbols") {
  for (int k = 2; k <= 4; ++k) {
    for (long long a2 = k - 4; a2 <= k + 2; a2 += 2) {
      for (long long n = 0; n <= 5; ++n) {
        std::set<std::string> images;
        long long visited = 0;
        count_drake(k, a2, n, [&](const DrakeSymbol& d) {
          ++visited;
          CHECK(drake_valid(d, k, a2));
          CHECK(drake_weight(d) == n);
          FrobPartition f = drake_to_plain(d);
          CHECK(fp_valid(f, k, a2));
          CHECK(fp_weight(f) == n);
          CHECK(plain_to_drake(f) == d);
          images.insert(fp_str(f));
        });
        INFO("k=", k, " a2=", a2, " n=", n);
        CHECK(make_int(visited) == count_drake(k, a2, n));
        CHECK(make_int(static_cast<long long>(images.size())) == count_plain(k, a2, n));  // bijective image
      }
    }
  }
}

TEST_CASE("plain enumeration agrees with the visited count") {
  long long via_visit = 0;
  count_plain(3, 3, 6, [&](const FrobPartition& f) {
    CHECK(fp_valid(f, 3, 3));
    CHECK(fp_weight(f) == 6);
    ++via_visit;
  });
  CHECK(make_int(via_visit) == count_plain(3, 3, 6));
}

TEST_CASE("product extraction matches enumeration") {
  for (int k = 1; k <= 3; ++k) {
    FrobProduct prod(k, Rat(9));
    for (long long a2 = k - 4; a2 <= k + 4; a2 += 2) {
      INFO("k=", k, " a2=", a2);
      QSeries direct = prod.cpsi(a2);
      CHECK(direct == cpsi_enumerated(k, a2, 8, EnumKind::plain));
      CHECK(direct == cpsi_enumerated(k, a2, 8, EnumKind::drake));
    }
  }
}

TEST_CASE("partition numbers appear at k=1") {
  QSeries ps = cpsi_direct(1, 1, Rat(60));
  auto pn = partition_numbers(59);
  for (long long n = 0; n < 60; ++n) CHECK(ps.coeff(n) == Rat(pn[n]));
  CHECK(cphi_direct(1, Rat(20)) == cpsi_direct(1, 1, Rat(20)));
}

TEST_CASE("two classical product forms") {
  Rat prec(24);
  // CPhi_2 = (q^2;q^4) / ((q;q^2)^4 (q^4;q^4))
  QSeries lhs = cphi_direct(2, prec);
  QSeries rhs = pochhammer(2, 1, 4, prec) *
                (pochhammer(1, 1, 2, prec).pow(4) * pochhammer(4, 1, 4, prec)).inverse();
  CHECK(lhs == rhs);

  // CPsi_{2,0} = 2 / ((q;q)(q;q^4)(q^2;q^4)^2(q^3;q^4))
  QSeries lhs0 = cpsi_direct(2, 0, prec);
  QSeries rhs0 = (pochhammer(1, 1, 1, prec) * pochhammer(1, 1, 4, prec) *
                  pochhammer(2, 1, 4, prec).pow(2) * pochhammer(3, 1, 4, prec))
                     .inverse()
                     .scaled(Rat(2));
  CHECK(lhs0 == rhs0);
}

TEST_CASE("far-out residues vanish") {
  FrobProduct prod(2, Rat(5));
  CHECK(prod.cpsi(80).is_zero());
  CHECK(prod.cpsi(80).prec() == 5);
  CHECK(prod.cpsi(-78).is_zero());
}

TEST_CASE("central residue of the square by hand") {
  // cphi_2(n) for n <= 4: symbols in 2 colors with |top| = |bottom|
  // n=0: empty; n=1: ((0_c)/(0_c')) 4 ways; the series starts 1 + 4q + 9q^2
  QSeries s = cphi_direct(2, Rat(3));
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == 4);
  CHECK(s.coeff(2) == 9);
}

}  // TEST_SUITE
