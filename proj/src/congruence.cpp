#include "frobq/congruence.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "frobq/decomp.hpp"
#include "frobq/rational.hpp"
#include "frobq/thetafun.hpp"

namespace frobq {

namespace {

struct TableRow {
  int k;
  long long a2, A, B, M;
  CongruenceStatus status;
};

// The published congruence table for the k = 4 family.
const TableRow kPaperTable[] = {
    {4, 0, 2, 1, 32, CongruenceStatus::proved},
    {4, 0, 4, 3, 64, CongruenceStatus::proved},
    {4, 0, 7, 2, 7, CongruenceStatus::conjectured},
    {4, 2, 1, 0, 4, CongruenceStatus::proved},
    {4, 2, 7, 3, 7, CongruenceStatus::conjectured},
};

CongruenceStatus label(int k, long long a2, long long A, long long B,
                       long long M) {
  for (const TableRow& row : kPaperTable)
    if (row.k == k && row.a2 == a2 && row.A == A && row.B == B &&
        M % row.M == 0)
      return row.status;
  return CongruenceStatus::discovered;
}

std::vector<long long> primes_upto(long long bound) {
  std::vector<bool> sieve((std::size_t)bound + 1, true);
  std::vector<long long> out;
  for (long long p = 2; p <= bound; ++p) {
    if (!sieve[(std::size_t)p]) continue;
    out.push_back(p);
    for (long long m = p * p; m <= bound; m += p) sieve[(std::size_t)m] = false;
  }
  return out;
}

void check_series_params(const char* who, int k, long long a2) {
  if (k < 1 || a2 < 0 || ((a2 - k) % 2) != 0)
    throw std::invalid_argument(std::string(who) +
                                ": need k >= 1 and a2 >= 0 with a2 == k mod 2");
}

}  // namespace

std::string status_str(CongruenceStatus s) {
  switch (s) {
    case CongruenceStatus::proved:
      return "proved";
    case CongruenceStatus::conjectured:
      return "conjectured";
    default:
      return "discovered";
  }
}

bool verify_claim(const CongruenceClaim& c, const QSeries& series,
                  CongruenceCounterexample* out) {
  if (c.A < 1 || c.B < 0 || c.B >= c.A || c.M < 2 || c.n_max < 0)
    throw std::invalid_argument("verify_claim: malformed claim");
  Rat cover = make_rat(c.n_max);
  if (!(series.prec() > cover))
    throw std::invalid_argument(
        "verify_claim: series precision does not cover n_max");
  Int m = make_int(c.M);
  for (long long idx = c.B; idx <= c.n_max; idx += c.A) {
    Rat cf = series.coeff(idx);
    Int rem = cf.get_num() % m;
    if (cf.get_den() != 1 || rem != 0) {
      if (out) {
        out->index = idx;
        out->coefficient = cf;
      }
      return false;
    }
  }
  return true;
}

std::vector<CongruenceClaim> scan_congruences(int k, long long a2,
                                              long long A_max, long long M_max,
                                              long long n_max, int workers) {
  check_series_params("scan_congruences", k, a2);
  if (A_max < 1 || M_max < 2 || n_max < 0)
    throw std::invalid_argument("scan_congruences: malformed bounds");
  if (M_max > 1000000)
    throw std::invalid_argument("scan_congruences: M_max too large");
  QSeries series = cpsi_from_h(k, a2, make_rat(n_max) + 1);
  std::vector<long long> primes = primes_upto(M_max);

  std::vector<std::pair<long long, long long>> cells;
  for (long long A = 1; A <= A_max; ++A)
    for (long long B = 0; B < A; ++B)
      if (B <= n_max) cells.emplace_back(A, B);

  auto scan_cell = [&](long long A, long long B) {
    std::vector<CongruenceClaim> out;
    Int g = make_int(0);
    for (long long idx = B; idx <= n_max; idx += A) {
      Int num = series.coeff(idx).get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g == 0) {
      // Every sampled coefficient vanishes: any divisor works, report the cap.
      out.push_back({k, a2, A, B, M_max, label(k, a2, A, B, M_max), n_max});
      return out;
    }
    for (long long p : primes) {
      Int pb = make_int(p);
      Int pr = g % pb;
      if (pr != 0) continue;
      long long M = 1;
      Int rest = g;
      while (M <= M_max / p) {
        Int rem = rest % pb;
        if (rem != 0) break;
        rest /= pb;
        M *= p;
      }
      out.push_back({k, a2, A, B, M, label(k, a2, A, B, M), n_max});
    }
    return out;
  };

  int w = std::max(1, workers);
  std::vector<std::vector<CongruenceClaim>> per_cell(cells.size());
  auto run = [&](int wi) {
    for (std::size_t i = (std::size_t)wi; i < cells.size(); i += (std::size_t)w)
      per_cell[i] = scan_cell(cells[i].first, cells[i].second);
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int wi = 1; wi < w; ++wi) threads.emplace_back(run, wi);
    run(0);
    for (std::thread& t : threads) t.join();
  }

  std::vector<CongruenceClaim> out;
  for (std::vector<CongruenceClaim>& cell : per_cell)
    for (CongruenceClaim& c : cell) out.push_back(std::move(c));
  return out;
}

QSeries series_4_0_odd(const Rat& prec) {
  QSeries num =
      pochhammer(2, 1, 2, prec).pow(7) * pochhammer(4, 1, 4, prec).pow(2);
  QSeries den =
      pochhammer(1, 1, 1, prec).pow(10) * pochhammer(1, 1, 2, prec).pow(4);
  return (num * den.inverse()).scaled(make_rat(32));
}

std::string claim_line(const CongruenceClaim& c) {
  std::ostringstream os;
  os << "k=" << c.k << " a2=" << c.a2 << " A=" << c.A << " B=" << c.B
     << " M=" << c.M << " status=" << status_str(c.status)
     << " n_max=" << c.n_max;
  return os.str();
}

std::string claim_table(const std::vector<CongruenceClaim>& claims) {
  std::ostringstream os;
  os << std::setw(3) << "k" << std::setw(4) << "a2" << std::setw(4) << "A"
     << std::setw(4) << "B" << std::setw(8) << "M"
     << "  " << std::left << std::setw(12) << "status" << std::right
     << std::setw(6) << "n_max" << '\n';
  for (const CongruenceClaim& c : claims) {
    std::string m = std::to_string(c.M);
    if (c.status == CongruenceStatus::conjectured) m += '*';
    os << std::setw(3) << c.k << std::setw(4) << c.a2 << std::setw(4) << c.A
       << std::setw(4) << c.B << std::setw(8) << m << "  " << std::left
       << std::setw(12) << status_str(c.status) << std::right << std::setw(6)
       << c.n_max << '\n';
  }
  return os.str();
}

}  // namespace frobq
