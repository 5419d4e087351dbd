#include "frobq/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace frobq {

Rat make_rat(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(make_int(num), make_int(den));
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  const auto slash = s.find('/');
  try {
    Int num(slash == std::string::npos ? s : s.substr(0, slash));
    Int den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
    Rat r;
    r.get_num() = num;
    r.get_den() = den;
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  }
}

std::string rat_str(const Rat& r) { return r.get_str(); }

long long rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("rat_floor: out of range");
  return q.get_si();
}

long long rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("rat_ceil: out of range");
  return q.get_si();
}

Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long long llgcd(long long a, long long b) { return std::gcd(a, b); }

long long lllcm(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / llgcd(a, b) * b;
}

long long isqrt_ceil(const Rat& x) {
  if (x <= 0) return 0;
  long long n = rat_ceil(x);
  Int s;
  mpz_sqrt(s.get_mpz_t(), make_int(n).get_mpz_t());
  long long w = s.get_si();
  while (w * w < n) ++w;
  return w;
}

}  // namespace frobq
