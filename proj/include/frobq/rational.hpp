#pragma once

#include <gmpxx.h>

#include <string>

namespace frobq {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long overloads; these funnel through long (same width
// here) so call sites stay ambiguity-free.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat make_rat(long long v) { return Rat(static_cast<long>(v)); }

// Exact rational e_num/e_den in canonical form (e_den > 0, reduced).
Rat make_rat(long long num, long long den);

// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument on
// malformed input or zero denominator.
Rat parse_rat(const std::string& s);

// Canonical "p" or "p/q" rendering.
std::string rat_str(const Rat& r);

// Integer floor/ceil; throws std::overflow_error if outside long long range.
long long rat_floor(const Rat& r);
long long rat_ceil(const Rat& r);

Int binomial(long long n, long long k);

long long llgcd(long long a, long long b);
long long lllcm(long long a, long long b);

// Smallest integer w >= 0 with w*w >= x (x >= 0).
long long isqrt_ceil(const Rat& x);

}  // namespace frobq
