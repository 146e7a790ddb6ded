// Exact arithmetic base types and small numeric helpers shared by all modules.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace weilzeta {

// Arbitrary-precision integer and rational.  mpq_class canonicalizes on
// construction and after every operation, so values are always in lowest
// terms with positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) { return Rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Floor of the exact square root; x must be >= 0.
Int isqrt(const Int& x);

bool is_square(const Int& x);
bool is_squarefree(const Int& x);

// Conservative double approximation (exact conversion provided by GMP).
inline double to_double(const Rat& q) { return q.get_d(); }

std::string rat_to_string(const Rat& q);        // "p/q" or "p"
Rat rat_from_strings(const std::string& num, const std::string& den);

// Primes below a bound, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

// Smallest-prime-factor table for 0..bound (spf[0] = spf[1] = 0).
std::vector<std::int32_t> smallest_factor_table(std::int32_t bound);

// v_p(n) and n / p^{v_p(n)} in one pass.
std::pair<int, std::int64_t> split_power(std::int64_t n, std::int64_t p);

}  // namespace weilzeta
