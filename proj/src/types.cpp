#include "weilzeta/types.hpp"

#include <cstdlib>
#include <stdexcept>

namespace weilzeta {

Int isqrt(const Int& x) {
  if (x < 0) throw std::invalid_argument("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_square(const Int& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

bool is_squarefree(const Int& x) {
  Int n = abs(x);
  if (n == 0) return false;
  // Trial division is plenty for the discriminant-sized inputs seen here.
  for (Int d = 2; d * d * d <= n; ++d) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      if (++e >= 2) return false;
    }
  }
  // Remaining n is 1, prime, or a semiprime p*q with p<=q; square iff p==q.
  return !is_square(n) || n == 1;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_strings(const std::string& num, const std::string& den) {
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

std::vector<std::int32_t> smallest_factor_table(std::int32_t bound) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(bound) + 1, 0);
  for (std::int32_t i = 2; i <= bound; ++i) {
    if (spf[static_cast<std::size_t>(i)] == 0) {
      for (std::int64_t j = i; j <= bound; j += i) {
        if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;
      }
    }
  }
  return spf;
}

std::pair<int, std::int64_t> split_power(std::int64_t n, std::int64_t p) {
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return {k, n};
}

}  // namespace weilzeta
