#include "weilzeta/dirichlet.hpp"

#include <algorithm>
#include <stdexcept>

#include "weilzeta/error.hpp"

namespace weilzeta {

DirichletCoeffs DirichletCoeffs::zeros(std::int64_t N) {
  DirichletCoeffs d;
  d.N = N;
  d.coeffs.assign(static_cast<std::size_t>(N) + 1, Rat(0));
  return d;
}

DirichletCoeffs DirichletCoeffs::ones(std::int64_t N) {
  DirichletCoeffs d = zeros(N);
  for (std::int64_t n = 1; n <= N; ++n) d.at(n) = 1;
  return d;
}

DirichletCoeffs series_convolve(const DirichletCoeffs& a, const DirichletCoeffs& b) {
  if (a.N != b.N) fail(ErrorCode::TruncationMismatch, std::to_string(a.N) + " vs " + std::to_string(b.N));
  DirichletCoeffs c = DirichletCoeffs::zeros(a.N);
  for (std::int64_t d = 1; d <= a.N; ++d) {
    if (a.at(d) == 0) continue;
    for (std::int64_t m = d; m <= a.N; m += d) {
      if (b.at(m / d) == 0) continue;
      c.at(m) += a.at(d) * b.at(m / d);
    }
  }
  return c;
}

DirichletCoeffs series_invert(const DirichletCoeffs& a) {
  if (a.N < 1 || a.at(1) == 0) fail(ErrorCode::NonUnitLeadingCoefficient, "series_invert needs coeffs[1] != 0");
  DirichletCoeffs b = DirichletCoeffs::zeros(a.N);
  b.at(1) = Rat(1) / a.at(1);
  for (std::int64_t n = 2; n <= a.N; ++n) {
    Rat sum(0);
    for (std::int64_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      std::int64_t e = n / d;
      if (d != n) sum += b.at(d) * a.at(e);        // divisor d < n
      if (e != n && e != d) sum += b.at(e) * a.at(d);  // divisor e < n
    }
    b.at(n) = -sum / a.at(1);
  }
  return b;
}

DirichletCoeffs series_dilate(const DirichletCoeffs& a, int k) {
  if (k < 1) throw std::invalid_argument("dilate needs k >= 1");
  DirichletCoeffs c = DirichletCoeffs::zeros(a.N);
  for (std::int64_t n = 1; n <= a.N; ++n) {
    // n^k <= N with overflow guard
    std::int64_t idx = 1;
    bool fits = true;
    for (int i = 0; i < k; ++i) {
      if (idx > a.N / n) { fits = false; break; }
      idx *= n;
    }
    if (!fits || idx > a.N) break;
    c.at(idx) = a.at(n);
  }
  return c;
}

DirichletCoeffs series_restrict_coprime(const DirichletCoeffs& a, const std::vector<std::int64_t>& s) {
  DirichletCoeffs c = a;
  for (std::int64_t p : s) {
    if (p < 2) continue;
    for (std::int64_t m = p; m <= a.N; m += p) c.at(m) = 0;
  }
  return c;
}

RatPoly pn_poly(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("pn_poly defined for 0 <= n <= 64");
  RatPoly p = RatPoly::constant(Rat(1));
  RatPoly x = RatPoly::x();
  RatPoly one = RatPoly::constant(Rat(1));
  for (int m = 0; m < n; ++m) {
    // P_{m+1} = x (1 - x) P_m' + (1 + m x) P_m
    p = x * (one - x) * p.derivative() + (one + x * Rat(m)) * p;
  }
  return p;
}

RatPoly qn_poly(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("qn_poly defined for 0 <= n <= 64");
  RatPoly q = RatPoly::constant(Rat(1));
  RatPoly x = RatPoly::x();
  RatPoly one = RatPoly::constant(Rat(1));
  RatPoly x2 = x * x;
  for (int m = 0; m < n; ++m) {
    // Q_{m+1} = x (1 - x^2) Q_m' + (1 + (2m+1) x^2) Q_m
    q = x * (one - x2) * q.derivative() + (one + x2 * Rat(2 * m + 1)) * q;
  }
  return q;
}

std::vector<Int> euler_expand(const EulerFactorRat& factor, int terms) {
  std::vector<Int> out(static_cast<std::size_t>(terms), 0);
  for (int k = 0; k < terms; ++k) {
    Int v = k < static_cast<int>(factor.num.size()) ? factor.num[static_cast<std::size_t>(k)] : Int(0);
    for (int j = 1; j <= k && j < static_cast<int>(factor.den.size()); ++j)
      v -= factor.den[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = v;  // den[0] = 1
  }
  return out;
}

namespace {

std::vector<Int> binomial_power(int sign_exponent, int power) {
  // (1 - t^m)^power with m = sign_exponent
  std::vector<Int> out{1};
  std::vector<Int> base(static_cast<std::size_t>(sign_exponent) + 1, 0);
  base[0] = 1;
  base[static_cast<std::size_t>(sign_exponent)] = -1;
  for (int i = 0; i < power; ++i) {
    std::vector<Int> next(out.size() + base.size() - 1, 0);
    for (std::size_t a = 0; a < out.size(); ++a)
      for (std::size_t b = 0; b < base.size(); ++b) next[a + b] += out[a] * base[b];
    out = std::move(next);
  }
  return out;
}

std::vector<Int> poly_to_ints(const RatPoly& p) {
  std::vector<Int> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_num());
  if (out.empty()) out.push_back(0);
  return out;
}

// b_K(p^k) at a certified ramified prime from the exponent combinatorics:
// one factor (k e + 1) per swapped pair, and a parity constraint 2 | k e per
// conjugation-fixed place.
Int ramified_coefficient(const PrimeSplitting& split, int k) {
  Int value = 1;
  std::vector<bool> seen(split.places.size(), false);
  for (std::size_t i = 0; i < split.places.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    int partner = split.places[i].conj_partner;
    if (partner == static_cast<int>(i)) {
      if ((static_cast<std::int64_t>(k) * split.places[i].ramification) % 2 != 0) return 0;
    } else {
      seen[static_cast<std::size_t>(partner)] = true;
      value *= Int(static_cast<long>(k) * split.places[i].ramification + 1);
    }
  }
  return value;
}

}  // namespace

EulerFactorRat euler_factor_Z(const CMField& field, std::int64_t p, std::uint64_t seed) {
  if (field.is_uncertified(p))
    fail(ErrorCode::BadPrimeFactor, "prime " + std::to_string(p) + " is not certified");
  PrimeSplitting split = splitting_type(field, p, seed);
  EulerFactorRat factor;
  factor.p = p;

  int fixed = 0;
  for (std::size_t i = 0; i < split.places.size(); ++i)
    if (split.places[i].conj_partner == static_cast<int>(i)) ++fixed;
  int pairs = static_cast<int>(split.places.size() - static_cast<std::size_t>(fixed)) / 2;

  if (!split.ramified) {
    if (fixed == 0) {
      factor.num = poly_to_ints(pn_poly(pairs));
      factor.den = binomial_power(1, pairs + 1);
    } else {
      factor.num = poly_to_ints(qn_poly(pairs));
      factor.den = binomial_power(2, pairs + 1);
    }
    return factor;
  }

  // Ramified certified: the series has a known rational closed form with
  // denominator (1-t)^{pairs+1} or (1-t^2)^{pairs+1}; recover the numerator
  // exactly and verify the remaining terms vanish.
  bool parity = false;
  for (std::size_t i = 0; i < split.places.size(); ++i)
    if (split.places[i].conj_partner == static_cast<int>(i) && split.places[i].ramification % 2 != 0)
      parity = true;
  factor.den = binomial_power(parity ? 2 : 1, pairs + 1);
  int den_deg = static_cast<int>(factor.den.size()) - 1;
  int window = 2 * den_deg + 8;
  std::vector<Int> series(static_cast<std::size_t>(window));
  for (int k = 0; k < window; ++k) series[static_cast<std::size_t>(k)] = ramified_coefficient(split, k);
  std::vector<Int> prod(series.size() + factor.den.size() - 1, 0);
  for (std::size_t a = 0; a < series.size(); ++a)
    for (std::size_t b = 0; b < factor.den.size(); ++b) prod[a + b] += series[a] * factor.den[b];
  factor.num.assign(prod.begin(), prod.begin() + den_deg + 1);
  while (factor.num.size() > 1 && factor.num.back() == 0) factor.num.pop_back();
  for (int k = den_deg + 1; k < window; ++k)
    if (prod[static_cast<std::size_t>(k)] != 0)
      throw std::logic_error("ramified Euler factor is not rational of the expected degree");
  if (factor.num.empty() || factor.num[0] != 1)
    throw std::logic_error("ramified Euler factor not normalized");
  return factor;
}

DirichletCoeffs z_coeffs(const CMField& field, std::int64_t N, std::uint64_t seed) {
  DirichletCoeffs out = DirichletCoeffs::zeros(N);
  if (N >= 1) out.at(1) = 1;
  if (N < 2) return out;
  auto spf = smallest_factor_table(static_cast<std::int32_t>(N));
  // Local expansions for each prime <= N, up to floor(log_p N) terms.
  std::vector<std::vector<Int>> local(static_cast<std::size_t>(N) + 1);
  for (std::int64_t p = 2; p <= N; ++p) {
    if (spf[static_cast<std::size_t>(p)] != p) continue;
    int kmax = 0;
    std::int64_t q = 1;
    while (q <= N / p) {
      q *= p;
      ++kmax;
    }
    local[static_cast<std::size_t>(p)] = euler_expand(euler_factor_Z(field, p, seed), kmax + 1);
  }
  for (std::int64_t n = 2; n <= N; ++n) {
    std::int64_t p = spf[static_cast<std::size_t>(n)];
    auto [k, m] = split_power(n, p);
    out.at(n) = Rat(local[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)]) * out.at(m);
  }
  return out;
}

DirichletCoeffs dedekind_coeffs(const std::vector<Int>& minpoly, const std::vector<std::int64_t>& reject_primes,
                                std::int64_t N, std::uint64_t seed) {
  DirichletCoeffs out = DirichletCoeffs::zeros(N);
  if (N >= 1) out.at(1) = 1;
  if (N < 2) return out;
  auto spf = smallest_factor_table(static_cast<std::int32_t>(N));
  std::vector<std::vector<Int>> local(static_cast<std::size_t>(N) + 1);
  for (std::int64_t p = 2; p <= N; ++p) {
    if (spf[static_cast<std::size_t>(p)] != p) continue;
    if (std::find(reject_primes.begin(), reject_primes.end(), p) != reject_primes.end())
      fail(ErrorCode::BadPrimeFactor, "prime " + std::to_string(p) + " rejected for ideal counting");
    int kmax = 0;
    std::int64_t q = 1;
    while (q <= N / p) {
      q *= p;
      ++kmax;
    }
    std::vector<std::int64_t> mp;
    mp.reserve(minpoly.size());
    for (const auto& c : minpoly)
      mp.push_back(static_cast<std::int64_t>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p))));
    auto factors = factor_mod_p(ModPoly(p, std::move(mp)), Rng::derived(seed, static_cast<std::uint64_t>(p)));
    // Ideal-count local factor: product over places of 1/(1 - t^f).
    std::vector<Int> loc(static_cast<std::size_t>(kmax) + 1, 0);
    loc[0] = 1;
    for (const auto& [factor, mult] : factors) {
      (void)mult;  // ramification does not change ideal counts by norm
      int f = factor.degree();
      std::vector<Int> next(loc.size(), 0);
      for (int k = 0; k <= kmax; ++k) {
        if (loc[static_cast<std::size_t>(k)] == 0) continue;
        for (int j = k; j <= kmax; j += f) next[static_cast<std::size_t>(j)] += loc[static_cast<std::size_t>(k)];
      }
      loc = std::move(next);
    }
    local[static_cast<std::size_t>(p)] = std::move(loc);
  }
  for (std::int64_t n = 2; n <= N; ++n) {
    std::int64_t p = spf[static_cast<std::size_t>(n)];
    auto [k, m] = split_power(n, p);
    out.at(n) = Rat(local[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)]) * out.at(m);
  }
  return out;
}

bool is_fundamental_discriminant(const Int& d) {
  if (d == 0 || d == 1) return false;
  Int mod4 = ((d % 4) + 4) % 4;
  if (mod4 == 1) return is_squarefree(d);
  if (mod4 != 0) return false;
  Int q = d / 4;
  Int qmod4 = ((q % 4) + 4) % 4;
  return (qmod4 == 2 || qmod4 == 3) && is_squarefree(q);
}

DirichletCoeffs quadratic_L_coeffs(const Int& d, std::int64_t N) {
  if (!is_fundamental_discriminant(d))
    fail(ErrorCode::NotFundamentalDiscriminant, d.get_str());
  if (!d.fits_slong_p()) fail(ErrorCode::NotFundamentalDiscriminant, "discriminant exceeds 64 bits");
  std::int64_t dv = d.get_si();
  DirichletCoeffs out = DirichletCoeffs::zeros(N);
  for (std::int64_t n = 1; n <= N; ++n) out.at(n) = kronecker_symbol(dv, n);
  return out;
}

}  // namespace weilzeta
