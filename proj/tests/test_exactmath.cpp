#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "weilzeta/dirichlet.hpp"
#include "weilzeta/error.hpp"
#include "weilzeta/modpoly.hpp"
#include "weilzeta/ratpoly.hpp"
#include "weilzeta/rng.hpp"

using namespace weilzeta;

namespace {

// Oracle: monic gcd of two mod-p polynomials by brute-force common-root
// search, valid when both split into distinct linear factors over F_p.
ModPoly gcd_by_roots(const ModPoly& a, const ModPoly& b) {
  ModPoly acc = ModPoly::constant(a.modulus(), 1);
  for (std::int64_t r = 0; r < a.modulus(); ++r) {
    if (a.eval(r) == 0 && b.eval(r) == 0)
      acc = acc * ModPoly(a.modulus(), {-r, 1});
  }
  return acc;
}

ModPoly random_poly(std::int64_t p, int max_deg, Rng& rng) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(max_deg) + 1)) + 1);
  for (auto& v : c) v = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p)));
  return ModPoly(p, std::move(c));
}

}  // namespace

TEST_CASE("modpoly gcd examples") {
  // (x+1)^2 = x^2+1 over F_2
  ModPoly f2(2, {1, 0, 1}), g2(2, {1, 1});
  CHECK(poly_gcd_mod_p(f2, g2) == ModPoly(2, {1, 1}));

  // gcd with zero returns the monic normalization
  ModPoly f5(5, {2, 0, 2});  // 2x^2+2
  CHECK(poly_gcd_mod_p(f5, ModPoly::zero(5)) == ModPoly(5, {1, 0, 1}));
  CHECK(poly_gcd_mod_p(ModPoly::zero(5), ModPoly::zero(5)).is_zero());

  // Brute-force common-root oracle over F_5.  x^2+x+2 has no root in common
  // with x^2+1 (it is irreducible mod 5), so the gcd is 1; x^2+2x+2 shares
  // the root 2, giving x+3.
  ModPoly a(5, {1, 0, 1}), b(5, {2, 1, 1}), c(5, {2, 2, 1});
  CHECK(gcd_by_roots(a, b).degree() == 0);
  CHECK(poly_gcd_mod_p(a, b).degree() == 0);
  CHECK(gcd_by_roots(a, c) == ModPoly(5, {3, 1}));
  CHECK(poly_gcd_mod_p(a, c) == ModPoly(5, {3, 1}));

  CHECK_THROWS_AS(poly_gcd_mod_p(ModPoly(5, {1}), ModPoly(7, {1})), Error);
}

TEST_CASE("modpoly factorization examples") {
  // roots of -1 mod 5 are +-2
  auto f = factor_mod_p(ModPoly(5, {1, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor == ModPoly(5, {2, 1}));
  CHECK(f[0].multiplicity == 1);
  CHECK(f[1].factor == ModPoly(5, {3, 1}));

  // -1 is a non-residue mod 3
  auto g = factor_mod_p(ModPoly(3, {1, 0, 1}));
  REQUIRE(g.size() == 1);
  CHECK(g[0].factor == ModPoly(3, {1, 0, 1}));
  CHECK(g[0].multiplicity == 1);

  // (x+1)^2 over F_2
  auto h = factor_mod_p(ModPoly(2, {1, 0, 1}));
  REQUIRE(h.size() == 1);
  CHECK(h[0].factor == ModPoly(2, {1, 1}));
  CHECK(h[0].multiplicity == 2);

  CHECK_THROWS_AS(factor_mod_p(ModPoly::zero(7)), Error);
}

TEST_CASE("factorization reconstructs the input") {
  for (std::int64_t p : {2, 3, 5, 7, 10007}) {
    Rng rng(Rng::derived(kDefaultSeed, static_cast<std::uint64_t>(p)).next());
    for (int trial = 0; trial < 200; ++trial) {
      ModPoly f = random_poly(p, 8, rng);
      if (f.is_zero()) continue;
      auto factors = factor_mod_p(f, Rng::derived(kDefaultSeed, static_cast<std::uint64_t>(trial)));
      ModPoly product = ModPoly::constant(p, f.leading());
      for (const auto& [factor, mult] : factors) {
        CHECK(factor.leading() == 1);
        for (int i = 0; i < mult; ++i) product = product * factor;
        // declared irreducible of degree >= 2: no roots for small p
        if (p <= 10'000 && factor.degree() >= 2 && factor.degree() <= 3) {
          for (std::int64_t r = 0; r < p; ++r) CHECK(factor.eval(r) != 0);
        }
        // gcd of a factor with the input divides cleanly
        CHECK(ModPoly::divmod(f, factor).second.is_zero());
      }
      CHECK(product == f);
    }
  }
}

TEST_CASE("kronecker symbol") {
  CHECK(kronecker_symbol(5, 11) == 1);   // 4^2 = 16 = 5 mod 11
  CHECK(kronecker_symbol(123, 1) == 1);  // empty product
  CHECK(kronecker_symbol(-7, 1) == 1);
  CHECK(kronecker_symbol(2, 3) == -1);

  // Legendre oracle via Euler's criterion for odd primes.
  for (std::int64_t p : {3, 5, 7, 11, 13, 101}) {
    for (std::int64_t a = -30; a <= 30; ++a) {
      int expected = 0;
      std::int64_t am = ((a % p) + p) % p;
      if (am != 0) {
        std::int64_t e = 1;
        for (std::int64_t i = 0; i < (p - 1) / 2; ++i) e = e * am % p;
        expected = e == 1 ? 1 : -1;
      }
      CHECK(kronecker_symbol(a, p) == expected);
    }
  }

  // multiplicativity in both arguments on random nonzero triples
  Rng rng;
  auto nonzero = [&rng] {
    std::int64_t v = 0;
    while (v == 0) v = rng.in_range(-60, 60);
    return v;
  };
  for (int i = 0; i < 10'000; ++i) {
    std::int64_t a = nonzero(), b = nonzero(), n = nonzero(), m = nonzero();
    CHECK(kronecker_symbol(a * b, n) == kronecker_symbol(a, n) * kronecker_symbol(b, n));
    CHECK(kronecker_symbol(a, n * m) == kronecker_symbol(a, n) * kronecker_symbol(a, m));
  }
}

TEST_CASE("ratpoly arithmetic and discriminants") {
  RatPoly f({Rat(1), Rat(0), Rat(1)});  // x^2 + 1
  auto [q, r] = RatPoly::divmod(f, RatPoly({Rat(1), Rat(1)}));
  CHECK(q == RatPoly({Rat(-1), Rat(1)}));
  CHECK(r == RatPoly({Rat(2)}));

  CHECK(is_squarefree(f));
  CHECK(!is_squarefree(f * f));

  CHECK(poly_discriminant({Int(1), Int(0), Int(1)}) == -4);
  CHECK(poly_discriminant({Int(1), Int(1), Int(1)}) == -3);
  CHECK(poly_discriminant({Int(1), Int(1), Int(1), Int(1), Int(1)}) == 125);
  CHECK(poly_discriminant({Int(1), Int(0), Int(0), Int(0), Int(1)}) == 256);
  CHECK(poly_discriminant({Int(1), Int(0), Int(-1), Int(0), Int(1)}) == 144);
  CHECK(poly_discriminant({Int(2), Int(0), Int(4), Int(0), Int(1)}) == 2048);
}

TEST_CASE("power-sum numerator polynomials") {
  CHECK(pn_poly(0) == RatPoly({Rat(1)}));
  CHECK(pn_poly(1) == RatPoly({Rat(1)}));
  CHECK(pn_poly(2) == RatPoly({Rat(1), Rat(1)}));
  CHECK(pn_poly(3).coeff(1) == 4);  // 2^3 - 4

  CHECK(qn_poly(0) == RatPoly({Rat(1)}));
  CHECK(qn_poly(1) == RatPoly({Rat(1), Rat(0), Rat(1)}));
  for (int i = 1; i <= qn_poly(5).degree(); i += 2) CHECK(qn_poly(5).coeff(i) == 0);

  // Direct-series oracle: multiplying the truncated power sums by the
  // denominator must reproduce the polynomial and kill the tail.
  for (int n = 0; n <= 12; ++n) {
    int window = 2 * n + 5;
    std::vector<Rat> series(static_cast<std::size_t>(window), Rat(0));
    for (int k = 0; k < window; ++k) {
      Rat v(1);
      for (int i = 0; i < n; ++i) v *= Rat(k + 1);
      series[static_cast<std::size_t>(k)] = v;
    }
    RatPoly s(series);
    RatPoly den = RatPoly::constant(Rat(1));
    RatPoly one_minus_x({Rat(1), Rat(-1)});
    for (int i = 0; i <= n; ++i) den = den * one_minus_x;
    RatPoly prod = s * den;
    RatPoly p = pn_poly(n);
    for (int d = 0; d <= n + 2; ++d) CHECK(prod.coeff(d) == p.coeff(d));
    // structural facts
    if (n >= 1) {
      CHECK(p.degree() == n - 1);
      CHECK(p.leading() == 1);
      CHECK(p.coeff(0) == 1);
      Rat xcoef = p.coeff(1);
      Rat expected = Rat((1L << n) - (n + 1));
      if (n >= 2) CHECK(xcoef == expected);
      for (int d = 0; d <= p.degree(); ++d) CHECK(p.coeff(d) > 0);
    }

    // Q_n against sum (2l+1)^n x^{2l}
    std::vector<Rat> qseries(static_cast<std::size_t>(2 * window), Rat(0));
    for (int l = 0; l < window; ++l) {
      Rat v(1);
      for (int i = 0; i < n; ++i) v *= Rat(2 * l + 1);
      qseries[static_cast<std::size_t>(2 * l)] = v;
    }
    RatPoly qs(qseries);
    RatPoly qden = RatPoly::constant(Rat(1));
    RatPoly one_minus_x2({Rat(1), Rat(0), Rat(-1)});
    for (int i = 0; i <= n; ++i) qden = qden * one_minus_x2;
    RatPoly qprod = qs * qden;
    RatPoly qn = qn_poly(n);
    for (int d = 0; d <= 2 * n + 2; ++d) CHECK(qprod.coeff(d) == qn.coeff(d));
    CHECK(qn.coeff(0) == 1);
    if (n >= 1) {
      CHECK(qn.degree() == 2 * n);
      CHECK(qn.leading() == 1);
      for (int d = 0; d <= qn.degree(); d += 2) CHECK(qn.coeff(d) > 0);
    }
  }
}
