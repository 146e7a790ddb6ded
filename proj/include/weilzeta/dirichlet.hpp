// Truncated Dirichlet series with exact rational coefficients, and the Euler
// factors of the conjugate-norm ideal count, Dedekind zeta and quadratic
// L-series.
#pragma once

#include <cstdint>
#include <vector>

#include "weilzeta/cmfield.hpp"
#include "weilzeta/parallel.hpp"
#include "weilzeta/ratpoly.hpp"
#include "weilzeta/splitting.hpp"

namespace weilzeta {

struct DirichletCoeffs {
  std::int64_t N = 0;
  std::vector<Rat> coeffs;  // 1-indexed; coeffs[0] unused

  static DirichletCoeffs zeros(std::int64_t N);
  static DirichletCoeffs ones(std::int64_t N);  // zeta(s)
  Rat at(std::int64_t n) const { return coeffs[static_cast<std::size_t>(n)]; }
  Rat& at(std::int64_t n) { return coeffs[static_cast<std::size_t>(n)]; }
};

DirichletCoeffs series_convolve(const DirichletCoeffs& a, const DirichletCoeffs& b);
DirichletCoeffs series_invert(const DirichletCoeffs& a);
// Substitution s -> k s: coefficient a_n moves to index n^k.
DirichletCoeffs series_dilate(const DirichletCoeffs& a, int k);
// Drop every index sharing a factor with S.
DirichletCoeffs series_restrict_coprime(const DirichletCoeffs& a, const std::vector<std::int64_t>& s);

// Numerator of sum_k (k+1)^n x^k over (1-x)^{n+1}: degree n-1, monic for
// n >= 1, P_n(0) = 1, x-coefficient 2^n - (n+1), positive coefficients.
RatPoly pn_poly(int n);
// Numerator of sum_l (2l+1)^n x^{2l} over (1-x^2)^{n+1}: even, Q_n(0) = 1.
RatPoly qn_poly(int n);

// Local factor at p as a rational function of t = p^{-s}, normalized so both
// numerator and denominator have constant term 1.
struct EulerFactorRat {
  std::int64_t p = 0;
  std::vector<Int> num;  // ascending degree
  std::vector<Int> den;
};

// Coefficients of num/den as a power series in t, `terms` entries.
std::vector<Int> euler_expand(const EulerFactorRat& factor, int terms);

// Z_p(K, s): P_r(t)/(1-t)^{r+1} or Q_{r'}(t)/(1-t^2)^{r'+1} at unramified p,
// and the exponent-combinatorics closed form at certified ramified p.
EulerFactorRat euler_factor_Z(const CMField& field, std::int64_t p, std::uint64_t seed = kDefaultSeed);

// b_K(n) for n = 1..N, assembled multiplicatively.
DirichletCoeffs z_coeffs(const CMField& field, std::int64_t N, std::uint64_t seed = kDefaultSeed);

// Ideal counts by norm for the field cut out by `minpoly` (certified primes
// only; any prime <= N in reject_primes raises BadPrimeFactor).
DirichletCoeffs dedekind_coeffs(const std::vector<Int>& minpoly, const std::vector<std::int64_t>& reject_primes,
                                std::int64_t N, std::uint64_t seed = kDefaultSeed);

bool is_fundamental_discriminant(const Int& d);

// Completely multiplicative extension of the Kronecker character of D.
DirichletCoeffs quadratic_L_coeffs(const Int& d, std::int64_t N);

}  // namespace weilzeta
