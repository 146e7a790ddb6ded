// Deterministic complex root finder for exact-coefficient polynomials.
// Roots feed numerical validation checks only; exact code never consumes them.
#pragma once

#include <complex>
#include <vector>

#include "weilzeta/ratpoly.hpp"

namespace weilzeta {

using Complex = std::complex<long double>;

// All complex roots of a squarefree polynomial, Aberth-Ehrlich iteration at
// extended (80-bit or better) precision with a fixed starting configuration.
// Output sorted by (real, imag).
std::vector<Complex> complex_roots(const RatPoly& f);

// Pairs indices of roots into conjugate pairs (i, j) with imag(root[i]) > 0.
// Indices of (numerically) real roots are returned in the second list.
struct ConjugatePairing {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> real_roots;
};
ConjugatePairing pair_conjugates(const std::vector<Complex>& roots, long double tol);

}  // namespace weilzeta
