// Univariate polynomials over a prime field F_p (p < 2^31) and quadratic
// symbols.  Residues are kept in [0, p) and all intermediates fit in 64-bit
// (products reduced through __int128).
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weilzeta/rng.hpp"
#include "weilzeta/types.hpp"

namespace weilzeta {

class ModPoly {
 public:
  ModPoly() : p_(2) {}
  ModPoly(std::int64_t p, std::vector<std::int64_t> coeffs);

  static ModPoly zero(std::int64_t p) { return ModPoly(p, {}); }
  static ModPoly constant(std::int64_t p, std::int64_t c) { return ModPoly(p, {c}); }
  static ModPoly x(std::int64_t p) { return ModPoly(p, {0, 1}); }

  std::int64_t modulus() const { return p_; }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
  }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  std::int64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::int64_t eval(std::int64_t x) const;

  ModPoly monic() const;
  ModPoly derivative() const;

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  bool operator==(const ModPoly& other) const = default;

  // (quotient, remainder); divisor must be nonzero with the same modulus.
  static std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);

  std::string str() const;  // e.g. "x^2+3x+1 mod 5"

 private:
  std::int64_t p_;
  std::vector<std::int64_t> coeffs_;  // ascending degree, trailing zeros trimmed
  void trim();
};

// Monic gcd; gcd(0, 0) = 0.  Throws ModulusMismatch if the moduli differ.
ModPoly poly_gcd_mod_p(const ModPoly& a, const ModPoly& b);

// a^e mod m (m nonzero, e >= 0).
ModPoly poly_powmod(const ModPoly& a, const Int& e, const ModPoly& m);

struct ModFactor {
  ModPoly factor;  // monic irreducible
  int multiplicity;
};

// Complete factorization: squarefree split, distinct-degree, then seeded
// equal-degree splitting (trace polynomials for p = 2, random powers
// otherwise).  Output is sorted by degree then by coefficient list, so it is
// deterministic regardless of the seed.  Throws ZeroPolynomial on f = 0.
std::vector<ModFactor> factor_mod_p(const ModPoly& f, Rng rng = Rng());

// Full Kronecker symbol (a | n), defined for all integers including n <= 0
// and even n.
int kronecker_symbol(std::int64_t a, std::int64_t n);

}  // namespace weilzeta
