// Factorization shape of a rational prime in K and the complex-conjugation
// action on the primes above it.
#pragma once

#include <cstdint>
#include <vector>

#include "weilzeta/cmfield.hpp"
#include "weilzeta/modpoly.hpp"

namespace weilzeta {

struct Place {
  int residue_degree = 0;  // f
  int ramification = 1;    // e
  ModPoly factor;          // monic irreducible factor of minpoly mod p
  int conj_partner = -1;   // index into places; self when the place is c-fixed
};

struct PrimeSplitting {
  std::int64_t p = 0;
  std::vector<Place> places;
  bool ramified = false;  // some e > 1
};

enum class PrimeClassKind { NoneFixed, SomeFixed, Bad };

struct PrimeClass {
  PrimeClassKind kind = PrimeClassKind::Bad;
  // NoneFixed: r = number of conjugation-swapped pairs (= places/2).
  // SomeFixed: r = number of swapped pairs among the places (r' in the
  // unramified case analysis).
  int r = 0;
  bool ramified = false;
};

// Dedekind factorization of minpoly mod p with the conjugation pairing
// (partner of (p, g_i(theta)) is the factor dividing g_i(conj_theta(x))).
// Throws BadPrime when p divides the index certification fails, and
// DenominatorCollision when conj_theta has a denominator divisible by p.
PrimeSplitting splitting_type(const CMField& field, std::int64_t p, std::uint64_t seed = kDefaultSeed);

PrimeClass classify_prime(const CMField& field, std::int64_t p, std::uint64_t seed = kDefaultSeed);

}  // namespace weilzeta
