// Cross-cutting checks: Frobenius traces, Picard-rank estimation by prime
// averaging, the torsion/ideal-count bridge, quartic L-function identities,
// the height-zeta identity, and asymptotic fitting.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weilzeta/cmfield.hpp"
#include "weilzeta/dirichlet.hpp"
#include "weilzeta/parallel.hpp"
#include "weilzeta/weilenum.hpp"

namespace weilzeta {

struct RhoEstimate {
  std::int64_t prime_bound = 0;
  std::int64_t sample_size = 0;
  Rat mean;
  int rounded = 0;
  // max |running mean - rounded| over the last 20% of samples
  Rat max_dev_window;
};

struct VerificationFailure {
  std::int64_t index = 0;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string name;
  std::string checked_range;
  std::vector<VerificationFailure> failures;
  bool passed = false;
};

// 2^r when p splits into 2r conjugation-swapped places, 0 when some place is
// c-fixed.  Requires p good and unramified (BadPrime otherwise).
int theta_frob(const CMField& field, std::int64_t p, std::uint64_t seed = kDefaultSeed);

// Mean of theta_frob over good unramified p <= prime_bound; the rounded mean
// estimates the invariant Picard rank.
RhoEstimate rho_estimate(const CMField& field, std::int64_t prime_bound,
                         std::uint64_t seed = kDefaultSeed, const Parallel& par = {});

// b_K(p) = theta(F_p) for every good unramified p <= prime_bound.
VerificationReport verify_prime_coefficient(const CMField& field, std::int64_t prime_bound,
                                            std::uint64_t seed = kDefaultSeed, const Parallel& par = {});

// a_K(n) = w_K b_K(n) for n <= N; lattice enumeration against Euler products.
// Requires the preset to be certified trivial_cw.
VerificationReport verify_weil_ideal_bridge(const CMField& field, std::int64_t N,
                                            std::uint64_t seed = kDefaultSeed, const Parallel& par = {});

// Degree-4 identities relating Z(K, s) to reflex zeta data, coefficientwise
// away from bad primes.
VerificationReport verify_g2_identity(const CMField& field, const G2Data& data, std::int64_t N,
                                      std::uint64_t seed = kDefaultSeed, const Parallel& par = {});

// Bounded-height point counts against (1/2) w_K Z(K,s) / zeta(2s) at indices
// coprime to the bad and ramified primes.
VerificationReport verify_height_zeta(const CMField& field, std::int64_t N,
                                      std::uint64_t seed = kDefaultSeed, const Parallel& par = {});

struct FitResult {
  double c_estimate = 0.0;
  double stability = 0.0;  // relative variation over the last decade
};

// Leading-constant estimate for N(x) ~ c x (log x)^{rho-1}.
FitResult fit_asymptotic(const CountTable& table, int rho);

}  // namespace weilzeta
