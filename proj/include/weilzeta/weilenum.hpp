// Exact enumeration of Weil numbers: lattice points on the norm quadrics,
// with counting tables, reduced representatives and anticanonical heights.
#pragma once

#include <cstdint>
#include <vector>

#include "weilzeta/cmfield.hpp"
#include "weilzeta/parallel.hpp"

namespace weilzeta {

struct WeilNumber {
  std::vector<std::int64_t> coords;  // omega coordinates, length 2g
  std::int64_t n = 0;                // alpha * conj(alpha)
};

struct CountTable {
  std::vector<std::int64_t> grid;            // ascending x values
  std::vector<std::int64_t> counts;          // N(K, x) at each x
  std::vector<std::int64_t> heights_counts;  // bounded-height point counts (may be empty)
};

// Per-norm tallies for all n <= x_max from one enumeration pass.
// Index 0 is unused.
struct WeilSweep {
  std::int64_t x_max = 0;
  std::vector<std::int64_t> count;         // a_K(n)
  std::vector<std::int64_t> reduced;       // reduced Weil numbers of norm n
  std::vector<std::int64_t> sign_classes;  // reduced sign classes of norm n
};

// All integer vectors with Q_1 = n and Q_2 = ... = Q_g = 0, in lexicographic
// order.  Complete: solutions lie on the level set x^T G x = 2 g n of the
// positive-definite trace form, which the search covers with widened bounds
// and exact final filtering.
std::vector<WeilNumber> enumerate_weil(const CMField& field, std::int64_t n);

std::int64_t a_count(const CMField& field, std::int64_t n);

// Reduced solutions (coordinate gcd 1), one per sign class: the
// representative whose first nonzero coordinate is positive.
std::vector<WeilNumber> reduced_representatives(const CMField& field, std::int64_t n);

// Anticanonical height of the point represented by a reduced w; equals n.
// Throws RamifiedSupport when n shares a factor with a bad or ramified prime
// (the local data needed there lives in the Galois closure).
std::int64_t height_of_point(const CMField& field, const WeilNumber& w);

WeilSweep sweep_weil(const CMField& field, std::int64_t x_max, const Parallel& par = {});

// Prefix-sum table of N(K, x) on the grid {step, 2 step, ..., x_max}; also
// fills heights_counts with the number of rational points of height <= x
// (heights supported only at n coprime to bad and ramified primes).
CountTable count_table(const CMField& field, std::int64_t x_max, std::int64_t grid_step,
                       const Parallel& par = {});

// Bounded-height point counts at every x in 1..x_max (grid step 1).
CountTable count_points_bounded_height(const CMField& field, std::int64_t x_max,
                                       const Parallel& par = {});

// Test oracle: exhaustive search of the coordinate box that contains the
// Gram-form ball of radius^2 = 2 g n_max.  Intentionally independent of the
// pruned recursion above.
WeilSweep box_sweep(const CMField& field, std::int64_t n_max);

}  // namespace weilzeta
