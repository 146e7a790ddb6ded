// The complete regular fan on sign vectors u in {-1,1}^g: rays e_u, maximal
// cones generated by chains of neighboring sign vectors (u^{s+1} differs from
// u^s in exactly one, never-repeated coordinate).  For g <= 3 these coincide
// with the single-apex description; for g >= 4 only the chained cones cover
// all of R^g.
#pragma once

#include <cstdint>
#include <vector>

#include "weilzeta/rng.hpp"
#include "weilzeta/types.hpp"

namespace weilzeta {

struct FanData {
  int g = 0;
  // 2^g sign vectors, entries +-1; ray i is the binary expansion of i.
  std::vector<std::vector<int>> rays;
  // Integer coordinates of each ray in a Z-basis of the cocharacter lattice:
  // coord_j(u) = (u_j + u_1) / 2 (so coord_1 = u_1).  Unimodularity is
  // checked against this lattice.
  std::vector<std::vector<int>> ray_coords;
  // Sorted g-tuples of ray indices, lexicographically ordered, deduplicated.
  std::vector<std::vector<int>> max_cones;
};

// Builds the fan, verifies every maximal cone is unimodular (determinant +-1
// in lattice coordinates) and sample-checks completeness with `samples`
// seeded rational points (exact membership arithmetic).  Throws GTooLarge
// when the cone list would not fit in memory (g > 7).
FanData build_fan(int g, int samples = 10'000, std::uint64_t seed = kDefaultSeed);

// Number of maximal cones: 2 for g = 1, 2^g g!/2 otherwise.
Int expected_max_cones(int g);

// Exact test: q (in sign-vector coordinates) lies in the cone spanned by the
// given rays.
bool cone_contains(const FanData& fan, const std::vector<int>& cone, const std::vector<Rat>& point);

// Exact test against the whole fan, prediction first then full scan.
bool fan_covers(const FanData& fan, const std::vector<Rat>& point);

}  // namespace weilzeta
