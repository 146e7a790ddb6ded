#include "weilzeta/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

int ray_index(const std::vector<int>& u) {
  int idx = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > 0) idx |= 1 << i;
  return idx;
}

// Solve sum lambda_k ray_k = point exactly; true iff all lambda_k >= 0.
bool in_cone(const std::vector<std::vector<int>>& rays, const std::vector<int>& cone,
             const std::vector<Rat>& point) {
  int g = static_cast<int>(point.size());
  std::vector<std::vector<Rat>> m(static_cast<std::size_t>(g), std::vector<Rat>(static_cast<std::size_t>(g) + 1, Rat(0)));
  for (int r = 0; r < g; ++r) {
    for (int c = 0; c < g; ++c)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = rays[static_cast<std::size_t>(cone[static_cast<std::size_t>(c)])][static_cast<std::size_t>(r)];
    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(g)] = point[static_cast<std::size_t>(r)];
  }
  // Gaussian elimination with exact arithmetic.
  for (int col = 0; col < g; ++col) {
    int pivot = -1;
    for (int r = col; r < g; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { pivot = r; break; }
    if (pivot < 0) return false;  // singular: degenerate cone
    std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < g; ++r) {
      if (r == col) continue;
      Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int c = col; c <= g; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  for (int r = 0; r < g; ++r) {
    Rat lambda = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(g)] / m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
    if (lambda < 0) return false;
  }
  return true;
}

Int int_det(std::vector<std::vector<Int>> m) {
  int n = static_cast<int>(m.size());
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) { pivot = r; break; }
      if (pivot < 0) return 0;
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        Int num = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                  m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = num / prev;
      }
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = 0;
    }
    prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  return sign * m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

// Chain cone through the sorted-ascending order of |q|, apex sign(q).
std::vector<int> predicted_cone(const FanData& fan, const std::vector<Rat>& q) {
  int g = fan.g;
  std::vector<int> u(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) u[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)] >= 0 ? 1 : -1;
  std::vector<int> order(static_cast<std::size_t>(g));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return abs(q[static_cast<std::size_t>(a)]) < abs(q[static_cast<std::size_t>(b)]);
  });
  std::vector<int> cone;
  cone.push_back(ray_index(u));
  for (int s = 0; s + 1 < g; ++s) {
    u[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])] *= -1;
    cone.push_back(ray_index(u));
  }
  std::sort(cone.begin(), cone.end());
  return cone;
}

}  // namespace

Int expected_max_cones(int g) {
  if (g == 1) return 2;
  Int half_fact = 1;
  for (int k = 3; k <= g; ++k) half_fact *= k;  // g!/2
  Int pow2 = 1;
  pow2 <<= g;
  return pow2 * half_fact;
}

bool cone_contains(const FanData& fan, const std::vector<int>& cone, const std::vector<Rat>& point) {
  return in_cone(fan.rays, cone, point);
}

bool fan_covers(const FanData& fan, const std::vector<Rat>& point) {
  std::vector<int> guess = predicted_cone(fan, point);
  if (std::binary_search(fan.max_cones.begin(), fan.max_cones.end(), guess) &&
      in_cone(fan.rays, guess, point))
    return true;
  for (const auto& cone : fan.max_cones)
    if (in_cone(fan.rays, cone, point)) return true;
  return false;
}

FanData build_fan(int g, int samples, std::uint64_t seed) {
  if (g < 1) fail(ErrorCode::BadFieldSpec, "fan needs g >= 1");
  if (g > 7) fail(ErrorCode::GTooLarge, "maximal-cone list grows as 2^g g!/2; g <= 7 supported");

  FanData fan;
  fan.g = g;
  int ray_count = 1 << g;
  fan.rays.resize(static_cast<std::size_t>(ray_count));
  fan.ray_coords.resize(static_cast<std::size_t>(ray_count));
  for (int idx = 0; idx < ray_count; ++idx) {
    std::vector<int> u(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) u[static_cast<std::size_t>(i)] = (idx >> i) & 1 ? 1 : -1;
    std::vector<int> coords(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) coords[static_cast<std::size_t>(i)] = (u[static_cast<std::size_t>(i)] + u[0]) / 2;
    fan.rays[static_cast<std::size_t>(idx)] = std::move(u);
    fan.ray_coords[static_cast<std::size_t>(idx)] = std::move(coords);
  }

  // Enumerate chains: start ray, then flip a fresh coordinate at each step.
  std::set<std::vector<int>> cones;
  std::vector<int> chain;
  std::vector<int> u(static_cast<std::size_t>(g));
  auto extend = [&](auto&& self, int used_mask) -> void {
    if (static_cast<int>(chain.size()) == g) {
      std::vector<int> sorted = chain;
      std::sort(sorted.begin(), sorted.end());
      cones.insert(std::move(sorted));
      return;
    }
    for (int i = 0; i < g; ++i) {
      if (used_mask & (1 << i)) continue;
      u[static_cast<std::size_t>(i)] *= -1;
      chain.push_back(ray_index(u));
      self(self, used_mask | (1 << i));
      chain.pop_back();
      u[static_cast<std::size_t>(i)] *= -1;
    }
  };
  for (int idx = 0; idx < ray_count; ++idx) {
    u = fan.rays[static_cast<std::size_t>(idx)];
    chain.assign(1, idx);
    extend(extend, 0);
  }
  fan.max_cones.assign(cones.begin(), cones.end());

  // Regularity: every maximal cone is a lattice basis.
  for (const auto& cone : fan.max_cones) {
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(g), std::vector<Int>(static_cast<std::size_t>(g)));
    for (int r = 0; r < g; ++r)
      for (int c = 0; c < g; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            fan.ray_coords[static_cast<std::size_t>(cone[static_cast<std::size_t>(r)])][static_cast<std::size_t>(c)];
    Int d = int_det(m);
    if (d != 1 && d != -1) fail(ErrorCode::BadFieldSpec, "non-unimodular maximal cone");
  }

  // Completeness, sample-checked with exact membership arithmetic.
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::vector<Rat> q(static_cast<std::size_t>(g));
    bool zero = true;
    for (int i = 0; i < g; ++i) {
      long num = static_cast<long>(rng.in_range(-1000, 1000));
      long den = static_cast<long>(rng.in_range(1, 50));
      q[static_cast<std::size_t>(i)] = make_rat(num, den);
      if (num != 0) zero = false;
    }
    if (zero) continue;
    if (!fan_covers(fan, q)) fail(ErrorCode::BadFieldSpec, "fan sample point not covered");
  }
  return fan;
}

}  // namespace weilzeta
