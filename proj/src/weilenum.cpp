#include "weilzeta/weilenum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <span>

#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

// Float mirror of the exact LDL data, bounds widened by one unit before use.
struct LdlFloat {
  int n = 0;
  std::vector<long double> diag;
  std::vector<std::vector<long double>> lower;  // lower[i][j], j < i
};

LdlFloat make_ldl(const CMField& field) {
  LdlFloat out;
  out.n = field.deg;
  out.diag.resize(static_cast<std::size_t>(out.n));
  out.lower.assign(static_cast<std::size_t>(out.n), {});
  for (int i = 0; i < out.n; ++i) {
    out.diag[static_cast<std::size_t>(i)] = static_cast<long double>(to_double(field.ldl_diag[static_cast<std::size_t>(i)]));
    out.lower[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i));
    for (int j = 0; j < i; ++j)
      out.lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<long double>(to_double(field.ldl_lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  }
  return out;
}

// Integer-quadratic solve a x^2 + b x + c = 0; appends integer roots.
void integer_roots(std::int64_t a, std::int64_t b, std::int64_t c, std::vector<std::int64_t>& out) {
  if (a == 0) {
    if (b == 0) return;  // caller handles the fully degenerate case
    if (c % b == 0) out.push_back(-c / b);
    return;
  }
  __int128 disc = static_cast<__int128>(b) * b - static_cast<__int128>(4) * a * c;
  if (disc < 0) return;
  long double approx = sqrtl(static_cast<long double>(disc));
  std::int64_t r = static_cast<std::int64_t>(approx);
  while (static_cast<__int128>(r) * r > disc) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= disc) ++r;
  if (static_cast<__int128>(r) * r != disc) return;
  for (std::int64_t s : {r, -r}) {
    std::int64_t num = -b + s;
    if (num % (2 * a) == 0) out.push_back(num / (2 * a));
    if (s == 0) break;
  }
}

// Bounded enumeration of the cone {Q_2 = ... = Q_g = 0, 1 <= Q_1 <= x_max}.
// Levels 2g-1 .. 1 walk integer ranges pruned by the Gram ball; the last
// coordinate is solved from Q_2 = 0 (it enters that form linearly or
// quadratically), except for g = 1 where it is walked as well.
class ConeSearch {
 public:
  ConeSearch(const CMField& field, std::int64_t x_max)
      : field_(field), ldl_(make_ldl(field)), x_max_(x_max) {
    // Solutions satisfy x^T G x = 2 g Q_1(x) <= 2 g x_max.
    budget_ = 2.0L * field.g * static_cast<long double>(x_max);
    x_.assign(static_cast<std::size_t>(field.deg), 0);
  }

  // visitor(coords, n) is called once per solution, in no particular order.
  template <typename Visitor>
  void run(Visitor&& visit, std::int64_t top_lo, std::int64_t top_hi) {
    visitor_ = [&](std::span<const std::int64_t> coords, std::int64_t n) { visit(coords, n); };
    int top = field_.deg - 1;
    auto [lo, hi] = level_range(top, 0.0L);
    lo = std::max(lo, top_lo);
    hi = std::min(hi, top_hi);
    for (std::int64_t v = lo; v <= hi; ++v) {
      x_[static_cast<std::size_t>(top)] = v;
      descend(top - 1, partial_cost(top));
    }
  }

  // Top-level range (used to split work across threads).
  std::pair<std::int64_t, std::int64_t> top_range() { return level_range(field_.deg - 1, 0.0L); }

 private:
  // Cost contribution d_i (x_i + sum_{j>i} L_ji x_j)^2 of level i given the
  // levels above it are assigned.
  long double partial_cost(int i) {
    long double center = 0;
    for (int j = i + 1; j < field_.deg; ++j)
      center += ldl_.lower[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * x_[static_cast<std::size_t>(j)];
    long double y = x_[static_cast<std::size_t>(i)] + center;
    return ldl_.diag[static_cast<std::size_t>(i)] * y * y;
  }

  std::pair<std::int64_t, std::int64_t> level_range(int i, long double used) {
    long double center = 0;
    for (int j = i + 1; j < field_.deg; ++j)
      center += ldl_.lower[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * x_[static_cast<std::size_t>(j)];
    long double room = budget_ - used;
    if (room < 0) room = 0;
    long double s = sqrtl(room / ldl_.diag[static_cast<std::size_t>(i)]);
    std::int64_t lo = static_cast<std::int64_t>(floorl(-center - s)) - 1;
    std::int64_t hi = static_cast<std::int64_t>(ceill(-center + s)) + 1;
    return {lo, hi};
  }

  void descend(int level, long double used) {
    if (level == 0) {
      solve_last(used);
      return;
    }
    auto [lo, hi] = level_range(level, used);
    for (std::int64_t v = lo; v <= hi; ++v) {
      x_[static_cast<std::size_t>(level)] = v;
      long double cost = partial_cost(level);
      if (used + cost > budget_ + 1.0L) continue;
      descend(level - 1, used + cost);
    }
  }

  void check_leaf() {
    auto n = weil_membership(field_, x_);
    if (n && *n <= x_max_) visitor_(x_, *n);
  }

  void solve_last(long double used) {
    if (field_.g == 1) {
      auto [lo, hi] = level_range(0, used);
      for (std::int64_t v = lo; v <= hi; ++v) {
        x_[0] = v;
        check_leaf();
      }
      return;
    }
    const QuadForm& q = field_.quadrics[1];
    std::int64_t a = q.coeff(0, 0);
    std::int64_t b = 0;
    for (int j = 1; j < field_.deg; ++j) b += q.coeff(0, j) * x_[static_cast<std::size_t>(j)];
    std::int64_t c = 0;
    for (int i = 1; i < field_.deg; ++i)
      for (int j = i; j < field_.deg; ++j)
        c += q.coeff(i, j) * x_[static_cast<std::size_t>(i)] * x_[static_cast<std::size_t>(j)];
    if (a == 0 && b == 0) {
      if (c != 0) return;
      // Q_2 does not see x_0 here; walk the ball range and rely on the
      // remaining exact checks.
      auto [lo, hi] = level_range(0, used);
      for (std::int64_t v = lo; v <= hi; ++v) {
        x_[0] = v;
        check_leaf();
      }
      return;
    }
    roots_.clear();
    integer_roots(a, b, c, roots_);
    for (std::int64_t v : roots_) {
      x_[0] = v;
      check_leaf();
    }
  }

  const CMField& field_;
  LdlFloat ldl_;
  std::int64_t x_max_;
  long double budget_;
  std::vector<std::int64_t> x_;
  std::vector<std::int64_t> roots_;
  std::function<void(std::span<const std::int64_t>, std::int64_t)> visitor_;
};

bool is_reduced(std::span<const std::int64_t> coords) {
  std::int64_t g = 0;
  for (auto v : coords) g = std::gcd(g, v < 0 ? -v : v);
  return g == 1;
}

bool sign_canonical(std::span<const std::int64_t> coords) {
  for (auto v : coords) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;
}

}  // namespace

std::vector<WeilNumber> enumerate_weil(const CMField& field, std::int64_t n) {
  std::vector<WeilNumber> out;
  ConeSearch search(field, n);
  auto range = search.top_range();
  search.run(
      [&](std::span<const std::int64_t> coords, std::int64_t norm) {
        if (norm == n) out.push_back({std::vector<std::int64_t>(coords.begin(), coords.end()), norm});
      },
      range.first, range.second);
  std::sort(out.begin(), out.end(), [](const WeilNumber& a, const WeilNumber& b) { return a.coords < b.coords; });
  return out;
}

std::int64_t a_count(const CMField& field, std::int64_t n) {
  std::int64_t total = 0;
  ConeSearch search(field, n);
  auto range = search.top_range();
  search.run([&](std::span<const std::int64_t>, std::int64_t norm) { if (norm == n) ++total; },
             range.first, range.second);
  return total;
}

std::vector<WeilNumber> reduced_representatives(const CMField& field, std::int64_t n) {
  std::vector<WeilNumber> out;
  for (auto& w : enumerate_weil(field, n))
    if (is_reduced(w.coords) && sign_canonical(w.coords)) out.push_back(std::move(w));
  return out;
}

std::int64_t height_of_point(const CMField& field, const WeilNumber& w) {
  if (!is_reduced(w.coords)) fail(ErrorCode::RamifiedSupport, "representative is not reduced");
  if (field.divides_bad_or_ramified(w.n))
    fail(ErrorCode::RamifiedSupport, "norm " + std::to_string(w.n) + " meets a bad or ramified prime");
  return w.n;
}

WeilSweep sweep_weil(const CMField& field, std::int64_t x_max, const Parallel& par) {
  WeilSweep sweep;
  sweep.x_max = x_max;
  std::size_t size = static_cast<std::size_t>(x_max) + 1;
  sweep.count.assign(size, 0);
  sweep.reduced.assign(size, 0);
  sweep.sign_classes.assign(size, 0);

  ConeSearch probe(field, x_max);
  auto [top_lo, top_hi] = probe.top_range();
  std::int64_t span = top_hi - top_lo + 1;
  if (span <= 0) return sweep;

  int workers = par.threads < 1 ? 1 : par.threads;
  if (workers > span) workers = static_cast<int>(span);

  // Tallies are commutative sums, so relaxed atomics keep the result
  // independent of the thread count.
  std::unique_ptr<std::atomic<std::int64_t>[]> count(new std::atomic<std::int64_t>[size]);
  std::unique_ptr<std::atomic<std::int64_t>[]> reduced(new std::atomic<std::int64_t>[size]);
  std::unique_ptr<std::atomic<std::int64_t>[]> classes(new std::atomic<std::int64_t>[size]);
  for (std::size_t i = 0; i < size; ++i) {
    count[i].store(0, std::memory_order_relaxed);
    reduced[i].store(0, std::memory_order_relaxed);
    classes[i].store(0, std::memory_order_relaxed);
  }

  std::vector<std::int64_t> starts;
  for (int w = 0; w < workers; ++w) starts.push_back(top_lo + span * w / workers);
  starts.push_back(top_hi + 1);

  Parallel runner{workers};
  runner.for_chunks(workers, [&](std::int64_t wlo, std::int64_t whi) {
    for (std::int64_t w = wlo; w < whi; ++w) {
      ConeSearch search(field, x_max);
      search.run(
          [&](std::span<const std::int64_t> coords, std::int64_t n) {
            count[static_cast<std::size_t>(n)].fetch_add(1, std::memory_order_relaxed);
            if (is_reduced(coords)) {
              reduced[static_cast<std::size_t>(n)].fetch_add(1, std::memory_order_relaxed);
              if (sign_canonical(coords))
                classes[static_cast<std::size_t>(n)].fetch_add(1, std::memory_order_relaxed);
            }
          },
          starts[static_cast<std::size_t>(w)], starts[static_cast<std::size_t>(w) + 1] - 1);
    }
  });
  for (std::size_t i = 0; i < size; ++i) {
    sweep.count[i] = count[i].load(std::memory_order_relaxed);
    sweep.reduced[i] = reduced[i].load(std::memory_order_relaxed);
    sweep.sign_classes[i] = classes[i].load(std::memory_order_relaxed);
  }
  return sweep;
}

CountTable count_table(const CMField& field, std::int64_t x_max, std::int64_t grid_step, const Parallel& par) {
  WeilSweep sweep = sweep_weil(field, x_max, par);
  CountTable table;
  std::int64_t running = 0, running_h = 0;
  std::int64_t next = grid_step;
  for (std::int64_t n = 1; n <= x_max; ++n) {
    running += sweep.count[static_cast<std::size_t>(n)];
    if (!field.divides_bad_or_ramified(n)) running_h += sweep.sign_classes[static_cast<std::size_t>(n)];
    if (n == next || n == x_max) {
      table.grid.push_back(n);
      table.counts.push_back(running);
      table.heights_counts.push_back(running_h);
      while (next <= n) next += grid_step;
    }
  }
  return table;
}

CountTable count_points_bounded_height(const CMField& field, std::int64_t x_max, const Parallel& par) {
  return count_table(field, x_max, 1, par);
}

WeilSweep box_sweep(const CMField& field, std::int64_t n_max) {
  WeilSweep sweep;
  sweep.x_max = n_max;
  sweep.count.assign(static_cast<std::size_t>(n_max) + 1, 0);
  sweep.reduced.assign(static_cast<std::size_t>(n_max) + 1, 0);
  sweep.sign_classes.assign(static_cast<std::size_t>(n_max) + 1, 0);

  const int n = field.deg;
  // (e_i^T x)^2 <= (x^T G x) (G^{-1})_ii; bound via L^{-1} from the LDL data.
  std::vector<std::vector<Rat>> linv(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) {
    linv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int j = 0; j < i; ++j) {
      Rat acc(0);
      for (int k = j; k < i; ++k)
        acc += field.ldl_lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * linv[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      linv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -acc;
    }
  }
  std::vector<std::int64_t> bound(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    Rat diag(0);  // (G^{-1})_ii = sum_k (L^{-1})_ki^2 / d_k
    for (int k = i; k < n; ++k)
      diag += linv[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] * linv[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] /
              field.ldl_diag[static_cast<std::size_t>(k)];
    long double b = sqrtl(2.0L * field.g * static_cast<long double>(n_max) * static_cast<long double>(to_double(diag)));
    bound[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(b) + 1;
  }

  std::vector<std::int64_t> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = -bound[static_cast<std::size_t>(i)];
  while (true) {
    auto norm = weil_membership(field, x);
    if (norm && *norm <= n_max) {
      sweep.count[static_cast<std::size_t>(*norm)] += 1;
      if (is_reduced(x)) {
        sweep.reduced[static_cast<std::size_t>(*norm)] += 1;
        if (sign_canonical(x)) sweep.sign_classes[static_cast<std::size_t>(*norm)] += 1;
      }
    }
    int level = 0;
    while (level < n && x[static_cast<std::size_t>(level)] == bound[static_cast<std::size_t>(level)]) {
      x[static_cast<std::size_t>(level)] = -bound[static_cast<std::size_t>(level)];
      ++level;
    }
    if (level == n) break;
    x[static_cast<std::size_t>(level)] += 1;
  }
  return sweep;
}

}  // namespace weilzeta
