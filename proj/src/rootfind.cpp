#include "weilzeta/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weilzeta {

namespace {

Complex eval_poly(const std::vector<Complex>& c, const Complex& x) {
  Complex r(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

}  // namespace

std::vector<Complex> complex_roots(const RatPoly& f) {
  int n = f.degree();
  if (n < 1) return {};
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = Complex(to_double(f.coeff(i) / f.leading()), 0.0L);
  std::vector<Complex> d(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) d[static_cast<std::size_t>(i - 1)] = c[static_cast<std::size_t>(i)] * static_cast<long double>(i);

  // Cauchy bound for |roots|.
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(i)]));
  bound += 1.0L;

  // Fixed spiral start: deterministic and never symmetric about the real
  // axis, which would stall Aberth on real-coefficient input.
  std::vector<Complex> z(static_cast<std::size_t>(n));
  const long double kPi = 3.14159265358979323846264338327950288L;
  for (int i = 0; i < n; ++i) {
    long double angle = (2.0L * kPi * i) / n + 0.7L;
    long double radius = bound * (0.5L + 0.3L * i / std::max(1, n - 1));
    z[static_cast<std::size_t>(i)] = Complex(radius * std::cos(angle), radius * std::sin(angle));
  }

  for (int iter = 0; iter < 600; ++iter) {
    long double worst = 0;
    for (int i = 0; i < n; ++i) {
      Complex zi = z[static_cast<std::size_t>(i)];
      Complex p = eval_poly(c, zi);
      Complex dp = eval_poly(d, zi);
      Complex newton = (dp == Complex(0)) ? Complex(1e-20L, 1e-20L) : p / dp;
      Complex sum(0);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex diff = zi - z[static_cast<std::size_t>(j)];
        if (std::abs(diff) < 1e-30L) diff = Complex(1e-30L, 1e-30L);
        sum += Complex(1.0L) / diff;
      }
      Complex delta = newton / (Complex(1.0L) - newton * sum);
      z[static_cast<std::size_t>(i)] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    if (worst < 1e-17L * bound) break;
  }

  std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

ConjugatePairing pair_conjugates(const std::vector<Complex>& roots, long double tol) {
  ConjugatePairing out;
  std::vector<bool> used(roots.size(), false);
  for (int i = 0; i < static_cast<int>(roots.size()); ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    if (std::abs(roots[static_cast<std::size_t>(i)].imag()) <= tol) {
      used[static_cast<std::size_t>(i)] = true;
      out.real_roots.push_back(i);
      continue;
    }
    int best = -1;
    long double best_dist = 0;
    for (int j = 0; j < static_cast<int>(roots.size()); ++j) {
      if (j == i || used[static_cast<std::size_t>(j)]) continue;
      long double dist = std::abs(roots[static_cast<std::size_t>(j)] - std::conj(roots[static_cast<std::size_t>(i)]));
      if (best < 0 || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best < 0) throw std::runtime_error("unpaired complex root");
    used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(best)] = true;
    if (roots[static_cast<std::size_t>(i)].imag() > 0) out.pairs.emplace_back(i, best);
    else out.pairs.emplace_back(best, i);
  }
  return out;
}

}  // namespace weilzeta
