#include "weilzeta/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

std::string rat_str(const Rat& q) { return rat_to_string(q); }

int round_nearest(const Rat& q) {
  Rat shifted = q + Rat(1, 2);
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  return static_cast<int>(fl.get_si());
}

// Good unramified primes <= bound with their theta values, ascending.
std::vector<std::pair<std::int64_t, int>> theta_sweep(const CMField& field, std::int64_t bound,
                                                      std::uint64_t seed, const Parallel& par) {
  auto primes = primes_up_to(bound);
  std::vector<int> theta(primes.size(), -1);  // -1 marks skipped primes
  Parallel runner = par;
  if (runner.threads < 1) runner.threads = 1;
  runner.for_chunks(static_cast<std::int64_t>(primes.size()), [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      std::int64_t p = primes[static_cast<std::size_t>(i)];
      if (field.is_uncertified(p)) continue;
      PrimeClass cls = classify_prime(field, p, seed);
      if (cls.ramified) continue;
      theta[static_cast<std::size_t>(i)] = cls.kind == PrimeClassKind::NoneFixed ? (1 << cls.r) : 0;
    }
  });
  std::vector<std::pair<std::int64_t, int>> out;
  out.reserve(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (theta[i] >= 0) out.emplace_back(primes[i], theta[i]);
  return out;
}

// Union of bad and ramified primes of the field plus extra primes, sorted.
std::vector<std::int64_t> restriction_set(const CMField& field, std::vector<std::int64_t> extra) {
  std::vector<std::int64_t> s = field.bad_primes;
  s.insert(s.end(), field.ramified_primes.begin(), field.ramified_primes.end());
  s.insert(s.end(), extra.begin(), extra.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<std::int64_t> prime_divisors_of(Int v) {
  std::vector<std::int64_t> out;
  v = abs(v);
  for (std::int64_t p = 2; Int(static_cast<long>(p)) * p <= v; p = (p == 2 ? 3 : p + 2)) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) {
      out.push_back(p);
      while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p)))
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    }
  }
  if (v > 1 && v.fits_slong_p()) out.push_back(v.get_si());
  return out;
}

}  // namespace

int theta_frob(const CMField& field, std::int64_t p, std::uint64_t seed) {
  if (field.is_uncertified(p)) fail(ErrorCode::BadPrime, std::to_string(p));
  PrimeClass cls = classify_prime(field, p, seed);
  if (cls.ramified) fail(ErrorCode::BadPrime, std::to_string(p) + " is ramified");
  return cls.kind == PrimeClassKind::NoneFixed ? (1 << cls.r) : 0;
}

RhoEstimate rho_estimate(const CMField& field, std::int64_t prime_bound, std::uint64_t seed,
                         const Parallel& par) {
  auto sweep = theta_sweep(field, prime_bound, seed, par);
  RhoEstimate est;
  est.prime_bound = prime_bound;
  est.sample_size = static_cast<std::int64_t>(sweep.size());
  if (sweep.empty()) return est;
  long total = 0;
  for (auto& [p, t] : sweep) total += t;
  est.mean = Rat(Int(total), Int(static_cast<long>(sweep.size())));
  est.rounded = round_nearest(est.mean);
  // Convergence diagnostic over the trailing 20% of the running means.
  std::size_t start = sweep.size() - std::max<std::size_t>(1, sweep.size() / 5);
  long running = 0;
  Rat max_dev(0);
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    running += sweep[i].second;
    if (i + 1 > start) {
      Rat dev = abs(Rat(Int(running), Int(static_cast<long>(i + 1))) - Rat(est.rounded));
      if (dev > max_dev) max_dev = dev;
    }
  }
  est.max_dev_window = max_dev;
  return est;
}

VerificationReport verify_prime_coefficient(const CMField& field, std::int64_t prime_bound,
                                            std::uint64_t seed, const Parallel& par) {
  VerificationReport report;
  report.name = "prime-coeff";
  report.checked_range = "good unramified p <= " + std::to_string(prime_bound);
  auto primes = primes_up_to(prime_bound);
  std::mutex mu;
  Parallel runner = par;
  runner.for_chunks(static_cast<std::int64_t>(primes.size()), [&](std::int64_t lo, std::int64_t hi) {
    std::vector<VerificationFailure> local;
    for (std::int64_t i = lo; i < hi; ++i) {
      std::int64_t p = primes[static_cast<std::size_t>(i)];
      if (field.is_uncertified(p) || field.is_ramified(p)) continue;
      int theta = theta_frob(field, p, seed);
      Int bp = euler_expand(euler_factor_Z(field, p, seed), 2)[1];
      if (bp != theta) local.push_back({p, std::to_string(theta), bp.get_str()});
    }
    if (!local.empty()) {
      std::lock_guard<std::mutex> lock(mu);
      report.failures.insert(report.failures.end(), local.begin(), local.end());
    }
  });
  std::sort(report.failures.begin(), report.failures.end(),
            [](const VerificationFailure& a, const VerificationFailure& b) { return a.index < b.index; });
  report.passed = report.failures.empty();
  return report;
}

VerificationReport verify_weil_ideal_bridge(const CMField& field, std::int64_t N, std::uint64_t seed,
                                            const Parallel& par) {
  if (!field.spec.flags.trivial_cw)
    fail(ErrorCode::NotCertifiedTrivialClassGroup, field.spec.name);
  VerificationReport report;
  report.name = "bridge";
  report.checked_range = "1 <= n <= " + std::to_string(N);
  WeilSweep sweep = sweep_weil(field, N, par);
  DirichletCoeffs b = z_coeffs(field, N, seed);
  for (std::int64_t n = 1; n <= N; ++n) {
    Rat expected = Rat(static_cast<long>(field.w_k)) * b.at(n);
    Rat got(static_cast<long>(sweep.count[static_cast<std::size_t>(n)]));
    if (expected != got) report.failures.push_back({n, rat_str(expected), rat_str(got)});
  }
  report.passed = report.failures.empty();
  return report;
}

VerificationReport verify_g2_identity(const CMField& field, const G2Data& data, std::int64_t N,
                                      std::uint64_t seed, const Parallel& par) {
  if (field.g != 2) fail(ErrorCode::CaseMismatch, "identity needs a quartic field");

  // The shapes differ in the number of Galois orbits on the boundary pieces
  // (one for the cyclic shapes, two for Klein); the prime-averaged Frobenius
  // trace must agree with the supplied case.
  {
    auto sweep = theta_sweep(field, 2000, seed, par);
    long total = 0;
    for (auto& [p, t] : sweep) total += t;
    double mean = sweep.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(sweep.size());
    double expected = data.galois_case == G2Case::Klein ? 2.0 : 1.0;
    if (std::abs(mean - expected) > 0.45)
      fail(ErrorCode::CaseMismatch, "orbit average " + std::to_string(mean) +
                                        " does not match case " + g2_case_name(data.galois_case));
  }

  std::vector<std::int64_t> extra;
  DirichletCoeffs rhs = DirichletCoeffs::ones(N);
  if (data.galois_case == G2Case::Klein) {
    if (data.discs.size() != 2) fail(ErrorCode::CaseMismatch, "Klein case needs two discriminants");
    // zeta_{M1} zeta_{M2} / zeta(2s) with zeta_M = zeta * L(eps_M).
    DirichletCoeffs z1 = series_convolve(DirichletCoeffs::ones(N), quadratic_L_coeffs(data.discs[0], N));
    DirichletCoeffs z2 = series_convolve(DirichletCoeffs::ones(N), quadratic_L_coeffs(data.discs[1], N));
    rhs = series_convolve(z1, z2);
    rhs = series_convolve(rhs, series_invert(series_dilate(DirichletCoeffs::ones(N), 2)));
    for (const auto& d : data.discs)
      for (auto p : prime_divisors_of(d)) extra.push_back(p);
  } else {
    // zeta_{reflex} / L(eps, 2s) where eps is the character of the quadratic
    // subfield of the reflex.
    const CMField* reflex = &field;
    CMField loaded;
    if (data.reflex) {
      loaded = load_field(*data.reflex);
      reflex = &loaded;
    }
    DirichletCoeffs zhat = dedekind_coeffs(reflex->spec.minpoly, reflex->uncertified_primes, N, seed);
    DirichletCoeffs eps2 = series_dilate(quadratic_L_coeffs(data.quad_disc, N), 2);
    rhs = series_convolve(zhat, series_invert(eps2));
    for (auto p : reflex->bad_primes) extra.push_back(p);
    for (auto p : reflex->ramified_primes) extra.push_back(p);
    for (auto p : prime_divisors_of(data.quad_disc)) extra.push_back(p);
  }

  auto s = restriction_set(field, extra);
  DirichletCoeffs lhs = series_restrict_coprime(z_coeffs(field, N, seed), s);
  rhs = series_restrict_coprime(rhs, s);

  VerificationReport report;
  report.name = "g2-" + std::string(g2_case_name(data.galois_case));
  report.checked_range = "n <= " + std::to_string(N) + " coprime to bad primes";
  for (std::int64_t n = 1; n <= N; ++n)
    if (lhs.at(n) != rhs.at(n))
      report.failures.push_back({n, rat_str(rhs.at(n)), rat_str(lhs.at(n))});
  report.passed = report.failures.empty();
  return report;
}

VerificationReport verify_height_zeta(const CMField& field, std::int64_t N, std::uint64_t seed,
                                      const Parallel& par) {
  VerificationReport report;
  report.name = "height-zeta";
  report.checked_range = "n <= " + std::to_string(N) + " coprime to bad/ramified primes";
  WeilSweep sweep = sweep_weil(field, N, par);
  DirichletCoeffs series =
      series_convolve(z_coeffs(field, N, seed), series_invert(series_dilate(DirichletCoeffs::ones(N), 2)));
  Rat half_w = Rat(Int(static_cast<long>(field.w_k)), Int(2));
  for (std::int64_t n = 1; n <= N; ++n) {
    if (field.divides_bad_or_ramified(n)) continue;
    Rat expected = half_w * series.at(n);
    Rat got(static_cast<long>(sweep.sign_classes[static_cast<std::size_t>(n)]));
    if (expected != got) report.failures.push_back({n, rat_str(expected), rat_str(got)});
  }
  report.passed = report.failures.empty();
  return report;
}

FitResult fit_asymptotic(const CountTable& table, int rho) {
  if (rho < 1) fail(ErrorCode::InsufficientRange, "rho must be >= 1");
  if (table.grid.size() < 10) fail(ErrorCode::InsufficientRange, "need at least 10 grid points");
  double x_max = static_cast<double>(table.grid.back());
  if (static_cast<double>(table.grid.front()) * 100.0 > x_max)
    fail(ErrorCode::InsufficientRange, "grid must span two decades");

  auto ratio = [rho](double count, double x) {
    return count / (x * std::pow(std::log(x), rho - 1));
  };
  FitResult fit;
  fit.c_estimate = ratio(static_cast<double>(table.counts.back()), x_max);
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < table.grid.size(); ++i) {
    if (static_cast<double>(table.grid[i]) * 10.0 < x_max) continue;
    double r = ratio(static_cast<double>(table.counts[i]), static_cast<double>(table.grid[i]));
    if (first) {
      lo = hi = r;
      first = false;
    } else {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  fit.stability = hi > 0.0 ? (hi - lo) / hi : 0.0;
  return fit;
}

}  // namespace weilzeta
