// Validated CM field with all precomputed exact tables: multiplication,
// conjugation, norm quadrics, trace Gram form, numerical embeddings, bad
// primes and the torsion-unit count.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "weilzeta/fieldspec.hpp"
#include "weilzeta/rootfind.hpp"
#include "weilzeta/types.hpp"

namespace weilzeta {

// Integer quadratic form sum_{i<=j} c_ij x_i x_j in n variables.
struct QuadForm {
  int n = 0;
  std::vector<std::int64_t> upper;  // packed upper triangle, row-major

  static std::size_t index(int n, int i, int j) {
    // requires i <= j
    return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i - 1) / 2 +
           static_cast<std::size_t>(j - i);
  }
  std::int64_t coeff(int i, int j) const { return upper[index(n, std::min(i, j), std::max(i, j))]; }

  std::int64_t eval(std::span<const std::int64_t> x) const {
    std::int64_t total = 0;
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j, ++k)
        if (upper[k] != 0) total += upper[k] * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
    return total;
  }
  Rat eval_rat(const std::vector<Rat>& x) const;
};

struct CMField {
  FieldSpec spec;
  int g = 0;
  int deg = 0;  // 2g

  // omega_i * omega_j in omega coordinates.
  std::vector<std::vector<std::vector<Rat>>> mult_table;
  // c(omega_i) = sum_j conj_matrix[i][j] omega_j; exact involution.
  std::vector<std::vector<Int>> conj_matrix;
  // alpha*conj(alpha) = sum_{i<g} quadrics[i](x) omega_{i+1} for alpha = sum x_i omega_i.
  std::vector<QuadForm> quadrics;
  // gram[i][j] = Tr_{K/Q}(omega_i * c(omega_j)); positive definite.
  std::vector<std::vector<Rat>> gram;
  // Tr_{K/Q}(theta^k) for k < 2g (Newton power sums, exact).
  std::vector<Rat> trace_powers;
  // Exact LDL^T factorization of gram (unit lower L, positive diagonal d).
  std::vector<std::vector<Rat>> ldl_lower;
  std::vector<Rat> ldl_diag;

  std::vector<Complex> embeddings;             // roots of minpoly, sorted
  std::vector<std::pair<int, int>> root_pairs; // conjugate pairing (im>0 first)

  Int minpoly_disc = 0;
  std::vector<std::int64_t> bad_primes;         // prime divisors of disc(minpoly)
  std::vector<std::int64_t> ramified_primes;    // divisors of field_disc (= bad if unknown)
  std::vector<std::int64_t> uncertified_primes; // Dedekind may fail (divide the index)

  std::int64_t w_k = 0;  // torsion-unit count = #{alpha : alpha*conj(alpha) = 1}

  bool is_bad(std::int64_t p) const;
  bool is_uncertified(std::int64_t p) const;
  bool is_ramified(std::int64_t p) const;
  // Primes at which height data is unavailable (bad or ramified).
  bool divides_bad_or_ramified(std::int64_t n) const;

  // Trace of an element given in omega coordinates.
  Rat trace_omega(const std::vector<Rat>& coords) const;
};

CMField load_field(const FieldSpec& spec);

// The g norm forms Q_1..Q_g (Q_1 = relative norm, Q_2..Q_g cut out the
// rational-norm locus).  Recomputed from the multiplication and conjugation
// tables; load_field performs the same extraction.
std::vector<QuadForm> compute_quadrics(const CMField& field);

// n = Q_1(coords) > 0 when Q_2 = ... = Q_g = 0; absent otherwise (and for 0).
std::optional<std::int64_t> weil_membership(const CMField& field, std::span<const std::int64_t> coords);

// gram matrix; satisfies x^T G x = 2 (g Q_1(x) + sum_{i>=2} Tr_{K0/Q}(omega_i) Q_i(x)).
std::vector<std::vector<Rat>> trace_gram(const CMField& field);

}  // namespace weilzeta
