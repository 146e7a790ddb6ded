#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "weilzeta/cmfield.hpp"
#include "weilzeta/error.hpp"
#include "weilzeta/fan.hpp"
#include "weilzeta/presets.hpp"

using namespace weilzeta;

namespace {

Complex omega_value(const CMField& field, int i, const Complex& root) {
  Complex v(0);
  const auto& row = field.spec.basis[static_cast<std::size_t>(i)];
  for (int j = field.deg - 1; j >= 0; --j)
    v = v * root + Complex(static_cast<long double>(to_double(row[static_cast<std::size_t>(j)])));
  return v;
}

}  // namespace

TEST_CASE("presets load with the right torsion counts") {
  struct Expect {
    const char* name;
    std::int64_t w;
  };
  for (auto [name, w] : {Expect{"gauss", 4}, Expect{"eisenstein", 6}, Expect{"quad2", 2},
                         Expect{"quad7", 2}, Expect{"zeta5", 10}, Expect{"zeta8", 8},
                         Expect{"zeta12", 12}, Expect{"d4", 2}}) {
    CMField field = load_field(builtin_preset(name));
    CHECK(field.w_k == w);
    // conjugation is an exact involution
    for (int i = 0; i < field.deg; ++i)
      for (int j = 0; j < field.deg; ++j) {
        Int acc = 0;
        for (int k = 0; k < field.deg; ++k)
          acc += field.conj_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                 field.conj_matrix[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        CHECK(acc == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("validation errors") {
  // identity conjugation is not complex conjugation on an imaginary field
  FieldSpec bad = builtin_preset("gauss");
  bad.conj_theta = {Rat(0), Rat(1)};
  CHECK_THROWS_WITH_AS(load_field(bad), doctest::Contains("ConjugationNotComplexConjugation"), Error);

  // a real quadratic field is rejected
  FieldSpec real = builtin_preset("gauss");
  real.minpoly = {Int(-2), Int(0), Int(1)};  // x^2 - 2
  CHECK_THROWS_WITH_AS(load_field(real), doctest::Contains("NotTotallyImaginary"), Error);

  FieldSpec nonsq = builtin_preset("gauss");
  nonsq.minpoly = {Int(0), Int(0), Int(1)};  // x^2
  CHECK_THROWS_WITH_AS(load_field(nonsq), doctest::Contains("NonSquarefreeMinpoly"), Error);

  FieldSpec singular = builtin_preset("gauss");
  singular.basis = {{Rat(1), Rat(0)}, {Rat(2), Rat(0)}};
  CHECK_THROWS_WITH_AS(load_field(singular), doctest::Contains("BasisNotUnimodularOverQ"), Error);

  FieldSpec not_one = builtin_preset("gauss");
  not_one.basis = {{Rat(2), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK_THROWS_AS(load_field(not_one), Error);

  // omega_2 must lie in the real subfield for g = 2
  FieldSpec moved = builtin_preset("zeta5");
  moved.basis[1] = {Rat(0), Rat(0), Rat(0), Rat(1)};  // theta^3, not real
  CHECK_THROWS_WITH_AS(load_field(moved), doctest::Contains("RealSubfieldViolation"), Error);

  // a conjugation table that is an involution but not complex conjugation
  // leaves a nonzero imaginary coordinate in alpha * c(alpha)
  CMField hacked = load_field(builtin_preset("gauss"));
  hacked.conj_matrix = {{Int(1), Int(0)}, {Int(0), Int(1)}};
  CHECK_THROWS_WITH_AS(compute_quadrics(hacked), doctest::Contains("NonRealRelativeNorm"), Error);
}

TEST_CASE("norm quadrics") {
  CMField gauss = load_field(builtin_preset("gauss"));
  // Q_1 = x1^2 + x2^2
  CHECK(gauss.quadrics[0].coeff(0, 0) == 1);
  CHECK(gauss.quadrics[0].coeff(1, 1) == 1);
  CHECK(gauss.quadrics[0].coeff(0, 1) == 0);

  // alpha = omega_1: Q_1 = 1, higher forms vanish
  CMField zeta5 = load_field(builtin_preset("zeta5"));
  std::vector<std::int64_t> e1{1, 0, 0, 0};
  CHECK(zeta5.quadrics[0].eval(e1) == 1);
  CHECK(zeta5.quadrics[1].eval(e1) == 0);

  // alpha = theta (a root of unity): norm 1
  std::vector<std::int64_t> theta{0, 0, 1, 0};
  CHECK(zeta5.quadrics[0].eval(theta) == 1);
  CHECK(zeta5.quadrics[1].eval(theta) == 0);
}

TEST_CASE("weil membership") {
  CMField gauss = load_field(builtin_preset("gauss"));
  std::vector<std::int64_t> v{2, 1};
  auto n = weil_membership(gauss, v);
  REQUIRE(n.has_value());
  CHECK(*n == 5);

  std::vector<std::int64_t> zero{0, 0};
  CHECK(!weil_membership(gauss, zero).has_value());

  // theta + theta^2 has irrational relative norm
  CMField zeta5 = load_field(builtin_preset("zeta5"));
  std::vector<std::int64_t> generic{0, 0, 1, 1};
  CHECK(!weil_membership(zeta5, generic).has_value());
}

TEST_CASE("trace gram form") {
  CMField gauss = load_field(builtin_preset("gauss"));
  auto g = trace_gram(gauss);
  CHECK(g[0][0] == 2);
  CHECK(g[1][1] == 2);
  CHECK(g[0][1] == 0);
  CHECK(g[1][0] == 0);

  // x^T G x = 2 (g Q_1 + sum_{i>=2} Tr_{K0/Q}(omega_i) Q_i) as forms, and
  // G is symmetric, for every preset.
  for (const auto& name : preset_names()) {
    CMField field = load_field(builtin_preset(name));
    auto gram = trace_gram(field);
    for (int i = 0; i < field.deg; ++i)
      for (int j = 0; j < field.deg; ++j)
        CHECK(gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
              gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    std::vector<Rat> half_traces(static_cast<std::size_t>(field.g), Rat(0));
    for (int i = 0; i < field.g; ++i) {
      std::vector<Rat> coords(static_cast<std::size_t>(field.deg), Rat(0));
      coords[static_cast<std::size_t>(i)] = 1;
      half_traces[static_cast<std::size_t>(i)] = field.trace_omega(coords) / 2;  // Tr_{K0/Q}(omega_i)
    }
    for (int i = 0; i < field.deg; ++i)
      for (int j = i; j < field.deg; ++j) {
        // compare coefficient of x_i x_j on both sides
        Rat lhs = i == j ? gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                         : gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * 2;
        Rat rhs(0);
        for (int k = 0; k < field.g; ++k) {
          Rat weight = k == 0 ? Rat(field.g) : half_traces[static_cast<std::size_t>(k)];
          rhs += weight * Rat(static_cast<long>(field.quadrics[static_cast<std::size_t>(k)].coeff(i, j)));
        }
        CHECK(lhs == rhs * 2);
      }
  }
}

TEST_CASE("multiplication table matches the embeddings numerically") {
  for (const auto& name : preset_names()) {
    CMField field = load_field(builtin_preset(name));
    for (const auto& root : field.embeddings) {
      for (int i = 0; i < field.deg; ++i)
        for (int j = 0; j < field.deg; ++j) {
          Complex direct = omega_value(field, i, root) * omega_value(field, j, root);
          Complex via_table(0);
          for (int k = 0; k < field.deg; ++k) {
            Rat c = field.mult_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                    [static_cast<std::size_t>(k)];
            if (c != 0) via_table += Complex(static_cast<long double>(to_double(c))) * omega_value(field, k, root);
          }
          CHECK(std::abs(direct - via_table) < 1e-9L);
        }
    }
  }
}

TEST_CASE("bad and ramified primes") {
  CMField gauss = load_field(builtin_preset("gauss"));
  CHECK(gauss.bad_primes == std::vector<std::int64_t>{2});
  CHECK(gauss.ramified_primes == std::vector<std::int64_t>{2});
  CHECK(gauss.uncertified_primes.empty());  // index 1 certified by field_disc

  CMField zeta5 = load_field(builtin_preset("zeta5"));
  CHECK(zeta5.bad_primes == std::vector<std::int64_t>{5});
  CHECK(zeta5.uncertified_primes.empty());

  FieldSpec blind = builtin_preset("gauss");
  blind.field_disc.reset();
  CMField field = load_field(blind);
  CHECK(field.uncertified_primes == std::vector<std::int64_t>{2});
}

TEST_CASE("fan construction") {
  FanData f1 = build_fan(1);
  CHECK(f1.rays.size() == 2);
  CHECK(f1.max_cones.size() == 2);

  FanData f2 = build_fan(2);
  CHECK(f2.rays.size() == 4);
  CHECK(f2.max_cones.size() == 4);

  FanData f3 = build_fan(3);
  CHECK(f3.rays.size() == 8);
  CHECK(f3.max_cones.size() == 24);

  // counts for the complete fan; build_fan itself verifies unimodularity and
  // sample coverage
  for (int g = 1; g <= 6; ++g) {
    FanData fan = build_fan(g, g <= 3 ? 10'000 : 2'000);
    CHECK(Int(static_cast<long>(fan.rays.size())) == (Int(1) << g));
    CHECK(Int(static_cast<long>(fan.max_cones.size())) == expected_max_cones(g));
  }

  // a direction that single-apex cone families cannot reach at g = 4
  FanData f4 = build_fan(4, 100);
  std::vector<Rat> spike{Rat(1), Rat(1, 10), Rat(1, 10), Rat(1, 10)};
  CHECK(fan_covers(f4, spike));

  CHECK_THROWS_WITH_AS(build_fan(9), doctest::Contains("GTooLarge"), Error);
  CHECK_THROWS_AS(build_fan(0), Error);
}
