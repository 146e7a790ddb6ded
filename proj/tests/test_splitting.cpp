#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weilzeta/error.hpp"
#include "weilzeta/presets.hpp"
#include "weilzeta/splitting.hpp"

using namespace weilzeta;

TEST_CASE("gauss splitting shapes") {
  CMField gauss = load_field(builtin_preset("gauss"));

  PrimeSplitting s5 = splitting_type(gauss, 5);
  REQUIRE(s5.places.size() == 2);
  CHECK(s5.places[0].residue_degree == 1);
  CHECK(s5.places[0].ramification == 1);
  CHECK(s5.places[0].conj_partner == 1);
  CHECK(s5.places[1].conj_partner == 0);
  CHECK(!s5.ramified);

  PrimeSplitting s3 = splitting_type(gauss, 3);
  REQUIRE(s3.places.size() == 1);
  CHECK(s3.places[0].residue_degree == 2);
  CHECK(s3.places[0].ramification == 1);
  CHECK(s3.places[0].conj_partner == 0);

  PrimeSplitting s2 = splitting_type(gauss, 2);
  REQUIRE(s2.places.size() == 1);
  CHECK(s2.places[0].residue_degree == 1);
  CHECK(s2.places[0].ramification == 2);
  CHECK(s2.places[0].conj_partner == 0);
  CHECK(s2.ramified);
}

TEST_CASE("zeta5 classification") {
  CMField zeta5 = load_field(builtin_preset("zeta5"));

  PrimeClass c11 = classify_prime(zeta5, 11);
  CHECK(c11.kind == PrimeClassKind::NoneFixed);
  CHECK(c11.r == 2);

  PrimeClass c2 = classify_prime(zeta5, 2);
  CHECK(c2.kind == PrimeClassKind::SomeFixed);
  CHECK(c2.r == 0);

  PrimeClass c19 = classify_prime(zeta5, 19);
  CHECK(c19.kind == PrimeClassKind::SomeFixed);
  CHECK(c19.r == 0);
  PrimeSplitting s19 = splitting_type(zeta5, 19);
  CHECK(s19.places.size() == 2);
  CHECK(s19.places[0].residue_degree == 2);

  // classification depends only on p mod 5
  for (auto p : primes_up_to(10'000)) {
    if (p == 5) continue;
    PrimeClass cls = classify_prime(zeta5, p);
    if (p % 5 == 1) {
      CHECK(cls.kind == PrimeClassKind::NoneFixed);
      CHECK(cls.r == 2);
    } else {
      CHECK(cls.kind == PrimeClassKind::SomeFixed);
      CHECK(cls.r == 0);
    }
  }
}

TEST_CASE("gauss classical splitting law") {
  CMField gauss = load_field(builtin_preset("gauss"));
  for (auto p : primes_up_to(10'000)) {
    if (p == 2) continue;
    PrimeClass cls = classify_prime(gauss, p);
    if (p % 4 == 1) {
      CHECK(cls.kind == PrimeClassKind::NoneFixed);
      CHECK(cls.r == 1);
    } else {
      CHECK(cls.kind == PrimeClassKind::SomeFixed);
      CHECK(cls.r == 0);
    }
  }
}

TEST_CASE("degree sums and partner involution across presets") {
  for (const auto& name : preset_names()) {
    CMField field = load_field(builtin_preset(name));
    for (auto p : primes_up_to(3'000)) {
      if (field.is_uncertified(p)) continue;
      PrimeSplitting split = splitting_type(field, p);
      int total = 0;
      for (std::size_t i = 0; i < split.places.size(); ++i) {
        const Place& place = split.places[i];
        total += place.residue_degree * place.ramification;
        const Place& partner = split.places[static_cast<std::size_t>(place.conj_partner)];
        CHECK(partner.conj_partner == static_cast<int>(i));
        CHECK(partner.residue_degree == place.residue_degree);
        CHECK(partner.ramification == place.ramification);
      }
      CHECK(total == field.deg);
    }
  }
}

TEST_CASE("bad primes are rejected without certification") {
  FieldSpec blind = builtin_preset("gauss");
  blind.field_disc.reset();
  CMField field = load_field(blind);
  CHECK_THROWS_WITH_AS(splitting_type(field, 2), doctest::Contains("BadPrime"), Error);
  CHECK(classify_prime(field, 2).kind == PrimeClassKind::Bad);

  // certified version handles its ramified prime
  CMField gauss = load_field(builtin_preset("gauss"));
  CHECK(classify_prime(gauss, 2).kind != PrimeClassKind::Bad);
}

TEST_CASE("denominator collision in the conjugation polynomial") {
  CMField gauss = load_field(builtin_preset("gauss"));
  gauss.spec.conj_theta = {Rat(0), Rat(-1, 3)};
  CHECK_THROWS_WITH_AS(splitting_type(gauss, 3), doctest::Contains("DenominatorCollision"), Error);
}
