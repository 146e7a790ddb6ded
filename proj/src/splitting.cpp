#include "weilzeta/splitting.hpp"

#include <algorithm>

#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

std::int64_t invmod64(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, base = a % p, e = p - 2;
  if (base < 0) base += p;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * base % p);
    base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % p);
    e >>= 1;
  }
  return r;
}

ModPoly reduce_rat_poly(const std::vector<Rat>& coeffs, std::int64_t p) {
  std::vector<std::int64_t> out;
  out.reserve(coeffs.size());
  for (const auto& q : coeffs) {
    Int den = q.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
      fail(ErrorCode::DenominatorCollision, "conj_theta denominator divisible by " + std::to_string(p));
    std::int64_t num = static_cast<std::int64_t>(mpz_fdiv_ui(q.get_num().get_mpz_t(), static_cast<unsigned long>(p)));
    std::int64_t d = static_cast<std::int64_t>(mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p)));
    out.push_back(static_cast<std::int64_t>(static_cast<__int128>(num) * invmod64(d, p) % p));
  }
  return ModPoly(p, std::move(out));
}

// g(h(x)) mod p.
ModPoly compose(const ModPoly& g, const ModPoly& h) {
  ModPoly result = ModPoly::zero(g.modulus());
  for (int i = g.degree(); i >= 0; --i) {
    result = result * h + ModPoly::constant(g.modulus(), g.coeff(i));
  }
  return result;
}

}  // namespace

PrimeSplitting splitting_type(const CMField& field, std::int64_t p, std::uint64_t seed) {
  if (field.is_uncertified(p))
    fail(ErrorCode::BadPrime, std::to_string(p) + " may divide the index; factorization unreliable");

  PrimeSplitting split;
  split.p = p;

  std::vector<std::int64_t> mp;
  mp.reserve(field.spec.minpoly.size());
  for (const auto& c : field.spec.minpoly)
    mp.push_back(static_cast<std::int64_t>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p))));
  ModPoly f(p, std::move(mp));

  auto factors = factor_mod_p(f, Rng::derived(seed, static_cast<std::uint64_t>(p)));
  for (auto& [factor, mult] : factors) {
    Place place;
    place.residue_degree = factor.degree();
    place.ramification = mult;
    place.factor = factor;
    split.places.push_back(std::move(place));
    if (mult > 1) split.ramified = true;
  }

  int degree_sum = 0;
  for (const auto& place : split.places) degree_sum += place.residue_degree * place.ramification;
  if (degree_sum != field.deg)
    fail(ErrorCode::BadPrime, "degree sum mismatch at p=" + std::to_string(p));

  // Partner of (p, g_i(theta)) is the unique factor g_j with
  // g_i(conj_theta(x)) = 0 mod (p, g_j(x)).
  ModPoly cbar = reduce_rat_poly(field.spec.conj_theta, p);
  for (std::size_t i = 0; i < split.places.size(); ++i) {
    ModPoly image = compose(split.places[i].factor, cbar);
    int partner = -1;
    for (std::size_t j = 0; j < split.places.size(); ++j) {
      if (ModPoly::divmod(image, split.places[j].factor).second.is_zero()) {
        partner = static_cast<int>(j);
        break;
      }
    }
    if (partner < 0) fail(ErrorCode::BadPrime, "conjugation pairing failed at p=" + std::to_string(p));
    split.places[i].conj_partner = partner;
  }
  for (std::size_t i = 0; i < split.places.size(); ++i) {
    const Place& place = split.places[i];
    const Place& partner = split.places[static_cast<std::size_t>(place.conj_partner)];
    if (partner.conj_partner != static_cast<int>(i) || partner.residue_degree != place.residue_degree ||
        partner.ramification != place.ramification)
      fail(ErrorCode::BadPrime, "conjugation pairing is not an involution at p=" + std::to_string(p));
  }
  return split;
}

PrimeClass classify_prime(const CMField& field, std::int64_t p, std::uint64_t seed) {
  PrimeClass cls;
  if (field.is_uncertified(p)) {
    cls.kind = PrimeClassKind::Bad;
    return cls;
  }
  PrimeSplitting split = splitting_type(field, p, seed);
  cls.ramified = split.ramified;
  int fixed = 0;
  for (std::size_t i = 0; i < split.places.size(); ++i)
    if (split.places[i].conj_partner == static_cast<int>(i)) ++fixed;
  cls.r = static_cast<int>(split.places.size() - static_cast<std::size_t>(fixed)) / 2;
  cls.kind = fixed == 0 ? PrimeClassKind::NoneFixed : PrimeClassKind::SomeFixed;
  return cls;
}

}  // namespace weilzeta
