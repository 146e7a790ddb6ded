#include "weilzeta/modpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "weilzeta/error.hpp"

namespace weilzeta {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod_int(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) { return powmod_int(a, p - 2, p); }

void check_same_modulus(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus())
    fail(ErrorCode::ModulusMismatch,
         std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
}

}  // namespace

ModPoly::ModPoly(std::int64_t p, std::vector<std::int64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    c %= p_;
    if (c < 0) c += p_;
  }
  trim();
}

void ModPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t ModPoly::eval(std::int64_t x) const {
  x %= p_;
  if (x < 0) x += p_;
  std::int64_t r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = (mulmod(r, x, p_) + *it) % p_;
  return r;
}

ModPoly ModPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  std::int64_t inv = invmod(leading(), p_);
  std::vector<std::int64_t> c(coeffs_);
  for (auto& v : c) v = mulmod(v, inv, p_);
  return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::derivative() const {
  if (coeffs_.size() <= 1) return zero(p_);
  std::vector<std::int64_t> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = mulmod(coeffs_[i], static_cast<std::int64_t>(i % p_), p_);
  return ModPoly(p_, std::move(c));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  check_same_modulus(a, b);
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % a.p_;
  return ModPoly(a.p_, std::move(c));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  check_same_modulus(a, b);
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = (a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)) % a.p_ + a.p_) % a.p_;
  return ModPoly(a.p_, std::move(c));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  check_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return ModPoly::zero(a.p_);
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = (c[i + j] + static_cast<__int128>(a.coeffs_[i]) * b.coeffs_[j]) % a.p_;
    }
  }
  return ModPoly(a.p_, std::move(c));
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& a, const ModPoly& b) {
  check_same_modulus(a, b);
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  std::int64_t p = a.p_;
  if (a.degree() < b.degree()) return {zero(p), a};
  std::vector<std::int64_t> rem(a.coeffs_);
  std::vector<std::int64_t> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  std::int64_t lead_inv = invmod(b.leading(), p);
  for (int i = a.degree(); i >= b.degree(); --i) {
    std::int64_t r = rem[static_cast<std::size_t>(i)];
    if (r == 0) continue;
    std::int64_t q = mulmod(r, lead_inv, p);
    quo[static_cast<std::size_t>(i - b.degree())] = q;
    for (int j = 0; j <= b.degree(); ++j) {
      auto& cell = rem[static_cast<std::size_t>(i - b.degree() + j)];
      cell = (cell - mulmod(q, b.coeff(j), p) % p + p) % p;
    }
  }
  return {ModPoly(p, std::move(quo)), ModPoly(p, std::move(rem))};
}

std::string ModPoly::str() const {
  if (is_zero()) return "0 mod " + std::to_string(p_);
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t c = coeff(i);
    if (c == 0) continue;
    if (!first) os << "+";
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  os << " mod " << p_;
  return os.str();
}

ModPoly poly_gcd_mod_p(const ModPoly& a, const ModPoly& b) {
  check_same_modulus(a, b);
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = ModPoly::divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

ModPoly poly_powmod(const ModPoly& a, const Int& e, const ModPoly& m) {
  ModPoly base = ModPoly::divmod(a, m).second;
  ModPoly result = ModPoly::constant(a.modulus(), 1);
  mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (mp_bitcnt_t i = bits; i-- > 0;) {
    result = ModPoly::divmod(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = ModPoly::divmod(result * base, m).second;
  }
  return result;
}

namespace {

// Squarefree decomposition of a monic polynomial: list of (g_i, i) with
// product g_i^i = input, each g_i squarefree.
std::vector<std::pair<ModPoly, int>> squarefree_parts(const ModPoly& f) {
  std::int64_t p = f.modulus();
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly deriv = f.derivative();
  if (deriv.is_zero()) {
    // f = v(x^p); over F_p the p-th root keeps every coefficient (a^p = a).
    std::vector<std::int64_t> vc(static_cast<std::size_t>(f.degree() / p) + 1, 0);
    for (int i = 0; i * p <= f.degree(); ++i) vc[static_cast<std::size_t>(i)] = f.coeff(static_cast<int>(i * p));
    for (auto& [g, m] : squarefree_parts(ModPoly(p, std::move(vc)))) out.emplace_back(g, m * static_cast<int>(p));
    return out;
  }
  ModPoly c = poly_gcd_mod_p(f, deriv);
  ModPoly w = ModPoly::divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    ModPoly y = poly_gcd_mod_p(w, c);
    ModPoly z = ModPoly::divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    w = y;
    c = ModPoly::divmod(c, y).first;
    ++i;
  }
  if (c.degree() > 0) {
    // Remaining c is exactly the part whose multiplicities are divisible by
    // p, with those multiplicities intact; the recursion lands in the
    // p-th-root branch and returns them unchanged.
    for (auto& [g, m] : squarefree_parts(c)) out.emplace_back(g, m);
  }
  return out;
}

// Distinct-degree split of a squarefree monic polynomial: (product, degree).
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f) {
  std::int64_t p = f.modulus();
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly g = f;
  ModPoly h = ModPoly::x(p);
  int d = 0;
  while (g.degree() >= 2 * (d + 1)) {
    ++d;
    h = poly_powmod(h, Int(p), g);
    ModPoly gd = poly_gcd_mod_p(h - ModPoly::x(p), g);
    if (gd.degree() > 0) {
      out.emplace_back(gd, d);
      g = ModPoly::divmod(g, gd).first;
      if (g.degree() > 0) h = ModPoly::divmod(h, g).second;
    }
  }
  if (g.degree() > 0) out.emplace_back(g, g.degree());
  return out;
}

// Equal-degree splitting of a monic squarefree product of irreducibles of
// degree d.  Odd p: Cantor-Zassenhaus random powers; p = 2: trace polynomials.
void equal_degree(const ModPoly& f, int d, Rng& rng, std::vector<ModPoly>& out) {
  std::int64_t p = f.modulus();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  Int exponent = 0;
  if (p > 2) {
    Int q = 1;
    for (int i = 0; i < d; ++i) q *= p;
    exponent = (q - 1) / 2;
  }
  while (true) {
    std::vector<std::int64_t> rc(static_cast<std::size_t>(f.degree()), 0);
    for (auto& c : rc) c = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p)));
    ModPoly a(p, std::move(rc));
    if (a.degree() < 1) continue;
    ModPoly g = poly_gcd_mod_p(a, f);
    if (g.degree() == 0 || g.degree() == f.degree()) {
      ModPoly b = ModPoly::zero(p);
      if (p == 2) {
        ModPoly t = ModPoly::divmod(a, f).second;
        ModPoly acc = t;
        b = t;
        for (int i = 1; i < d; ++i) {
          acc = ModPoly::divmod(acc * acc, f).second;
          b = b + acc;
        }
      } else {
        b = poly_powmod(a, exponent, f) - ModPoly::constant(p, 1);
      }
      g = poly_gcd_mod_p(b, f);
      if (g.degree() == 0 || g.degree() == f.degree()) continue;
    }
    equal_degree(g, d, rng, out);
    equal_degree(ModPoly::divmod(f, g).first, d, rng, out);
    return;
  }
}

bool factor_order(const ModFactor& a, const ModFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  if (a.factor.coeffs() != b.factor.coeffs()) return a.factor.coeffs() < b.factor.coeffs();
  return a.multiplicity < b.multiplicity;
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const ModPoly& f, Rng rng) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  std::vector<ModFactor> out;
  if (f.degree() == 0) return out;
  for (auto& [part, mult] : squarefree_parts(f.monic())) {
    for (auto& [prod, d] : distinct_degree(part)) {
      std::vector<ModPoly> irreducibles;
      equal_degree(prod, d, rng, irreducibles);
      for (auto& g : irreducibles) out.push_back({g, mult});
    }
  }
  std::sort(out.begin(), out.end(), factor_order);
  return out;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int twos = 0;
    while (n % 2 == 0) {
      n /= 2;
      ++twos;
    }
    std::int64_t a8 = a % 8;
    if (a8 < 0) a8 += 8;
    if (twos % 2 == 1 && (a8 == 3 || a8 == 5)) result = -result;
  }
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace weilzeta
