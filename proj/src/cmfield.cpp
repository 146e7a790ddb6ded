#include "weilzeta/cmfield.hpp"

#include <algorithm>
#include <cmath>

#include "weilzeta/error.hpp"
#include "weilzeta/ratpoly.hpp"
#include "weilzeta/weilenum.hpp"

namespace weilzeta {

namespace {

constexpr long double kNumericTol = 1e-9L;

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix identity_matrix(int n) {
  RatMatrix m(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

// Gauss-Jordan inverse; empty result when singular.
RatMatrix invert(const RatMatrix& a) {
  int n = static_cast<int>(a.size());
  RatMatrix m = a;
  RatMatrix inv = identity_matrix(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return {};
    std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
    std::swap(inv[static_cast<std::size_t>(col)], inv[static_cast<std::size_t>(pivot)]);
    Rat lead = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= lead;
      inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= lead;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
    }
  }
  return inv;
}

// Power sums of the roots of a monic integer polynomial (Newton identities);
// p[k] = Tr(theta^k) for k = 0..count-1.
std::vector<Rat> power_sums(const std::vector<Int>& minpoly, int count) {
  int n = static_cast<int>(minpoly.size()) - 1;
  std::vector<Rat> e(static_cast<std::size_t>(n) + 1, Rat(0));  // elementary symmetric
  for (int i = 0; i <= n; ++i) {
    Rat v(minpoly[static_cast<std::size_t>(n - i)]);
    e[static_cast<std::size_t>(i)] = (i % 2 == 0) ? v : -v;
  }
  std::vector<Rat> p(static_cast<std::size_t>(count), Rat(0));
  if (count > 0) p[0] = n;
  for (int k = 1; k < count; ++k) {
    Rat sum(0);
    for (int i = 1; i < k && i <= n; ++i) {
      Rat term = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
      sum += (i % 2 == 1) ? term : -term;
    }
    if (k <= n) {
      Rat term = e[static_cast<std::size_t>(k)] * Rat(k);
      sum += (k % 2 == 1) ? term : -term;
    }
    p[static_cast<std::size_t>(k)] = sum;
  }
  return p;
}

std::vector<std::int64_t> prime_divisors(Int n) {
  n = abs(n);
  std::vector<std::int64_t> out;
  if (n <= 1) return out;
  for (std::int64_t d = 2; d <= 10'000'000; d = (d == 2 ? 3 : d + 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
      out.push_back(d);
      while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d)))
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d));
    }
    if (n == 1) break;
    Int dd(static_cast<long>(d));
    if (dd * dd > n) break;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
      fail(ErrorCode::BadFieldSpec, "cannot factor discriminant " + n.get_str());
    if (!n.fits_slong_p()) fail(ErrorCode::BadFieldSpec, "discriminant prime exceeds 64 bits");
    out.push_back(n.get_si());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Complex eval_power_coords(const std::vector<Rat>& coords, const Complex& root) {
  Complex r(0);
  for (auto it = coords.rbegin(); it != coords.rend(); ++it)
    r = r * root + Complex(static_cast<long double>(to_double(*it)));
  return r;
}

}  // namespace

Rat QuadForm::eval_rat(const std::vector<Rat>& x) const {
  Rat total(0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++k)
      if (upper[k] != 0)
        total += Rat(static_cast<long>(upper[k])) * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
  return total;
}

bool CMField::is_bad(std::int64_t p) const {
  return std::binary_search(bad_primes.begin(), bad_primes.end(), p);
}
bool CMField::is_uncertified(std::int64_t p) const {
  return std::binary_search(uncertified_primes.begin(), uncertified_primes.end(), p);
}
bool CMField::is_ramified(std::int64_t p) const {
  return std::binary_search(ramified_primes.begin(), ramified_primes.end(), p);
}
bool CMField::divides_bad_or_ramified(std::int64_t n) const {
  for (auto p : bad_primes)
    if (n % p == 0) return true;
  for (auto p : ramified_primes)
    if (n % p == 0) return true;
  return false;
}

Rat CMField::trace_omega(const std::vector<Rat>& coords) const {
  // Convert to power coordinates and pair with the cached power sums.
  Rat total(0);
  for (int j = 0; j < deg; ++j) {
    Rat pj(0);
    for (int i = 0; i < deg; ++i) pj += coords[static_cast<std::size_t>(i)] * spec.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    total += pj * trace_powers[static_cast<std::size_t>(j)];
  }
  return total;
}

namespace {

struct Tables {
  RatPoly minpoly;
  RatMatrix basis;      // omega rows in power coords
  RatMatrix basis_inv;  // power -> omega
  int deg = 0;

  std::vector<Rat> to_omega(const RatPoly& power_poly) const {
    std::vector<Rat> out(static_cast<std::size_t>(deg), Rat(0));
    for (int j = 0; j < deg; ++j) {
      Rat pj = power_poly.coeff(j);
      if (pj == 0) continue;
      for (int i = 0; i < deg; ++i)
        out[static_cast<std::size_t>(i)] += pj * basis_inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return out;
  }

  RatPoly omega_to_power(const std::vector<Rat>& coords) const {
    std::vector<Rat> p(static_cast<std::size_t>(deg), Rat(0));
    for (int i = 0; i < deg; ++i)
      for (int j = 0; j < deg; ++j)
        p[static_cast<std::size_t>(j)] += coords[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return RatPoly(std::move(p));
  }

  RatPoly reduce(const RatPoly& f) const { return RatPoly::divmod(f, minpoly).second; }
};

}  // namespace

CMField load_field(const FieldSpec& spec) {
  CMField field;
  field.spec = spec;
  field.g = spec.g;
  field.deg = 2 * spec.g;
  const int n = field.deg;

  if (spec.g < 1) fail(ErrorCode::BadFieldSpec, "g must be >= 1");
  if (static_cast<int>(spec.minpoly.size()) != n + 1)
    fail(ErrorCode::BadFieldSpec, "minpoly must have degree 2g");
  if (spec.minpoly.back() != 1) fail(ErrorCode::BadFieldSpec, "minpoly must be monic");
  if (static_cast<int>(spec.basis.size()) != n)
    fail(ErrorCode::BadFieldSpec, "basis must have 2g rows");
  for (const auto& row : spec.basis)
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::BadFieldSpec, "basis rows must have 2g entries");
  if (static_cast<int>(spec.conj_theta.size()) > n)
    fail(ErrorCode::BadFieldSpec, "conj_theta must have degree < 2g");
  for (int j = 0; j < n; ++j) {
    Rat expect = (j == 0) ? Rat(1) : Rat(0);
    if (spec.basis[0][static_cast<std::size_t>(j)] != expect)
      fail(ErrorCode::BadFieldSpec, "omega_1 must be the element 1");
  }

  Tables t;
  t.deg = n;
  t.minpoly = RatPoly::from_ints(spec.minpoly);
  if (!is_squarefree(t.minpoly)) fail(ErrorCode::NonSquarefreeMinpoly, spec.name);
  t.basis = spec.basis;
  t.basis_inv = invert(t.basis);
  if (t.basis_inv.empty()) fail(ErrorCode::BasisNotUnimodularOverQ, spec.name);

  // Powers of c(theta) modulo the minimal polynomial.
  std::vector<RatPoly> conj_powers(static_cast<std::size_t>(n));
  conj_powers[0] = RatPoly::constant(Rat(1));
  RatPoly cbar(spec.conj_theta);
  for (int k = 1; k < n; ++k) conj_powers[static_cast<std::size_t>(k)] = t.reduce(conj_powers[static_cast<std::size_t>(k - 1)] * cbar);

  // Conjugation on the omega basis.
  RatMatrix conj_rat(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    RatPoly image;
    for (int j = 0; j < n; ++j) {
      Rat coef = spec.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (coef != 0) image = image + conj_powers[static_cast<std::size_t>(j)] * coef;
    }
    conj_rat[static_cast<std::size_t>(i)] = t.to_omega(image);
  }
  // Involution check (on the exact rational matrix).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat acc(0);
      for (int k = 0; k < n; ++k)
        acc += conj_rat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * conj_rat[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      if (acc != (i == j ? Rat(1) : Rat(0))) fail(ErrorCode::ConjugationNotInvolution, spec.name);
    }
  field.conj_matrix.assign(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& v = conj_rat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!is_integer(v)) fail(ErrorCode::ConjugationNotIntegral, spec.name);
      field.conj_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.get_num();
    }
  // omega_1..omega_g span the real subfield: conjugation must fix them.
  for (int i = 0; i < spec.g; ++i)
    for (int j = 0; j < n; ++j) {
      Int expect = (i == j) ? 1 : 0;
      if (field.conj_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != expect)
        fail(ErrorCode::RealSubfieldViolation, spec.name + ": omega_" + std::to_string(i + 1));
    }

  // Numerical embeddings.
  field.embeddings = complex_roots(t.minpoly);
  if (static_cast<int>(field.embeddings.size()) != n) fail(ErrorCode::BadFieldSpec, "root finder degree mismatch");
  ConjugatePairing pairing = pair_conjugates(field.embeddings, 1e-8L);
  if (!pairing.real_roots.empty()) fail(ErrorCode::NotTotallyImaginary, spec.name);
  field.root_pairs = pairing.pairs;

  // phi(c(omega_i)) must equal conj(phi(omega_i)) at every embedding.
  for (const Complex& root : field.embeddings) {
    std::vector<Complex> omega_vals(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) omega_vals[static_cast<std::size_t>(i)] = eval_power_coords(spec.basis[static_cast<std::size_t>(i)], root);
    for (int i = 0; i < n; ++i) {
      Complex lhs(0);
      for (int j = 0; j < n; ++j) {
        const Int& c = field.conj_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (c != 0) lhs += Complex(static_cast<long double>(c.get_d())) * omega_vals[static_cast<std::size_t>(j)];
      }
      if (std::abs(lhs - std::conj(omega_vals[static_cast<std::size_t>(i)])) > kNumericTol)
        fail(ErrorCode::ConjugationNotComplexConjugation, spec.name);
    }
  }

  // Multiplication table.
  std::vector<RatPoly> basis_power(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) basis_power[static_cast<std::size_t>(i)] = RatPoly(spec.basis[static_cast<std::size_t>(i)]);
  field.mult_table.assign(static_cast<std::size_t>(n), std::vector<std::vector<Rat>>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<Rat> coords = t.to_omega(t.reduce(basis_power[static_cast<std::size_t>(i)] * basis_power[static_cast<std::size_t>(j)]));
      field.mult_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coords;
      field.mult_table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(coords);
    }

  // Norm quadrics: alpha * c(alpha) expanded through the tables.
  field.quadrics = compute_quadrics(field);

  // Trace Gram form and its exact LDL^T factorization.
  field.trace_powers = power_sums(spec.minpoly, n);
  field.gram.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // omega_i * c(omega_j) in omega coordinates, then trace.
      std::vector<Rat> prod(static_cast<std::size_t>(n), Rat(0));
      for (int l = 0; l < n; ++l) {
        const Int& c = field.conj_matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
        if (c == 0) continue;
        Rat rc(c);
        const auto& cell = field.mult_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        for (int k = 0; k < n; ++k) prod[static_cast<std::size_t>(k)] += rc * cell[static_cast<std::size_t>(k)];
      }
      field.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = field.trace_omega(prod);
    }

  field.ldl_lower = identity_matrix(n);
  field.ldl_diag.assign(static_cast<std::size_t>(n), Rat(0));
  {
    RatMatrix a = field.gram;
    for (int j = 0; j < n; ++j) {
      Rat d = a[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
      for (int k = 0; k < j; ++k)
        d -= field.ldl_lower[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
             field.ldl_lower[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] * field.ldl_diag[static_cast<std::size_t>(k)];
      if (d <= 0) fail(ErrorCode::BadFieldSpec, "trace form not positive definite");
      field.ldl_diag[static_cast<std::size_t>(j)] = d;
      for (int i = j + 1; i < n; ++i) {
        Rat v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (int k = 0; k < j; ++k)
          v -= field.ldl_lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
               field.ldl_lower[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] * field.ldl_diag[static_cast<std::size_t>(k)];
        field.ldl_lower[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v / d;
      }
    }
  }

  // Bad primes from the polynomial discriminant; certification from field_disc.
  field.minpoly_disc = poly_discriminant(spec.minpoly);
  field.bad_primes = prime_divisors(field.minpoly_disc);
  if (spec.field_disc) {
    const Int& fd = *spec.field_disc;
    if (fd == 0 || !mpz_divisible_p(field.minpoly_disc.get_mpz_t(), fd.get_mpz_t()))
      fail(ErrorCode::BadFieldSpec, "field_disc does not divide disc(minpoly)");
    Int ratio = field.minpoly_disc / fd;
    if (ratio < 0 || !is_square(ratio))
      fail(ErrorCode::BadFieldSpec, "disc(minpoly)/field_disc is not a square");
    Int index = isqrt(ratio);
    field.ramified_primes = prime_divisors(fd);
    field.uncertified_primes = prime_divisors(index);
  } else {
    field.ramified_primes = field.bad_primes;
    field.uncertified_primes = field.bad_primes;
  }

  // Torsion units are exactly the norm-1 points of the lattice.
  field.w_k = static_cast<std::int64_t>(enumerate_weil(field, 1).size());
  return field;
}

std::vector<QuadForm> compute_quadrics(const CMField& field) {
  const int n = field.deg;
  // A_k[i][j] = coefficient of omega_k in omega_i * c(omega_j).
  std::vector<QuadForm> out;
  std::vector<RatMatrix> forms(static_cast<std::size_t>(n), identity_matrix(0));
  for (int k = 0; k < n; ++k)
    forms[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const Int& c = field.conj_matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
        if (c == 0) continue;
        Rat rc(c);
        const auto& cell = field.mult_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        for (int k = 0; k < n; ++k)
          forms[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += rc * cell[static_cast<std::size_t>(k)];
      }
    }
  // Coordinates g+1..2g of alpha*c(alpha) must vanish identically.
  for (int k = field.g; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Rat sym = forms[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                  (i == j ? Rat(0) : forms[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        if (sym != 0)
          fail(ErrorCode::NonRealRelativeNorm,
               field.spec.name + ": coordinate " + std::to_string(k + 1) + " of the relative norm");
      }
  for (int k = 0; k < field.g; ++k) {
    QuadForm q;
    q.n = n;
    q.upper.assign(QuadForm::index(n, n - 1, n - 1) + 1, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Rat coef = forms[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (i != j) coef += forms[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        if (!is_integer(coef))
          fail(ErrorCode::NonIntegralQuadric, field.spec.name + " (is the basis an integral basis?)");
        Int ci = coef.get_num();
        if (!ci.fits_slong_p()) fail(ErrorCode::BadFieldSpec, "quadric coefficient exceeds 64 bits");
        q.upper[QuadForm::index(n, i, j)] = ci.get_si();
      }
    out.push_back(std::move(q));
  }
  return out;
}

std::optional<std::int64_t> weil_membership(const CMField& field, std::span<const std::int64_t> coords) {
  for (int k = 1; k < field.g; ++k)
    if (field.quadrics[static_cast<std::size_t>(k)].eval(coords) != 0) return std::nullopt;
  std::int64_t n = field.quadrics[0].eval(coords);
  if (n <= 0) return std::nullopt;
  return n;
}

std::vector<std::vector<Rat>> trace_gram(const CMField& field) { return field.gram; }

}  // namespace weilzeta
