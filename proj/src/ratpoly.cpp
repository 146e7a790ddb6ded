#include "weilzeta/ratpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weilzeta {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::from_ints(const std::vector<Int>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.emplace_back(v);
  return RatPoly(std::move(c));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::eval(const Rat& x) const {
  Rat r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return RatPoly();
  std::vector<Rat> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(c));
}

bool RatPoly::integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

std::vector<Int> RatPoly::int_coeffs() const {
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (!is_integer(c)) throw std::logic_error("int_coeffs on non-integer polynomial");
    out.push_back(c.get_num());
  }
  return out;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const Rat& k) const {
  if (k == 0) return RatPoly();
  std::vector<Rat> c(coeffs_);
  for (auto& v : c) v *= k;
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rat> rem(a.coeffs_);
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rat r = rem[static_cast<std::size_t>(i)];
    if (r == 0) continue;
    Rat q = r / b.leading();
    quo[static_cast<std::size_t>(i - b.degree())] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(i - b.degree() + j)] -= q * b.coeff(j);
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = coeff(i);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (i == 0 || a != 1) os << rat_to_string(a);
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = RatPoly::divmod(x, y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x * (Rat(1) / x.leading());
}

bool is_squarefree(const RatPoly& f) {
  if (f.is_zero()) return false;
  return poly_gcd(f, f.derivative()).degree() <= 0;
}

Int resultant(const std::vector<Int>& a, const std::vector<Int>& b) {
  int da = static_cast<int>(a.size()) - 1;
  int db = static_cast<int>(b.size()) - 1;
  while (da >= 0 && a[static_cast<std::size_t>(da)] == 0) --da;
  while (db >= 0 && b[static_cast<std::size_t>(db)] == 0) --db;
  if (da < 0 || db < 0) return 0;
  if (da == 0 && db == 0) return 1;
  int n = da + db;
  // Sylvester matrix, then a fraction-free Bareiss elimination.
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (int r = 0; r < db; ++r)
    for (int j = 0; j <= da; ++j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = a[static_cast<std::size_t>(da - j)];
  for (int r = 0; r < da; ++r)
    for (int j = 0; j <= db; ++j) m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + j)] = b[static_cast<std::size_t>(db - j)];

  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        Int num = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                  m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = num / prev;  // exact by Bareiss
      }
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = 0;
    }
    prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  return sign * m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

Int poly_discriminant(const std::vector<Int>& monic) {
  int d = static_cast<int>(monic.size()) - 1;
  if (d < 1) return 1;
  std::vector<Int> deriv(static_cast<std::size_t>(d), 0);
  for (int i = 1; i <= d; ++i) deriv[static_cast<std::size_t>(i - 1)] = monic[static_cast<std::size_t>(i)] * i;
  Int res = resultant(monic, deriv);
  // disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f), lc = 1 here.
  return (d * (d - 1) / 2) % 2 == 0 ? res : -res;
}

}  // namespace weilzeta
