// Univariate polynomials with exact rational coefficients.
#pragma once

#include <string>
#include <vector>

#include "weilzeta/types.hpp"

namespace weilzeta {

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  static RatPoly from_ints(const std::vector<Int>& coeffs);
  static RatPoly constant(const Rat& c) { return RatPoly({c}); }
  static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)] : Rat(0);
  }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

  Rat eval(const Rat& x) const;
  RatPoly derivative() const;

  bool integer_coeffs() const;
  std::vector<Int> int_coeffs() const;  // requires integer_coeffs()

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly operator*(const Rat& c) const;
  bool operator==(const RatPoly& other) const = default;

  static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rat> coeffs_;  // ascending degree, trailing zeros trimmed
  void trim();
};

// Monic gcd over Q; gcd(0, 0) = 0.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

bool is_squarefree(const RatPoly& f);

// Resultant of two integer polynomials (Sylvester determinant, fraction-free).
Int resultant(const std::vector<Int>& a, const std::vector<Int>& b);

// Discriminant of a monic integer polynomial.
Int poly_discriminant(const std::vector<Int>& monic);

}  // namespace weilzeta
