#pragma once

#include <string>
#include <vector>

#include "bilv/poly.hpp"

namespace bilv {

// Finite Laurent series in lam with Poly coefficients (coefficients must not
// themselves contain lam). Normalized: empty means zero, otherwise the lowest
// and highest stored coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly zero() { return LaurentPoly(); }
  // p placed at offset shift (p must be lam-free).
  static LaurentPoly from_poly(const Poly& p, int shift = 0);
  // Decomposes a polynomial containing lam; lam^d lands at offset d + base.
  static LaurentPoly from_lam_poly(const Poly& p, int base = 0);

  bool is_zero() const { return c_.empty(); }
  int min_offset() const { return shift_; }
  int max_offset() const { return shift_ + static_cast<int>(c_.size()) - 1; }
  Poly coeff_at(int offset) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Rational& c) const;
  bool operator==(const LaurentPoly& o) const = default;

  // Sum of coeff * lam^offset; requires min_offset() >= 0.
  Poly to_poly() const;
  std::string str() const;

 private:
  void normalize();
  int shift_ = 0;
  std::vector<Poly> c_;
  friend struct LaurentAccess;
};

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;
using PolyMatrix = std::vector<std::vector<Poly>>;

LaurentMatrix lmat_mul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix lmat_sub(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix lmat_commutator(const LaurentMatrix& a, const LaurentMatrix& b);
bool lmat_is_zero(const LaurentMatrix& m);

// Exact determinant by minor expansion memoized on column subsets.
Poly poly_det(const PolyMatrix& m);

// Determinant of a Laurent matrix: clears lam by scaling every entry with
// lam^c (c = -min offset over entries, at least 0), takes the polynomial
// determinant, and shifts back by -c*n.
LaurentPoly laurent_det(const LaurentMatrix& m);

}  // namespace bilv
