#include "bilv/laurent.hpp"

#include <algorithm>
#include <unordered_map>

#include "bilv/errors.hpp"

namespace bilv {

void LaurentPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  while (!c_.empty() && c_.front().is_zero()) {
    c_.erase(c_.begin());
    ++shift_;
  }
  if (c_.empty()) shift_ = 0;
}

LaurentPoly LaurentPoly::from_poly(const Poly& p, int shift) {
  if (p.degree_in(VarId::lam()) > 0) throw DomainViolation("laurent coefficient contains lam");
  LaurentPoly r;
  r.shift_ = shift;
  r.c_.push_back(p);
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::from_lam_poly(const Poly& p, int base) {
  LaurentPoly r;
  r.shift_ = base;
  uint32_t d = p.degree_in(VarId::lam());
  for (uint32_t e = 0; e <= d; ++e) r.c_.push_back(p.coeff_of(VarId::lam(), e));
  r.normalize();
  return r;
}

Poly LaurentPoly::coeff_at(int offset) const {
  int idx = offset - shift_;
  if (idx < 0 || idx >= static_cast<int>(c_.size())) return Poly::zero();
  return c_[idx];
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LaurentPoly r;
  int lo = std::min(a.min_offset(), b.min_offset());
  int hi = std::max(a.max_offset(), b.max_offset());
  r.shift_ = lo;
  r.c_.resize(hi - lo + 1);
  for (int o = lo; o <= hi; ++o) r.c_[o - lo] = a.coeff_at(o) + b.coeff_at(o);
  r.normalize();
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r = *this;
  for (auto& p : r.c_) p = p.scaled(c);
  r.normalize();
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.shift_ = a.shift_ + b.shift_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Poly::zero());
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (!a.c_[i].is_zero() && !b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.normalize();
  return r;
}

Poly LaurentPoly::to_poly() const {
  if (is_zero()) return Poly::zero();
  if (shift_ < 0) throw DomainViolation("laurent value has negative offsets");
  Poly out;
  for (size_t i = 0; i < c_.size(); ++i)
    out += c_[i] * Poly::var(VarId::lam(), shift_ + static_cast<uint32_t>(i));
  return out;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int o = min_offset(); o <= max_offset(); ++o) {
    Poly p = coeff_at(o);
    if (p.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + p.str() + ")";
    if (o != 0) s += "*lam^" + std::to_string(o);
  }
  return s;
}

LaurentMatrix lmat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  size_t n = a.size();
  LaurentMatrix r(n, std::vector<LaurentPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      LaurentPoly acc;
      for (size_t l = 0; l < n; ++l)
        if (!a[i][l].is_zero() && !b[l][j].is_zero()) acc = acc + a[i][l] * b[l][j];
      r[i][j] = acc;
    }
  return r;
}

LaurentMatrix lmat_sub(const LaurentMatrix& a, const LaurentMatrix& b) {
  size_t n = a.size();
  LaurentMatrix r(n, std::vector<LaurentPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

LaurentMatrix lmat_commutator(const LaurentMatrix& a, const LaurentMatrix& b) {
  return lmat_sub(lmat_mul(a, b), lmat_mul(b, a));
}

bool lmat_is_zero(const LaurentMatrix& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

namespace {

// det of rows [r..n) on the column set `mask`, expanding along row r.
Poly det_rec(const PolyMatrix& m, uint32_t mask,
             std::unordered_map<uint32_t, Poly>& memo) {
  if (mask == 0) return Poly::one();
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  size_t n = m.size();
  size_t r = n - static_cast<size_t>(__builtin_popcount(mask));
  Poly det;
  int pos = 0;
  for (size_t c = 0; c < n; ++c) {
    if (!(mask & (1u << c))) continue;
    if (!m[r][c].is_zero()) {
      Poly sub = det_rec(m, mask & ~(1u << c), memo);
      Poly contrib = m[r][c] * sub;
      det = (pos % 2 == 0) ? det + contrib : det - contrib;
    }
    ++pos;
  }
  memo.emplace(mask, det);
  return det;
}

}  // namespace

Poly poly_det(const PolyMatrix& m) {
  size_t n = m.size();
  if (n == 0) return Poly::one();
  if (n > 31) throw DomainViolation("poly_det supports n <= 31");
  for (const auto& row : m)
    if (row.size() != n) throw DimensionMismatch("poly_det needs a square matrix");
  std::unordered_map<uint32_t, Poly> memo;
  return det_rec(m, (n == 31) ? 0x7fffffffu : ((1u << n) - 1), memo);
}

LaurentPoly laurent_det(const LaurentMatrix& m) {
  size_t n = m.size();
  if (n == 0) return LaurentPoly::from_poly(Poly::one());
  int c = 0;
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionMismatch("laurent_det needs a square matrix");
    for (const auto& e : row)
      if (!e.is_zero()) c = std::max(c, -e.min_offset());
  }
  PolyMatrix cleared(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Poly p;
      if (!m[i][j].is_zero()) {
        for (int o = m[i][j].min_offset(); o <= m[i][j].max_offset(); ++o) {
          Poly coeff = m[i][j].coeff_at(o);
          if (!coeff.is_zero()) p += coeff * Poly::var(VarId::lam(), static_cast<uint32_t>(o + c));
        }
      }
      cleared[i][j] = p;
    }
  Poly d = poly_det(cleared);
  return LaurentPoly::from_lam_poly(d, -c * static_cast<int>(n));
}

}  // namespace bilv
