#include "bilv/poly.hpp"

#include <algorithm>

#include "bilv/errors.hpp"

namespace bilv {

namespace {
bool term_desc(const Poly::Term& a, const Poly::Term& b) { return grlex_less(b.mon, a.mon); }
}  // namespace

Poly Poly::constant(const Rational& c) {
  Poly p;
  if (c != 0) p.t_.push_back({Monomial::one(), c});
  return p;
}

Poly Poly::var(VarId v, uint32_t e) {
  Poly p;
  p.t_.push_back({Monomial::var(v, e), Rational(1)});
  return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.t_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_desc);
  Poly p;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!p.t_.empty() && p.t_.back().mon == t.mon) {
      p.t_.back().coeff += t.coeff;
      if (p.t_.back().coeff == 0) p.t_.pop_back();
    } else {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  auto ia = a.t_.begin(), ib = b.t_.begin();
  while (ia != a.t_.end() && ib != b.t_.end()) {
    if (ia->mon == ib->mon) {
      Rational c = ia->coeff + ib->coeff;
      if (c != 0) r.t_.push_back({ia->mon, c});
      ++ia;
      ++ib;
    } else if (grlex_less(ib->mon, ia->mon)) {
      r.t_.push_back(*ia++);
    } else {
      r.t_.push_back(*ib++);
    }
  }
  r.t_.insert(r.t_.end(), ia, a.t_.end());
  r.t_.insert(r.t_.end(), ib, b.t_.end());
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto& t : r.t_) t.coeff *= c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  PolyBuilder acc;
  acc.add_product(a, b);
  return acc.take();
}

Poly Poly::pow(uint32_t e) const {
  Poly r = Poly::one();
  for (uint32_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

Poly Poly::partial(VarId v) const {
  Poly r;
  for (const auto& t : t_) {
    uint32_t e = t.mon.exponent_of(v);
    if (e == 0) continue;
    r.t_.push_back({t.mon.without_one(v), t.coeff * e});
  }
  // Dropping a variable preserves relative grlex order of the surviving terms.
  std::sort(r.t_.begin(), r.t_.end(), term_desc);
  return r;
}

Rational Poly::eval(const std::map<VarId, Rational>& point) const {
  Rational total = 0;
  for (const auto& t : t_) {
    Rational v = t.coeff;
    for (const auto& [var, e] : t.mon.entries()) {
      auto it = point.find(var);
      if (it == point.end()) throw MissingVariable(var.name());
      for (uint32_t i = 0; i < e; ++i) v *= it->second;
    }
    total += v;
  }
  return total;
}

Poly Poly::subst(const std::map<VarId, Poly>& map) const {
  PolyBuilder acc;
  for (const auto& t : t_) {
    Poly factor = Poly::constant(t.coeff);
    Monomial untouched;
    for (const auto& [var, e] : t.mon.entries()) {
      auto it = map.find(var);
      if (it == map.end()) {
        untouched = untouched * Monomial::var(var, e);
      } else {
        factor = factor * it->second.pow(e);
      }
    }
    for (const auto& ft : factor.terms()) acc.add(ft.mon * untouched, ft.coeff);
  }
  return acc.take();
}

Poly Poly::coeff_of(VarId v, uint32_t power) const {
  std::vector<Term> out;
  for (const auto& t : t_)
    if (t.mon.exponent_of(v) == power) out.push_back({t.mon.without_var(v), t.coeff});
  return from_terms(std::move(out));
}

Rational Poly::coeff(const Monomial& m) const {
  for (const auto& t : t_)
    if (t.mon == m) return t.coeff;
  return 0;
}

uint32_t Poly::degree() const {
  uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.mon.degree());
  return d;
}

uint32_t Poly::degree_of_kind(VarKind k) const {
  uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.mon.degree_of_kind(k));
  return d;
}

uint32_t Poly::degree_in(VarId v) const {
  uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.mon.exponent_of(v));
  return d;
}

Poly Poly::top_x_part() const {
  uint32_t d = degree_of_kind(VarKind::X);
  std::vector<Term> out;
  for (const auto& t : t_)
    if (t.mon.degree_of_kind(VarKind::X) == d) out.push_back(t);
  return from_terms(std::move(out));
}

Poly Poly::cyclic_shift(int k) const {
  const int n = 2 * k + 1;
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const auto& t : t_) {
    Rational c = t.coeff;
    std::vector<Monomial::Entry> ents;
    for (const auto& [v, e] : t.mon.entries()) {
      switch (v.kind()) {
        case VarKind::X: {
          int i = v.x_index();
          if (i > n) throw DimensionMismatch("x index exceeds 2k+1 in cyclic_shift");
          ents.emplace_back(VarId::x(i % n + 1), e);
          break;
        }
        case VarKind::B: {
          int i = v.b_i(), j = v.b_j();
          if (j > n) throw DimensionMismatch("b index exceeds 2k+1 in cyclic_shift");
          if (j < n) {
            ents.emplace_back(VarId::b(i + 1, j + 1), e);
          } else {
            // (i, 2k+1) -> literal (i+1, 1): skew sign per power.
            ents.emplace_back(VarId::b(1, i + 1), e);
            if (e % 2 == 1) c = -c;
          }
          break;
        }
        default:
          ents.emplace_back(v, e);
      }
    }
    out.push_back({Monomial::from_entries(std::move(ents)), c});
  }
  return from_terms(std::move(out));
}

std::set<VarId> Poly::vars() const {
  std::set<VarId> s;
  for (const auto& t : t_)
    for (const auto& [v, e] : t.mon.entries()) s.insert(v);
  return s;
}

int Poly::max_x_index() const {
  int mx = 0;
  for (const auto& t : t_)
    for (const auto& [v, e] : t.mon.entries())
      if (v.kind() == VarKind::X) mx = std::max(mx, v.x_index());
  return mx;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < t_.size(); ++i) {
    const auto& t = t_[i];
    Rational c = t.coeff;
    if (i == 0) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string mon;
    for (const auto& [v, e] : t.mon.entries()) {
      if (!mon.empty()) mon += "*";
      mon += v.name();
      if (e > 1) mon += "^" + std::to_string(e);
    }
    if (mon.empty()) {
      s += rat_str(c);
    } else {
      if (c != 1) s += rat_str(c) + "*";
      s += mon;
    }
  }
  return s;
}

void PolyBuilder::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc_.erase(it);
  }
}

void PolyBuilder::add(const Poly& p) {
  for (const auto& t : p.terms()) add(t.mon, t.coeff);
}

void PolyBuilder::add_scaled(const Poly& p, const Rational& c) {
  if (c == 0) return;
  for (const auto& t : p.terms()) add(t.mon, t.coeff * c);
}

void PolyBuilder::add_product(const Poly& a, const Poly& b) {
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) add(ta.mon * tb.mon, ta.coeff * tb.coeff);
}

void PolyBuilder::add_product(const Poly& a, const Poly& b, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) add(ta.mon * tb.mon, ta.coeff * tb.coeff * scale);
}

Poly PolyBuilder::take() {
  std::vector<Poly::Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_) terms.push_back({m, c});
  acc_.clear();
  return Poly::from_terms(std::move(terms));
}

}  // namespace bilv
