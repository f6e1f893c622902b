#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "bilv/monomial.hpp"
#include "bilv/rational.hpp"

namespace bilv {

// Sparse multivariate polynomial over Rational. Terms are kept in canonical
// form: descending graded-lex order, no zero coefficients, no duplicates.
class Poly {
 public:
  struct Term {
    Monomial mon;
    Rational coeff;
    bool operator==(const Term& o) const { return mon == o.mon && coeff == o.coeff; }
  };

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(const Rational& c);
  static Poly one() { return constant(1); }
  static Poly var(VarId v, uint32_t e = 1);
  static Poly monomial(const Monomial& m, const Rational& c);
  // Any order, duplicates and zeros allowed; canonicalizes.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  bool operator==(const Poly& o) const { return t_ == o.t_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Rational& c) const;
  Poly pow(uint32_t e) const;
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }

  Poly partial(VarId v) const;
  // Total evaluation; every variable present in the poly must be assigned.
  Rational eval(const std::map<VarId, Rational>& point) const;
  // Parallel substitution; unassigned variables stay symbolic.
  Poly subst(const std::map<VarId, Poly>& map) const;
  // Coefficient of v^power as a polynomial in the remaining variables.
  Poly coeff_of(VarId v, uint32_t power) const;
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff(Monomial::one()); }

  uint32_t degree() const;
  uint32_t degree_of_kind(VarKind k) const;
  uint32_t degree_in(VarId v) const;
  // Terms of maximal x-degree (the top homogeneous part in the x variables).
  Poly top_x_part() const;

  // x_i -> x_{i+1}, b_(i,j) -> b of the shifted pair, all indices mod 2k+1.
  // A pair wrapping past 2k+1 picks up the skew sign of its canonical form.
  Poly cyclic_shift(int k) const;

  std::set<VarId> vars() const;
  int max_x_index() const;

  std::string str() const;

 private:
  std::vector<Term> t_;
};

// Accumulator for big sums of products; canonicalizes once at the end.
class PolyBuilder {
 public:
  void add(const Monomial& m, const Rational& c);
  void add(const Poly& p);
  void add_scaled(const Poly& p, const Rational& c);
  void add_product(const Poly& a, const Poly& b);
  void add_product(const Poly& a, const Poly& b, const Rational& scale);
  Poly take();

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

}  // namespace bilv
