#include "bilv/integrals.hpp"

#include "bilv/errors.hpp"
#include "bilv/indexsets.hpp"

namespace bilv {

namespace {

Monomial x_monomial(const IndexTuple& m) {
  std::vector<Monomial::Entry> ents;
  ents.reserve(m.size());
  for (int i : m) ents.emplace_back(VarId::x(i), 1);
  return Monomial::from_entries(std::move(ents));
}

}  // namespace

Poly K(int k, int ell) {
  PolyBuilder acc;
  for (const auto& m : enumerate_S(k, ell)) acc.add(x_monomial(m), 1);
  return acc.take();
}

Poly deformed_casimir(int k, const ConstantStructure& b) {
  if (b.k() != k) throw DimensionMismatch("structure has different k");
  PolyBuilder acc;
  for (int ell = 0; ell <= k; ++ell) {
    int d = k - ell;
    for (const auto& m : enumerate_S(k, ell)) {
      IndexTuple mp = complement(k, m);
      Poly weight = Poly::one();
      for (int j = 0; j < d; ++j)
        weight = weight * b.bprime(mp[static_cast<size_t>(j)], mp[static_cast<size_t>(d + j)]);
      if (weight.is_zero()) continue;
      Monomial xm = x_monomial(m);
      for (const auto& t : weight.terms()) acc.add(t.mon * xm, t.coeff);
    }
  }
  return acc.take();
}

std::vector<Poly> K_b_list(int k, const ConstantStructure& b) {
  Poly pencil = deformed_casimir(k, b.bprime_shifted(Poly::var(VarId::nu())));
  std::vector<Poly> out;
  out.reserve(static_cast<size_t>(k) + 1);
  for (int ell = 0; ell <= k; ++ell) out.push_back(pencil.coeff_of(VarId::nu(), static_cast<uint32_t>(k - ell)));
  return out;
}

Poly op_D(int k, const Poly& p) {
  int n = 2 * k + 1;
  if (p.max_x_index() > n) throw DimensionMismatch("polynomial uses x index beyond 2k+1");
  Poly out;
  for (int i = 1; i <= n; ++i)
    out += p.partial(VarId::x(i)).partial(VarId::x(mod_into_I(k, i + k)));
  return out;
}

Poly op_Db(int k, const ConstantStructure& b, const Poly& p) {
  if (b.k() != k) throw DimensionMismatch("structure has different k");
  if (p.max_x_index() > 2 * k + 1) throw DimensionMismatch("polynomial uses x index beyond 2k+1");
  PolyBuilder acc;
  for (int i = 1; i <= 2 * k + 1; ++i) {
    Poly w = b.chain(i);
    if (w.is_zero()) continue;
    Poly dd = p.partial(VarId::x(i)).partial(VarId::x(mod_into_I(k, i + k)));
    if (dd.is_zero()) continue;
    acc.add_product(w, dd);
  }
  return acc.take();
}

Poly K_b_via_exp(int k, int ell, const ConstantStructure& b) {
  Poly term = K(k, ell);
  Poly acc = term;
  for (int j = 1; j <= ell; ++j) {
    term = op_Db(k, b, term).scaled(rat(1, j));
    if (term.is_zero()) break;
    acc += term;
  }
  return acc;
}

bool d_lowers_K(int k) {
  for (int i = 1; i <= k; ++i)
    if (!(op_D(k, K(k, i)) == K(k, i - 1).scaled(k - i + 1))) return false;
  return true;
}

bool d_lowers_K_b(int k, const ConstantStructure& b) {
  std::vector<Poly> Kb = K_b_list(k, b);
  for (int i = 0; i < k; ++i)
    if (!(op_D(k, Kb[static_cast<size_t>(i) + 1]) == Kb[static_cast<size_t>(i)].scaled(k - i))) return false;
  return true;
}

ConstantStructure solve_b_from_c(int k, const std::vector<Rational>& c, const Rational& free_const) {
  int n = 2 * k + 1;
  if (static_cast<int>(c.size()) != n) throw WrongArity("c needs 2k+1 entries");
  Rational sum(0);
  for (const auto& v : c) sum += v;
  if (sum != 0) throw ConstraintViolation("deformation constants must sum to zero");
  // chain(i) = chain(i-k) + c_i along the k-step walk starting at
  // chain(1-k) = free_const; gcd(k, 2k+1) = 1 so the walk covers I.
  std::vector<Poly> chain(static_cast<size_t>(n));
  Rational acc = free_const;
  int idx = 1;
  for (int step = 0; step < n; ++step) {
    acc += c[static_cast<size_t>(idx) - 1];
    chain[static_cast<size_t>(idx) - 1] = Poly::constant(acc);
    idx = mod_into_I(k, idx + k);
  }
  return ConstantStructure::from_chain(k, chain);
}

std::vector<Poly> c_from_b(const ConstantStructure& b) {
  int n = b.n();
  std::vector<Poly> c;
  c.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) c.push_back(b.chain(i) - b.chain(mod_into_I(b.k(), i - b.k())));
  return c;
}

}  // namespace bilv
