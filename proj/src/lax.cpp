#include "bilv/lax.hpp"

#include <algorithm>
#include <numeric>

#include "bilv/errors.hpp"
#include "bilv/indexsets.hpp"
#include "bilv/integrals.hpp"

namespace bilv {

LaurentMatrix build_lax(int k, const ConstantStructure& b) {
  if (b.k() != k) throw DimensionMismatch("structure has different k");
  int n = 2 * k + 1;
  LaurentMatrix L(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    int jx = mod_into_I(k, i - k);
    L[i - 1][jx - 1] = L[i - 1][jx - 1] + LaurentPoly::from_poly(Poly::var(VarId::x(i)), 0);
    L[i - 1][i - 1] = L[i - 1][i - 1] + LaurentPoly::from_poly(b.full(mod_into_I(k, i + k), i), -1);
    int jm = mod_into_I(k, i + 1);
    L[i - 1][jm - 1] = L[i - 1][jm - 1] + LaurentPoly::from_poly(Poly::one(), 1);
  }
  return L;
}

std::vector<Poly> lax_xdot(int k, const ConstantStructure& b) {
  int n = 2 * k + 1;
  std::vector<Poly> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    PolyBuilder acc;
    for (int j = 1; j <= n; ++j) {
      int a = A_entry(k, i, j);
      if (a != 0) acc.add(Monomial::var(VarId::x(i)) * Monomial::var(VarId::x(j)), a);
    }
    Poly p = acc.take();
    p += b.chain(i) - b.chain(mod_into_I(k, i - k));
    out.push_back(p);
  }
  return out;
}

LaurentMatrix lax_gauge(int k) {
  int n = 2 * k + 1;
  LaurentMatrix U(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    Poly diag;
    for (int t = 0; t <= k; ++t) diag -= Poly::var(VarId::x(mod_into_I(k, i + t)));
    U[i - 1][i - 1] = LaurentPoly::from_poly(diag, 0);
    int j = mod_into_I(k, i + k + 1);
    U[i - 1][j - 1] = U[i - 1][j - 1] + LaurentPoly::from_poly(Poly::constant(-1), 1);
  }
  return U;
}

LaurentMatrix lax_residual(int k, const ConstantStructure& b) {
  int n = 2 * k + 1;
  LaurentMatrix L = build_lax(k, b);
  LaurentMatrix U = lax_gauge(k);
  std::vector<Poly> xd = lax_xdot(k, b);
  // Only the X part of L carries time dependence.
  LaurentMatrix Ldot(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    int jx = mod_into_I(k, i - k);
    Ldot[i - 1][jx - 1] = LaurentPoly::from_poly(xd[static_cast<size_t>(i) - 1], 0);
  }
  return lmat_sub(Ldot, lmat_commutator(L, U));
}

LaurentPoly det_lax(int k, const ConstantStructure& b) { return laurent_det(build_lax(k, b)); }

LaurentPoly det_lax_rhs(int k, const ConstantStructure& b) {
  int n = 2 * k + 1;
  Poly prod = Poly::one();
  for (int j = 1; j <= n; ++j) prod = prod * b.full(mod_into_I(k, j + k), j);
  LaurentPoly r = LaurentPoly::from_poly(Poly::one(), n);
  r = r + LaurentPoly::from_poly(prod, -n);
  r = r + LaurentPoly::from_poly(deformed_casimir(k, b), 0);
  return r;
}

LaurentPoly char_poly_lax(int k, const ConstantStructure& b) {
  LaurentMatrix L = build_lax(k, b);
  for (size_t i = 0; i < L.size(); ++i)
    L[i][i] = L[i][i] - LaurentPoly::from_poly(Poly::var(VarId::mu()), 0);
  return laurent_det(L);
}

LaurentPoly char_poly_rhs(int k, const ConstantStructure& b) {
  int n = 2 * k + 1;
  Poly lam_mu = Poly::var(VarId::lam()) * Poly::var(VarId::mu());
  Poly prod = Poly::one();
  for (int j = 1; j <= n; ++j) prod = prod * (b.full(mod_into_I(k, j + k), j) - lam_mu);
  LaurentPoly r = LaurentPoly::from_poly(Poly::one(), n);
  r = r + LaurentPoly::from_lam_poly(prod, -n);
  r = r + LaurentPoly::from_lam_poly(deformed_casimir(k, b.bprime_shifted(lam_mu)), 0);
  return r;
}

std::vector<Poly> integrals_from_charpoly(int k, const ConstantStructure& b) {
  LaurentPoly chi = char_poly_lax(k, b);
  std::vector<Poly> out(static_cast<size_t>(k) + 1);
  for (int ell = 0; ell < k; ++ell)
    out[static_cast<size_t>(ell)] = chi.coeff_at(k - ell).coeff_of(VarId::mu(), static_cast<uint32_t>(k - ell));
  out[static_cast<size_t>(k)] = chi.coeff_at(0).coeff_of(VarId::mu(), 0);
  return out;
}

bool lax_weight_homogeneous(const LaurentPoly& p, int k) {
  int target = 2 * k + 1;
  for (int o = p.min_offset(); o <= p.max_offset(); ++o) {
    Poly coeff = p.coeff_at(o);
    for (const auto& t : coeff.terms()) {
      int w = o;
      for (const auto& [v, e] : t.mon.entries()) {
        int unit = 0;
        switch (v.kind()) {
          case VarKind::X: unit = 1; break;
          case VarKind::B: unit = 2; break;
          case VarKind::Lam: unit = 1; break;
          case VarKind::Mu: unit = 1; break;
          case VarKind::Nu: unit = 1; break;
        }
        w += unit * static_cast<int>(e);
      }
      if (w != target) return false;
    }
  }
  return true;
}

bool lax_permutation_support_check(int k) {
  int n = 2 * k + 1;
  // Lambda = L * E with E_{j, j+k} = 1 has row support {i, i+k, i+k+1}.
  auto lam_entry_nonzero = [&](int i, int j) {
    return j == i || j == mod_into_I(k, i + k) || j == mod_into_I(k, i + k + 1);
  };
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool support = true;
    for (int i = 1; i <= n && support; ++i)
      if (!lam_entry_nonzero(i, perm[static_cast<size_t>(i) - 1])) support = false;
    bool family = false;
    {
      bool cyc1 = true, cyc2 = true;
      for (int i = 1; i <= n; ++i) {
        if (perm[static_cast<size_t>(i) - 1] != mod_into_I(k, i + k)) cyc1 = false;
        if (perm[static_cast<size_t>(i) - 1] != mod_into_I(k, i + k + 1)) cyc2 = false;
      }
      bool invol = true;
      for (int i = 1; i <= n && invol; ++i) {
        int s = perm[static_cast<size_t>(i) - 1];
        if (s == i) continue;
        if (perm[static_cast<size_t>(s) - 1] != i) invol = false;
        int lo = std::min(i, s), hi = std::max(i, s);
        int d = hi - lo;
        if (d != k && d != k + 1) invol = false;
      }
      family = cyc1 || cyc2 || invol;
    }
    if (support != family) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

}  // namespace bilv
