// Acceptance gate: ten end-to-end criteria, one line each, nonzero exit on
// any failure. Budgets and tolerances are pinned here, not configurable.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bilv/dynamics.hpp"
#include "bilv/indexsets.hpp"
#include "bilv/integrals.hpp"
#include "bilv/lax.hpp"
#include "bilv/poisson.hpp"
#include "bilv/veselov.hpp"

using namespace bilv;

namespace {

constexpr uint64_t kSeed = 20240601;

void for_each_tuple(int n, int len, const std::function<void(const IndexTuple&)>& fn) {
  IndexTuple m(static_cast<size_t>(len));
  std::function<void(int, int)> rec = [&](int pos, int low) {
    if (pos == len) {
      fn(m);
      return;
    }
    for (int v = low; v <= n - (len - 1 - pos); ++v) {
      m[static_cast<size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  if (len == 0)
    fn(m);
  else
    rec(0, 1);
}

// Definitional membership, independent of the interlacing generator: the
// principal submatrix of A^{(k)} selected by m must equal A^{(ell)}.
bool oracle_in_S(const std::vector<std::vector<int>>& A, int ell, const IndexTuple& m) {
  int len = static_cast<int>(m.size());
  for (int i = 1; i <= len; ++i)
    for (int j = 1; j <= len; ++j)
      if (A[static_cast<size_t>(m[static_cast<size_t>(i - 1)]) - 1]
           [static_cast<size_t>(m[static_cast<size_t>(j - 1)]) - 1] != A_entry(ell, i, j))
        return false;
  return true;
}

bool contains(const IndexTuple& t, int v) { return std::find(t.begin(), t.end(), v) != t.end(); }

bool crit_sets_oracle(std::string& detail) {
  for (int k = 1; k <= 4; ++k) {
    auto A = build_A(k);
    for (int ell = 0; ell <= k; ++ell) {
      std::vector<IndexTuple> brute;
      bool agree = true;
      for_each_tuple(2 * k + 1, 2 * ell + 1, [&](const IndexTuple& m) {
        bool match = oracle_in_S(A, ell, m);
        if (match) brute.push_back(m);
        if (in_S(k, ell, m) != match) agree = false;
      });
      if (!agree || enumerate_S(k, ell) != brute) {
        detail = "mismatch at k=" + std::to_string(k) + ", ell=" + std::to_string(ell);
        return false;
      }
    }
  }
  detail = "interlacing generator equals the submatrix filter for k=1..4";
  return true;
}

bool crit_sets_symmetries(std::string& detail) {
  for (int k = 1; k <= 4; ++k) {
    int n = 2 * k + 1;
    for (int ell = 0; ell <= k; ++ell) {
      auto S = enumerate_S(k, ell);
      for (const auto& m : S) {
        if (!in_S(k, ell, sigma(k, m)) || !in_S(k, ell, tau(k, m))) {
          detail = "sigma or tau leaves S at k=" + std::to_string(k);
          return false;
        }
        if (sigma(k, sigma(k, m)) != m) {
          detail = "sigma is not an involution";
          return false;
        }
        IndexTuple t = m;
        for (int r = 0; r < n; ++r) t = tau(k, t);
        if (t != m) {
          detail = "tau does not have order 2k+1";
          return false;
        }
        if (complement(k, complement(k, m)) != m) {
          detail = "complement is not an involution";
          return false;
        }
      }
      bool dual = true;
      for_each_tuple(n, 2 * (k - ell), [&](const IndexTuple& mp) {
        if (is_in_S_prime(k, ell, mp) != in_S(k, ell, complement(k, mp))) dual = false;
      });
      if (!dual) {
        detail = "pair-distance characterization of the complements fails at k=" + std::to_string(k) +
                 ", ell=" + std::to_string(ell);
        return false;
      }
    }
    for (int ell = 1; ell <= k; ++ell) {
      std::vector<IndexTuple> dom1, dom2, plus;
      for (const auto& m : enumerate_S(k, ell - 1)) {
        if (m.front() == 1) continue;
        if (m[static_cast<size_t>(ell) - 1] <= k + 1) dom1.push_back(m);
        if (m[static_cast<size_t>(ell) - 1] >= k + 2) dom2.push_back(m);
      }
      for (const auto& t : enumerate_S(k, ell))
        if (t.front() == 1) plus.push_back(t);
      std::vector<IndexTuple> im1, im2, expect1, expect2;
      for (const auto& m : dom1) im1.push_back(phi1(k, ell, m));
      for (const auto& m : dom2) im2.push_back(phi2(k, ell, m));
      std::sort(im1.begin(), im1.end());
      std::sort(im2.begin(), im2.end());
      if (std::adjacent_find(im1.begin(), im1.end()) != im1.end() ||
          std::adjacent_find(im2.begin(), im2.end()) != im2.end()) {
        detail = "insertion maps are not injective";
        return false;
      }
      for (const auto& t : plus) {
        if (contains(t, k + 2)) expect1.push_back(t);
        if (contains(t, k + 1)) expect2.push_back(t);
      }
      if (im1 != expect1 || im2 != expect2) {
        detail = "insertion map images are mischaracterized at k=" + std::to_string(k);
        return false;
      }
      for (const auto& m : dom1) {
        if (tau(k, sigma(k, phi1(k, ell, m))) != phi2(k, ell, tau(k, sigma(k, m)))) {
          detail = "insertion square does not commute at k=" + std::to_string(k);
          return false;
        }
      }
    }
  }
  detail = "closure, complement duality and insertion diagrams hold for k=1..4";
  return true;
}

bool crit_classification(std::string& detail) {
  for (int k = 1; k <= 3; ++k) {
    int n = 2 * k + 1;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        PolyMatrix full(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n)));
        full[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = Poly::one();
        full[static_cast<size_t>(j) - 1][static_cast<size_t>(i) - 1] = -Poly::one();
        bool admissible = (j - i == k) || (j - i == k + 1);
        if (jacobi_violations(k, full).empty() != admissible) {
          detail = "single pair (" + std::to_string(i) + "," + std::to_string(j) + ") misclassified at k=" +
                   std::to_string(k);
          return false;
        }
      }
    if (!jacobi_violations(ConstantStructure::symbolic(k)).empty()) {
      detail = "symbolic admissible structure fails Jacobi at k=" + std::to_string(k);
      return false;
    }
    if (!Bracket::deformed(ConstantStructure::symbolic(k)).jacobi_holds()) {
      detail = "deformed bracket fails Jacobi at k=" + std::to_string(k);
      return false;
    }
  }
  detail = "support distance in {k,k+1} separates Poisson from non-Poisson for k=1..3";
  return true;
}

bool crit_casimir(std::string& detail) {
  for (int k = 1; k <= 4; ++k) {
    ConstantStructure b = ConstantStructure::symbolic(k);
    Bracket def = Bracket::deformed(b);
    Poly Kk = deformed_casimir(k, b);
    for (int i = 1; i <= 2 * k + 1; ++i)
      if (!def.bracket(Poly::var(VarId::x(i)), Kk).is_zero()) {
        detail = "{x_" + std::to_string(i) + ", K_k^b} nonzero at k=" + std::to_string(k);
        return false;
      }
  }
  detail = "deformed Casimir commutes with every coordinate, symbolically, for k=1..4";
  return true;
}

bool crit_routes(std::string& detail) {
  for (int k = 1; k <= 3; ++k) {
    ConstantStructure b = ConstantStructure::symbolic(k);
    auto expansion = K_b_list(k, b);
    for (int ell = 0; ell <= k; ++ell)
      if (K_b_via_exp(k, ell, b) != expansion[static_cast<size_t>(ell)]) {
        detail = "exponential route disagrees at k=" + std::to_string(k) + ", ell=" + std::to_string(ell);
        return false;
      }
    if (integrals_from_charpoly(k, b) != expansion) {
      detail = "characteristic polynomial route disagrees at k=" + std::to_string(k);
      return false;
    }
  }
  detail = "pencil expansion, exp(D_b) route and spectral route agree for k=1..3";
  return true;
}

bool crit_lax(std::string& detail) {
  for (int k = 1; k <= 3; ++k) {
    ConstantStructure b = ConstantStructure::symbolic(k);
    if (!lmat_is_zero(lax_residual(k, b))) {
      detail = "evolution residual nonzero at k=" + std::to_string(k);
      return false;
    }
    if (det_lax(k, b) != det_lax_rhs(k, b)) {
      detail = "determinant differs from its closed form at k=" + std::to_string(k);
      return false;
    }
    if (k <= 2 && char_poly_lax(k, b) != char_poly_rhs(k, b)) {
      detail = "characteristic polynomial differs from its closed form at k=" + std::to_string(k);
      return false;
    }
  }
  detail = "matrix evolution and determinant identities hold symbolically for k=1..3";
  return true;
}

bool crit_involution(std::string& detail) {
  for (int k = 1; k <= 4; ++k) {
    ConstantStructure b = ConstantStructure::symbolic(k);
    auto Ks = K_b_list(k, b);
    Bracket def = Bracket::deformed(b);
    Bracket ones = Bracket::constant(ConstantStructure::pencil_ones(k));
    for (size_t l = 0; l < Ks.size(); ++l)
      for (size_t m = l + 1; m < Ks.size(); ++m)
        if (!def.bracket(Ks[l], Ks[m]).is_zero() || !ones.bracket(Ks[l], Ks[m]).is_zero()) {
          detail = "K_" + std::to_string(l) + " and K_" + std::to_string(m) + " do not commute at k=" +
                   std::to_string(k);
          return false;
        }
    if (k <= 3)
      for (size_t l = 0; l + 1 < Ks.size(); ++l)
        if (def.hamiltonian_vector_field(Ks[l]) != ones.hamiltonian_vector_field(Ks[l + 1])) {
          detail = "recursion ladder breaks at k=" + std::to_string(k) + ", step " + std::to_string(l);
          return false;
        }
    auto pt = generic_point(k, kSeed, true, false);
    std::vector<std::vector<Rational>> jac;
    for (const auto& Kl : Ks) {
      std::vector<Rational> row;
      for (int i = 1; i <= 2 * k + 1; ++i) row.push_back(Kl.partial(VarId::x(i)).eval(pt));
      jac.push_back(std::move(row));
    }
    if (rank_bareiss(jac) != k + 1) {
      detail = "integral family is dependent at the seeded point, k=" + std::to_string(k);
      return false;
    }
  }
  detail = "pairwise involution (k=1..4), ladder (k=1..3) and independence at a seeded point";
  return true;
}

bool crit_recursion(std::string& detail) {
  for (int k = 1; k <= 4; ++k) {
    if (!d_lowers_K(k)) {
      detail = "undeformed lowering identity fails at k=" + std::to_string(k);
      return false;
    }
    if (!d_lowers_K_b(k, ConstantStructure::symbolic(k))) {
      detail = "deformed lowering identity fails at k=" + std::to_string(k);
      return false;
    }
  }
  detail = "both second-derivative lowering identities hold symbolically for k=1..4";
  return true;
}

bool crit_chain_map(std::string& detail) {
  for (int k = 1; k <= 3; ++k) {
    ConstantStructure b = ConstantStructure::symbolic(k);
    if (!vs_poisson_map_check(k, b)) {
      detail = "relabelling is not a Poisson map at k=" + std::to_string(k);
      return false;
    }
    if (!vs_field_check(k, b)) {
      detail = "pushforward field identity fails at k=" + std::to_string(k);
      return false;
    }
    if (!vs_equivalence_check(k, b)) {
      detail = "transfer trace routes disagree at k=" + std::to_string(k);
      return false;
    }
  }
  detail = "dressing chain map, field identity and trace equivalence hold for k=1..3";
  return true;
}

bool crit_dynamics(std::string& detail) {
  SystemSpec spec = SystemSpec::make(
      2, {rat(1, 4), rat(-1, 2), rat(1, 8), rat(3, 8), rat(-1, 4)}, rat(-1, 5));
  std::vector<double> x0 = {1.5, 1.8, 1.4, 1.6, 1.7};
  auto traj = integrate(spec, x0, 10.0, 1e-12, 1e-12);
  auto drift = drift_report(spec, traj);
  double worst = 0;
  for (double d : drift.max_rel_drift) worst = std::max(worst, d);
  if (worst >= 1e-8) {
    detail = "max relative drift " + std::to_string(worst) + " at rel tol 1e-12";
    return false;
  }
  auto loose = drift_report(spec, integrate(spec, x0, 10.0, 1e-6, 1e-6));
  auto tight = drift_report(spec, integrate(spec, x0, 10.0, 5e-7, 5e-7));
  for (size_t l = 0; l < loose.max_rel_drift.size(); ++l) {
    bool both_tiny = loose.max_rel_drift[l] < 1e-12 && tight.max_rel_drift[l] < 1e-12;
    if (!both_tiny && tight.max_rel_drift[l] >= 2.0 * loose.max_rel_drift[l]) {
      detail = "tightening the tolerance did not reduce drift for K_" + std::to_string(l);
      return false;
    }
  }
  detail = "k=2 drift below 1e-8 over t=10 and improves with tighter tolerances";
  return true;
}

struct Criterion {
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"index set enumeration against the definitional oracle", 10.0, crit_sets_oracle},
      {"index set symmetries, complements and insertion maps", 60.0, crit_sets_symmetries},
      {"Jacobi classification of constant deformations", 60.0, crit_classification},
      {"deformed Casimir property", 300.0, crit_casimir},
      {"three routes to the integral family", 60.0, crit_routes},
      {"matrix evolution and determinant identities", 60.0, crit_lax},
      {"involution, recursion ladder and independence", 120.0, crit_involution},
      {"lowering operator recursions", 120.0, crit_recursion},
      {"dressing chain correspondence", 60.0, crit_chain_map},
      {"numeric conservation and tolerance response", 5.0, crit_dynamics},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > criteria[i].budget_seconds) {
      ok = false;
      detail = "exceeded the " + std::to_string(criteria[i].budget_seconds) + "s budget";
    }
    std::printf("%s  %2zu/10  %s  [%.2fs]%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].label.c_str(), secs,
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d/10 acceptance criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
