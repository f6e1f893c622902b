#include "bilv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "bilv/dynamics.hpp"
#include "bilv/indexsets.hpp"
#include "bilv/integrals.hpp"
#include "bilv/lax.hpp"
#include "bilv/poisson.hpp"
#include "bilv/veselov.hpp"

namespace bilv {

int thread_cap(int requested) {
  int cap = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (cap <= 0) cap = 1;
  if (const char* env = std::getenv("BILV_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) cap = std::min(cap, v);
  }
  return std::max(1, cap);
}

namespace {

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

// Definitional membership: the principal submatrix of A^{(k)} picked out by
// m equals A^{(ell)}.
bool submatrix_matches(const std::vector<std::vector<int>>& A, int ell, const IndexTuple& m) {
  int len = static_cast<int>(m.size());
  for (int i = 1; i <= len; ++i)
    for (int j = 1; j <= len; ++j)
      if (A[static_cast<size_t>(m[static_cast<size_t>(i - 1)]) - 1]
           [static_cast<size_t>(m[static_cast<size_t>(j - 1)]) - 1] != A_entry(ell, i, j))
        return false;
  return true;
}

CheckResult check_sets_oracle(int k) {
  auto A = build_A(k);
  std::ostringstream counts;
  for (int ell = 0; ell <= k; ++ell) {
    std::vector<IndexTuple> brute;
    for_each_tuple(2 * k + 1, 2 * ell + 1,
                   [&](const IndexTuple& m) { if (submatrix_matches(A, ell, m)) brute.push_back(m); });
    if (enumerate_S(k, ell) != brute)
      return {"sets/oracle", false, "interlacing generator disagrees with submatrix filter at ell=" + std::to_string(ell)};
    counts << (ell ? " " : "") << brute.size();
  }
  return {"sets/oracle", true, "|S_ell| = " + counts.str()};
}

CheckResult check_sets_closure(int k) {
  size_t checked = 0;
  for (int ell = 0; ell <= k; ++ell)
    for (const auto& m : enumerate_S(k, ell)) {
      if (!in_S(k, ell, sigma(k, m))) return {"sets/closure", false, "sigma leaves S_" + std::to_string(ell)};
      if (!in_S(k, ell, tau(k, m))) return {"sets/closure", false, "tau leaves S_" + std::to_string(ell)};
      ++checked;
    }
  return {"sets/closure", true, std::to_string(checked) + " tuples closed under sigma and tau"};
}

CheckResult check_sets_phi(int k) {
  auto fail = [](const std::string& d) { return CheckResult{"sets/phi-diagram", false, d}; };
  for (int ell = 1; ell <= k; ++ell) {
    std::vector<IndexTuple> dom1, dom2, plus;
    for (const auto& m : enumerate_S(k, ell - 1)) {
      if (m.front() == 1) continue;
      if (m[static_cast<size_t>(ell) - 1] <= k + 1) dom1.push_back(m);
      if (m[static_cast<size_t>(ell) - 1] >= k + 2) dom2.push_back(m);
    }
    for (const auto& n : enumerate_S(k, ell))
      if (n.front() == 1) plus.push_back(n);

    auto contains = [](const IndexTuple& t, int v) { return std::find(t.begin(), t.end(), v) != t.end(); };
    std::vector<IndexTuple> im1, im2, expect1, expect2;
    for (const auto& m : dom1) im1.push_back(phi1(k, ell, m));
    for (const auto& m : dom2) im2.push_back(phi2(k, ell, m));
    std::sort(im1.begin(), im1.end());
    std::sort(im2.begin(), im2.end());
    if (std::adjacent_find(im1.begin(), im1.end()) != im1.end()) return fail("phi1 not injective");
    if (std::adjacent_find(im2.begin(), im2.end()) != im2.end()) return fail("phi2 not injective");
    for (const auto& n : plus) {
      if (contains(n, k + 2)) expect1.push_back(n);
      if (contains(n, k + 1)) expect2.push_back(n);
    }
    if (im1 != expect1) return fail("image of phi1 is not {n in S_+ : k+2 in n} at ell=" + std::to_string(ell));
    if (im2 != expect2) return fail("image of phi2 is not {n in S_+ : k+1 in n} at ell=" + std::to_string(ell));

    for (const auto& m : dom1) {
      IndexTuple down = tau(k, sigma(k, m));
      if (down.front() == 1 || down[static_cast<size_t>(ell) - 1] < k + 2)
        return fail("tau.sigma does not land in the phi2 domain");
      if (tau(k, sigma(k, phi1(k, ell, m))) != phi2(k, ell, down))
        return fail("phi diagram does not commute at ell=" + std::to_string(ell));
    }
    size_t minus = enumerate_S(k, ell).size() - plus.size();
    if (plus.size() + minus != enumerate_S(k, ell).size()) return fail("partition miscount");
  }
  return {"sets/phi-diagram", true, "bijections, images and commuting squares for ell = 1.." + std::to_string(k)};
}

CheckResult check_sets_complement(int k) {
  size_t checked = 0;
  for (int ell = 0; ell <= k; ++ell) {
    bool bad = false;
    for_each_tuple(2 * k + 1, 2 * ell + 1, [&](const IndexTuple& m) {
      IndexTuple mp = complement(k, m);
      if (in_S(k, ell, m) != is_in_S_prime(k, ell, mp)) bad = true;
      if (complement(k, mp) != m) bad = true;
      ++checked;
    });
    if (bad) return {"sets/complement", false, "duality breaks at ell=" + std::to_string(ell)};
  }
  return {"sets/complement", true, std::to_string(checked) + " tuples match the pairing characterization"};
}

CheckResult named_jacobi(const std::string& name, const Bracket& br) {
  if (!br.jacobi_holds()) return {name, false, "a Jacobi defect is nonzero"};
  return {name, true, "all defects vanish identically"};
}

CheckResult check_classification(int k) {
  int n = 2 * k + 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<std::vector<Poly>> full(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n)));
      full[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = Poly::one();
      full[static_cast<size_t>(j) - 1][static_cast<size_t>(i) - 1] = -Poly::one();
      bool admissible = (j - i == k) || (j - i == k + 1);
      bool clean = jacobi_violations(k, full).empty();
      if (clean != admissible)
        return {"poisson/classification", false,
                "single entry (" + std::to_string(i) + "," + std::to_string(j) + ") misclassified"};
    }
  bool symbolic_ok = jacobi_violations(ConstantStructure::symbolic(k)).empty();
  if (!symbolic_ok) return {"poisson/classification", false, "symbolic admissible structure reports violations"};
  return {"poisson/classification", true, "support condition |i-j| in {k,k+1} separates all single-entry structures"};
}

ConstantStructure second_symbolic(int k) {
  int n = 2 * k + 1;
  std::map<std::pair<int, int>, Poly> params;
  for (auto [i, j] : admissible_pairs(k)) params[{i, j}] = Poly::var(VarId::b(i + n, j + n));
  return ConstantStructure::from_params(k, std::move(params));
}

CheckResult check_compatibility(int k) {
  ConstantStructure b = ConstantStructure::symbolic(k), c = second_symbolic(k);
  std::map<std::pair<int, int>, Poly> sum;
  for (auto [i, j] : admissible_pairs(k)) sum[{i, j}] = b.param(i, j) + c.param(i, j);
  Bracket combined = Bracket::deformed(ConstantStructure::from_params(k, std::move(sum)));
  if (!combined.jacobi_holds())
    return {"poisson/compatibility", false, "quadratic plus two admissible structures fails Jacobi"};
  return {"poisson/compatibility", true, "sum of two independent admissible structures stays Poisson"};
}

CheckResult check_casimirs(int k) {
  ConstantStructure b = ConstantStructure::symbolic(k);
  Bracket quad = Bracket::quadratic(k), def = Bracket::deformed(b);
  Poly C = K(k, k), Kk = deformed_casimir(k, b);
  for (int i = 1; i <= 2 * k + 1; ++i) {
    if (!quad.bracket(Poly::var(VarId::x(i)), C).is_zero())
      return {"poisson/casimir", false, "{x_i, C} nonzero for the quadratic bracket"};
    if (!def.bracket(Poly::var(VarId::x(i)), Kk).is_zero())
      return {"poisson/casimir", false, "{x_i, K_k^b} nonzero for the deformed bracket at i=" + std::to_string(i)};
  }
  return {"poisson/casimir", true, "C and the deformed Casimir annihilate every coordinate bracket"};
}

CheckResult check_rank(int k, uint64_t seed) {
  auto pt_x = generic_point(k, seed, false, false);
  int rq = Bracket::quadratic(k).rank_at(pt_x);
  if (rq != 2 * k) return {"poisson/rank", false, "quadratic rank " + std::to_string(rq)};
  auto pt = generic_point(k, seed, true, false);
  int rd = Bracket::deformed(ConstantStructure::symbolic(k)).rank_at(pt);
  if (rd != 2 * k) return {"poisson/rank", false, "deformed rank " + std::to_string(rd)};
  return {"poisson/rank", true, "rank 2k at the seeded point for quadratic and deformed"};
}

CheckResult check_routes(int k) {
  ConstantStructure b = ConstantStructure::symbolic(k);
  auto expansion = K_b_list(k, b);
  for (int ell = 0; ell <= k; ++ell)
    if (K_b_via_exp(k, ell, b) != expansion[static_cast<size_t>(ell)])
      return {"integrals/routes", false, "exp route disagrees at ell=" + std::to_string(ell)};
  std::string detail = "pencil expansion equals exp(D_b) route";
  if (k <= 3) {
    auto charpoly = integrals_from_charpoly(k, b);
    if (charpoly != expansion) return {"integrals/routes", false, "characteristic polynomial route disagrees"};
    detail += " and the characteristic polynomial route";
  }
  return {"integrals/routes", true, detail};
}

CheckResult check_involution(int k) {
  ConstantStructure b = ConstantStructure::symbolic(k);
  auto Ks = K_b_list(k, b);
  Bracket def = Bracket::deformed(b), ones = Bracket::constant(ConstantStructure::pencil_ones(k));
  for (size_t l = 0; l < Ks.size(); ++l)
    for (size_t m = l + 1; m < Ks.size(); ++m) {
      if (!def.bracket(Ks[l], Ks[m]).is_zero())
        return {"integrals/involution", false, "deformed bracket of K_" + std::to_string(l) + ", K_" + std::to_string(m)};
      if (!ones.bracket(Ks[l], Ks[m]).is_zero())
        return {"integrals/involution", false, "constant-ones bracket of K_" + std::to_string(l) + ", K_" + std::to_string(m)};
    }
  return {"integrals/involution", true, "all pairs Poisson-commute under both brackets"};
}

CheckResult check_ladder(int k) {
  ConstantStructure b = ConstantStructure::symbolic(k);
  auto Ks = K_b_list(k, b);
  Bracket def = Bracket::deformed(b), ones = Bracket::constant(ConstantStructure::pencil_ones(k));
  for (size_t l = 0; l + 1 < Ks.size(); ++l)
    if (def.hamiltonian_vector_field(Ks[l]) != ones.hamiltonian_vector_field(Ks[l + 1]))
      return {"integrals/ladder", false, "recursion step " + std::to_string(l) + " breaks"};
  return {"integrals/ladder", true, "deformed field of K_l equals constant-ones field of K_{l+1}"};
}

CheckResult check_independence(int k, uint64_t seed) {
  ConstantStructure b = ConstantStructure::symbolic(k);
  auto Ks = K_b_list(k, b);
  auto pt = generic_point(k, seed, true, false);
  std::vector<std::vector<Rational>> jac;
  for (const auto& Kl : Ks) {
    std::vector<Rational> row;
    for (int i = 1; i <= 2 * k + 1; ++i) row.push_back(Kl.partial(VarId::x(i)).eval(pt));
    jac.push_back(std::move(row));
  }
  int r = rank_bareiss(jac);
  if (r != k + 1) return {"integrals/independence", false, "Jacobian rank " + std::to_string(r)};
  return {"integrals/independence", true, "Jacobian of K_0..K_k has full rank k+1 at the seeded point"};
}

CheckResult check_recursion(int k) {
  if (!d_lowers_K(k)) return {"integrals/recursion", false, "D K_i = (k-i+1) K_{i-1} fails"};
  if (!d_lowers_K_b(k, ConstantStructure::symbolic(k)))
    return {"integrals/recursion", false, "D K_{i+1}^b = (k-i) K_i^b fails"};
  return {"integrals/recursion", true, "both lowering identities hold symbolically"};
}

CheckResult check_equivariance(int k) {
  auto Ks = K_b_list(k, ConstantStructure::symbolic(k));
  for (size_t l = 0; l < Ks.size(); ++l)
    if (Ks[l].cyclic_shift(k) != Ks[l])
      return {"integrals/equivariance", false, "K_" + std::to_string(l) + "^b moves under the joint cyclic shift"};
  return {"integrals/equivariance", true, "every K_l^b is invariant under the joint shift of x and b"};
}

CheckResult check_b_from_c(int k, uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<int> num(-6, 6);
  int n = 2 * k + 1;
  std::vector<Rational> c;
  Rational total(0);
  for (int i = 0; i < n - 1; ++i) {
    Rational v = rat(num(rng), 4);
    total += v;
    c.push_back(v);
  }
  c.push_back(-total);
  Rational free_const = rat(num(rng), 3);
  ConstantStructure b = solve_b_from_c(k, c, free_const);
  auto back = c_from_b(b);
  for (int i = 0; i < n; ++i)
    if (back[static_cast<size_t>(i)] != Poly::constant(c[static_cast<size_t>(i)]))
      return {"integrals/b-from-c", false, "recovered c differs at i=" + std::to_string(i + 1)};
  if (b.chain(mod_into_I(k, 1 - k)) != Poly::constant(free_const))
    return {"integrals/b-from-c", false, "free chain constant not placed at b_{1-k,1}"};
  return {"integrals/b-from-c", true, "chain solve inverts c_i = b_{i,i+k} - b_{i-k,i} with the pinned constant"};
}

CheckResult check_lax_residual(int k) {
  if (!lmat_is_zero(lax_residual(k, ConstantStructure::symbolic(k))))
    return {"lax/residual", false, "Ldot - [L, B - lam M^{k+1}] has a nonzero entry"};
  return {"lax/residual", true, "Lax equation reproduces the deformed system entrywise"};
}

CheckResult check_lax_det(int k) {
  ConstantStructure b = ConstantStructure::symbolic(k);
  if (det_lax(k, b) != det_lax_rhs(k, b)) return {"lax/det", false, "determinant closed form disagrees"};
  return {"lax/det", true, "det L = lam^n + lam^{-n} prod b_{j+k,j} + K_k^b"};
}

CheckResult check_lax_charpoly(int k) {
  ConstantStructure b = ConstantStructure::symbolic(k);
  if (char_poly_lax(k, b) != char_poly_rhs(k, b))
    return {"lax/charpoly", false, "characteristic polynomial closed form disagrees"};
  return {"lax/charpoly", true, "det(L - mu) matches the pencil Casimir closed form"};
}

CheckResult check_lax_weight(int k) {
  if (!lax_weight_homogeneous(char_poly_lax(k, ConstantStructure::symbolic(k)), k))
    return {"lax/weight", false, "a term breaks weight 2k+1 homogeneity"};
  return {"lax/weight", true, "char poly is weight-homogeneous with weight(b)=2"};
}

CheckResult check_lax_permutation(int k) {
  if (!lax_permutation_support_check(k)) return {"lax/permutation", false, "support differs from the predicted family"};
  return {"lax/permutation", true, "nonzero permutations are the k-step cycles and admissible involutions"};
}

CheckResult check_vs_poisson(int k) {
  if (!vs_poisson_map_check(k, ConstantStructure::symbolic(k)))
    return {"vs/poisson-map", false, "pushforward bracket table disagrees"};
  return {"vs/poisson-map", true, "g-variable brackets match the chain table cyclically"};
}

CheckResult check_vs_field(int k) {
  if (!vs_field_check(k, ConstantStructure::symbolic(k)))
    return {"vs/field", false, "pushforward field is not the dressing-chain form"};
  return {"vs/field", true, "fdot_i + fdot_{i+1} = f_{i+1}^2 - f_i^2 + beta_{i+1} - beta_i"};
}

CheckResult check_vs_trace(int k) {
  if (!vs_equivalence_check(k, ConstantStructure::symbolic(k)))
    return {"vs/trace", false, "transfer trace, operator formula and shifted Casimir disagree"};
  return {"vs/trace", true, "tr(L_1..L_n) equals the operator formula and K_k^{b - lam 1}"};
}

CheckResult check_vs_per_site(int k) {
  VsPerSiteReport rep = vs_per_site_check(k, ConstantStructure::symbolic(k));
  if (!rep.ok()) return {"vs/per-site", false, rep.note};
  return {"vs/per-site", true, rep.note};
}

CheckResult check_ring(int k, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9), expo(0, 2), pick(1, 2 * k + 1);
  auto random_poly = [&]() {
    std::vector<Poly::Term> terms;
    for (int t = 0; t < 6; ++t) {
      std::vector<std::pair<VarId, uint32_t>> ents;
      for (int v = 0; v < 2; ++v) {
        int e = expo(rng);
        if (e > 0) ents.emplace_back(VarId::x(pick(rng)), static_cast<uint32_t>(e));
      }
      terms.push_back({Monomial::from_entries(ents), rat(coeff(rng))});
    }
    return Poly::from_terms(std::move(terms));
  };
  for (int round = 0; round < 8; ++round) {
    Poly p = random_poly(), q = random_poly(), r = random_poly();
    if (p + q != q + p) return {"exactalg/ring", false, "addition not commutative"};
    if (p * q != q * p) return {"exactalg/ring", false, "multiplication not commutative"};
    if ((p * q) * r != p * (q * r)) return {"exactalg/ring", false, "multiplication not associative"};
    if (p * (q + r) != p * q + p * r) return {"exactalg/ring", false, "distributivity fails"};
    if (!(p - p).is_zero()) return {"exactalg/ring", false, "subtraction not inverse to addition"};
    if (p.pow(2) != p * p) return {"exactalg/ring", false, "pow(2) differs from repeated product"};
    VarId v = VarId::x(pick(rng));
    if ((p * q).partial(v) != p.partial(v) * q + p * q.partial(v))
      return {"exactalg/ring", false, "Leibniz rule fails for partial"};
    auto pt = generic_point(k, seed + static_cast<uint64_t>(round), false, false);
    if ((p * q + r).eval(pt) != p.eval(pt) * q.eval(pt) + r.eval(pt))
      return {"exactalg/ring", false, "evaluation is not a ring morphism"};
  }
  return {"exactalg/ring", true, "8 randomized rounds of ring and calculus axioms"};
}

SystemSpec seeded_system(int k, uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbull);
  std::uniform_int_distribution<int> num(-2, 2);
  int n = 2 * k + 1;
  std::vector<Rational> c;
  Rational total(0);
  for (int i = 0; i < n - 1; ++i) {
    Rational v = rat(num(rng), 8);
    total += v;
    c.push_back(v);
  }
  c.push_back(-total);
  return SystemSpec::make(k, std::move(c), rat(num(rng), 8));
}

std::vector<double> seeded_x0(int n, uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4full);
  std::uniform_int_distribution<int> num(0, 4);
  std::vector<double> x0;
  for (int i = 0; i < n; ++i) x0.push_back(1.0 + 0.25 * num(rng));
  return x0;
}

CheckResult check_conservation(int k, uint64_t seed) {
  SystemSpec spec = seeded_system(k, seed);
  auto x0 = seeded_x0(spec.n(), seed);
  Trajectory traj = integrate(spec, x0, 10.0, 1e-12, 1e-12, 8);
  DriftReport rep = drift_report(spec, traj);
  double worst = *std::max_element(rep.max_rel_drift.begin(), rep.max_rel_drift.end());
  std::ostringstream os;
  os << "max relative drift " << worst << " over " << traj.accepted_steps << " steps";
  if (worst >= 1e-8) return {"dynamics/conservation", false, os.str()};
  return {"dynamics/conservation", true, os.str()};
}

CheckResult check_self_convergence(int k, uint64_t seed) {
  SystemSpec spec = seeded_system(k, seed);
  auto x0 = seeded_x0(spec.n(), seed);
  auto worst = [&](double tol) {
    DriftReport rep = drift_report(spec, integrate(spec, x0, 10.0, tol, tol, 8));
    return *std::max_element(rep.max_rel_drift.begin(), rep.max_rel_drift.end());
  };
  double coarse = worst(1e-6), fine = worst(0.5e-6);
  std::ostringstream os;
  os << "drift " << coarse << " at tol 1e-6 vs " << fine << " at tol 5e-7";
  if (!(fine < coarse || (fine < 1e-12 && coarse < 1e-12))) return {"dynamics/self-convergence", false, os.str()};
  return {"dynamics/self-convergence", true, os.str()};
}

}  // namespace

std::vector<CheckResult> run_all(int k, uint64_t seed, int threads) {
  if (k < 1) throw DomainViolation("k must be at least 1");
  std::vector<std::pair<std::string, std::function<CheckResult()>>> jobs;
  auto add = [&](int k_cap, std::function<CheckResult()> fn, const std::string& name) {
    if (k <= k_cap) jobs.emplace_back(name, std::move(fn));
  };

  add(6, [k] { return check_sets_oracle(k); }, "sets/oracle");
  add(6, [k] { return check_sets_closure(k); }, "sets/closure");
  add(6, [k] { return check_sets_phi(k); }, "sets/phi-diagram");
  add(6, [k] { return check_sets_complement(k); }, "sets/complement");
  add(4, [k] { return named_jacobi("poisson/jacobi-quadratic", Bracket::quadratic(k)); }, "poisson/jacobi-quadratic");
  add(4, [k] { return named_jacobi("poisson/jacobi-constant", Bracket::constant(ConstantStructure::symbolic(k))); },
      "poisson/jacobi-constant");
  add(3, [k] { return named_jacobi("poisson/jacobi-deformed", Bracket::deformed(ConstantStructure::symbolic(k))); },
      "poisson/jacobi-deformed");
  add(3, [k] { return named_jacobi("poisson/jacobi-pencil", Bracket::pencil(ConstantStructure::symbolic(k))); },
      "poisson/jacobi-pencil");
  add(3, [k] { return check_classification(k); }, "poisson/classification");
  add(3, [k] { return check_compatibility(k); }, "poisson/compatibility");
  add(4, [k] { return check_casimirs(k); }, "poisson/casimir");
  add(6, [k, seed] { return check_rank(k, seed); }, "poisson/rank");
  add(4, [k] { return check_routes(k); }, "integrals/routes");
  add(4, [k] { return check_involution(k); }, "integrals/involution");
  add(3, [k] { return check_ladder(k); }, "integrals/ladder");
  add(6, [k, seed] { return check_independence(k, seed); }, "integrals/independence");
  add(5, [k] { return check_recursion(k); }, "integrals/recursion");
  add(4, [k] { return check_equivariance(k); }, "integrals/equivariance");
  add(6, [k, seed] { return check_b_from_c(k, seed); }, "integrals/b-from-c");
  add(3, [k] { return check_lax_residual(k); }, "lax/residual");
  add(3, [k] { return check_lax_det(k); }, "lax/det");
  add(3, [k] { return check_lax_charpoly(k); }, "lax/charpoly");
  add(3, [k] { return check_lax_weight(k); }, "lax/weight");
  add(2, [k] { return check_lax_permutation(k); }, "lax/permutation");
  add(3, [k] { return check_vs_poisson(k); }, "vs/poisson-map");
  add(3, [k] { return check_vs_field(k); }, "vs/field");
  add(3, [k] { return check_vs_trace(k); }, "vs/trace");
  add(2, [k] { return check_vs_per_site(k); }, "vs/per-site");
  add(6, [k, seed] { return check_ring(k, seed); }, "exactalg/ring");
  add(6, [k, seed] { return check_conservation(k, seed); }, "dynamics/conservation");
  add(6, [k, seed] { return check_self_convergence(k, seed); }, "dynamics/self-convergence");

  std::vector<CheckResult> results(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        results[i] = jobs[i].second();
      } catch (const std::exception& e) {
        results[i] = {jobs[i].first, false, std::string("exception: ") + e.what()};
      }
    }
  };
  int workers = std::min<int>(thread_cap(threads), static_cast<int>(jobs.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace bilv
