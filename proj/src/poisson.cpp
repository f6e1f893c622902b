#include "bilv/poisson.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "bilv/errors.hpp"
#include "bilv/indexsets.hpp"

namespace bilv {

int A_entry(int k, int i, int j) {
  int n = 2 * k + 1;
  int d = ((j - i) % n + n) % n;
  if (d == 0) return 0;
  return d <= k ? 1 : -1;
}

std::vector<std::vector<int>> build_A(int k) {
  if (k < 1) throw DomainViolation("k must be >= 1");
  int n = 2 * k + 1;
  std::vector<std::vector<int>> A(n, std::vector<int>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) A[i - 1][j - 1] = A_entry(k, i, j);
  return A;
}

std::vector<std::pair<int, int>> admissible_pairs(int k) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= k + 1; ++i) out.emplace_back(i, i + k);
  for (int i = 1; i <= k; ++i) out.emplace_back(i, i + k + 1);
  std::sort(out.begin(), out.end());
  return out;
}

ConstantStructure ConstantStructure::zero(int k) {
  std::map<std::pair<int, int>, Poly> p;
  for (auto pr : admissible_pairs(k)) p[pr] = Poly::zero();
  return ConstantStructure(k, std::move(p));
}

ConstantStructure ConstantStructure::symbolic(int k) {
  std::map<std::pair<int, int>, Poly> p;
  for (auto [i, j] : admissible_pairs(k)) p[{i, j}] = Poly::var(VarId::b(i, j));
  return ConstantStructure(k, std::move(p));
}

ConstantStructure ConstantStructure::from_rationals(int k, const std::map<std::pair<int, int>, Rational>& params) {
  ConstantStructure s = zero(k);
  for (const auto& [pr, v] : params) {
    if (!s.params_.count(pr))
      throw DomainViolation("pair (" + std::to_string(pr.first) + "," + std::to_string(pr.second) +
                            ") not admissible for k=" + std::to_string(k));
    s.params_[pr] = Poly::constant(v);
  }
  return s;
}

ConstantStructure ConstantStructure::from_params(int k, std::map<std::pair<int, int>, Poly> params) {
  ConstantStructure s = zero(k);
  for (auto& [pr, v] : params) {
    if (!s.params_.count(pr))
      throw DomainViolation("pair (" + std::to_string(pr.first) + "," + std::to_string(pr.second) +
                            ") not admissible for k=" + std::to_string(k));
    s.params_[pr] = std::move(v);
  }
  return s;
}

ConstantStructure ConstantStructure::from_chain(int k, const std::vector<Poly>& chain) {
  int n = 2 * k + 1;
  if (static_cast<int>(chain.size()) != n) throw WrongArity("chain needs 2k+1 values");
  std::map<std::pair<int, int>, Poly> p;
  // chain(i) = b_{i,i+k}; pairs of difference k store it directly, pairs of
  // difference k+1 are the wrapped ones: b_{i,j} = -chain(j).
  for (auto [i, j] : admissible_pairs(k)) {
    if (j - i == k)
      p[{i, j}] = chain[static_cast<size_t>(i) - 1];
    else
      p[{i, j}] = -chain[static_cast<size_t>(j) - 1];
  }
  return ConstantStructure(k, std::move(p));
}

ConstantStructure ConstantStructure::pencil_ones(int k) {
  std::vector<Poly> chain(static_cast<size_t>(2 * k + 1), Poly::constant(-1));
  return from_chain(k, chain);
}

const Poly& ConstantStructure::param(int i, int j) const {
  auto it = params_.find({i, j});
  if (it == params_.end())
    throw DomainViolation("pair (" + std::to_string(i) + "," + std::to_string(j) + ") not admissible for k=" +
                          std::to_string(k_));
  return it->second;
}

Poly ConstantStructure::full(int i, int j) const {
  if (i < 1 || j < 1 || i > n() || j > n()) throw DomainViolation("index outside I");
  if (i == j) return Poly::zero();
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = params_.find({i, j});
  if (it == params_.end()) return Poly::zero();
  return flip ? -it->second : it->second;
}

Poly ConstantStructure::chain(int i) const {
  int a = mod_into_I(k_, i);
  return full(a, mod_into_I(k_, a + k_));
}

Poly ConstantStructure::bprime(int i, int j) const {
  const Poly& p = param(i, j);
  return (j - i == k_ + 1) ? -p : p;
}

ConstantStructure ConstantStructure::bprime_shifted(const Poly& s) const {
  std::map<std::pair<int, int>, Poly> p = params_;
  for (auto& [pr, v] : p) v = (pr.second - pr.first == k_) ? v + s : v - s;
  return ConstantStructure(k_, std::move(p));
}

ConstantStructure ConstantStructure::tau_shifted() const {
  std::map<std::pair<int, int>, Poly> p;
  for (auto [i, j] : admissible_pairs(k_)) p[{i, j}] = full(mod_into_I(k_, i - 1), mod_into_I(k_, j - 1));
  return ConstantStructure(k_, std::move(p));
}

bool ConstantStructure::is_numeric() const {
  for (const auto& [pr, v] : params_)
    if (v.degree() > 0) return false;
  return true;
}

std::map<VarId, Rational> ConstantStructure::numeric_assignment() const {
  if (!is_numeric()) throw DomainViolation("structure is not numeric");
  std::map<VarId, Rational> m;
  for (const auto& [pr, v] : params_) m[VarId::b(pr.first, pr.second)] = v.constant_term();
  return m;
}

BPrimeTable BPrimeTable::from(const ConstantStructure& b) {
  BPrimeTable t;
  t.k = b.k();
  for (auto pr : admissible_pairs(b.k())) t.values[pr] = b.bprime(pr.first, pr.second);
  return t;
}

// Only the x slots are dimension-bound; b-variables in coefficients are
// inert symbols and stay unrestricted.
void Bracket::check_dims(const Poly& p) const {
  if (p.max_x_index() > n())
    throw DimensionMismatch("polynomial uses x index beyond 2k+1");
}

Poly Bracket::pi(int i, int j) const {
  Poly p;
  if (kind_ != Kind::Constant) {
    int a = A_entry(k_, i, j);
    if (a != 0)
      p += Poly::monomial(Monomial::var(VarId::x(i)) * Monomial::var(VarId::x(j)), a);
  }
  if (kind_ != Kind::Quadratic) p += b_->full(i, j);
  if (kind_ == Kind::Pencil) p -= Poly::var(VarId::nu()) * ones_.full(i, j);
  return p;
}

Poly Bracket::bracket(const Poly& f, const Poly& g) const {
  check_dims(f);
  check_dims(g);
  std::vector<Poly> df(static_cast<size_t>(n()) + 1), dg(static_cast<size_t>(n()) + 1);
  for (int i = 1; i <= n(); ++i) {
    df[static_cast<size_t>(i)] = f.partial(VarId::x(i));
    dg[static_cast<size_t>(i)] = g.partial(VarId::x(i));
  }
  PolyBuilder acc;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j) {
      Poly p = pi(i, j);
      if (p.is_zero()) continue;
      Poly anti = df[static_cast<size_t>(i)] * dg[static_cast<size_t>(j)] -
                  df[static_cast<size_t>(j)] * dg[static_cast<size_t>(i)];
      if (anti.is_zero()) continue;
      acc.add_product(p, anti);
    }
  return acc.take();
}

std::vector<Poly> Bracket::hamiltonian_vector_field(const Poly& h) const {
  check_dims(h);
  std::vector<Poly> dh(static_cast<size_t>(n()) + 1);
  for (int i = 1; i <= n(); ++i) dh[static_cast<size_t>(i)] = h.partial(VarId::x(i));
  std::vector<Poly> out;
  out.reserve(static_cast<size_t>(n()));
  for (int i = 1; i <= n(); ++i) {
    PolyBuilder acc;
    for (int j = 1; j <= n(); ++j) {
      if (j == i) continue;
      Poly p = pi(i, j);
      if (p.is_zero() || dh[static_cast<size_t>(j)].is_zero()) continue;
      acc.add_product(p, dh[static_cast<size_t>(j)]);
    }
    out.push_back(acc.take());
  }
  return out;
}

Poly Bracket::jacobi_defect(int i, int j, int m) const {
  Poly xi = Poly::var(VarId::x(i)), xj = Poly::var(VarId::x(j)), xm = Poly::var(VarId::x(m));
  return bracket(xi, bracket(xj, xm)) + bracket(xj, bracket(xm, xi)) + bracket(xm, bracket(xi, xj));
}

bool Bracket::jacobi_holds() const {
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      for (int m = j + 1; m <= n(); ++m)
        if (!jacobi_defect(i, j, m).is_zero()) return false;
  return true;
}

int Bracket::rank_at(const std::map<VarId, Rational>& point) const {
  int nn = n();
  std::vector<std::vector<Rational>> M(static_cast<size_t>(nn), std::vector<Rational>(static_cast<size_t>(nn), Rational(0)));
  for (int i = 1; i <= nn; ++i)
    for (int j = 1; j <= nn; ++j)
      if (i != j) M[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = pi(i, j).eval(point);
  return rank_bareiss(std::move(M));
}

std::vector<std::array<int, 3>> jacobi_violations(int k, const std::vector<std::vector<Poly>>& full) {
  int n = 2 * k + 1;
  if (static_cast<int>(full.size()) != n) throw DimensionMismatch("matrix must be (2k+1) x (2k+1)");
  std::vector<std::array<int, 3>> out;
  for (int j = 1; j <= n; ++j)
    for (int m = j + 1; m <= n; ++m) {
      const Poly& bjm = full[static_cast<size_t>(j) - 1][static_cast<size_t>(m) - 1];
      if (bjm.is_zero()) continue;
      for (int i = 1; i <= n; ++i) {
        if (i == j || i == m) continue;
        if (A_entry(k, i, j) + A_entry(k, i, m) != 0) out.push_back({i, j, m});
      }
    }
  return out;
}

std::vector<std::array<int, 3>> jacobi_violations(const ConstantStructure& b) {
  int n = b.n();
  std::vector<std::vector<Poly>> full(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) full[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = b.full(i, j);
  return jacobi_violations(b.k(), full);
}

int rank_bareiss(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  Rational prev(1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i)
      for (size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
    for (size_t i = r + 1; i < rows; ++i) m[i][c] = 0;
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

std::map<VarId, Rational> generic_point(int k, uint64_t seed, bool with_b, bool with_nu) {
  int n = 2 * k + 1;
  std::vector<int> primes;
  for (int v = 2; static_cast<int>(primes.size()) < n + n + 1; ++v) {
    bool is_p = v >= 2;
    for (int d = 2; d * d <= v; ++d)
      if (v % d == 0) {
        is_p = false;
        break;
      }
    if (is_p) primes.push_back(v);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(primes.begin(), primes.end(), rng);
  std::map<VarId, Rational> pt;
  size_t next = 0;
  for (int i = 1; i <= n; ++i) pt[VarId::x(i)] = primes[next++];
  if (with_b)
    for (auto [i, j] : admissible_pairs(k)) pt[VarId::b(i, j)] = primes[next++];
  if (with_nu) pt[VarId::nu()] = primes[next++];
  return pt;
}

}  // namespace bilv
