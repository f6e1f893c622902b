#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bilv/poly.hpp"

namespace bilv {

// Circulant skew matrix of the cyclic system: entry (i,j) is +1 when
// (j-i) mod 2k+1 lies in {1..k}, -1 when in {k+1..2k}, 0 on the diagonal.
std::vector<std::vector<int>> build_A(int k);
int A_entry(int k, int i, int j);

// The 2k+1 admissible pairs (i<j, j-i in {k, k+1}) in lex order.
std::vector<std::pair<int, int>> admissible_pairs(int k);

// Constant skew structure supported on admissible pairs. Values are Poly so
// one type covers numeric and symbolic parameters.
class ConstantStructure {
 public:
  static ConstantStructure zero(int k);
  static ConstantStructure symbolic(int k);
  static ConstantStructure from_rationals(int k, const std::map<std::pair<int, int>, Rational>& params);
  static ConstantStructure from_params(int k, std::map<std::pair<int, int>, Poly> params);
  // Chain values b_{i,i+k} (index mod 2k+1) for i = 1..2k+1.
  static ConstantStructure from_chain(int k, const std::vector<Poly>& chain);
  // Second leg of the pencil: the structure "1" with b_{j+k,j} = +1, i.e.
  // chain values b_{j,j+k} = -1.
  static ConstantStructure pencil_ones(int k);

  int k() const { return k_; }
  int n() const { return 2 * k_ + 1; }
  // Canonical parameter, i < j admissible.
  const Poly& param(int i, int j) const;
  // Full skew matrix entry, any i, j in I (0 off the admissible support).
  Poly full(int i, int j) const;
  // b_{i, i+k} with the second index reduced mod 2k+1.
  Poly chain(int i) const;

  // b' convention value: -b_{i,j} when j-i = k+1, b_{i,j} when j-i = k.
  Poly bprime(int i, int j) const;
  // Replaces b' by b' + s uniformly (distance-k params gain +s,
  // distance-(k+1) params gain -s). s = nu gives the pencil substitution,
  // s = -lam the trace-identity substitution.
  ConstantStructure bprime_shifted(const Poly& s) const;
  // Structure with full matrix rotated one step: new (i,j) = old (i-1, j-1).
  ConstantStructure tau_shifted() const;

  bool is_numeric() const;
  // Assignment b-var -> value for numeric structures.
  std::map<VarId, Rational> numeric_assignment() const;

  bool operator==(const ConstantStructure&) const = default;

 private:
  ConstantStructure(int k, std::map<std::pair<int, int>, Poly> params)
      : k_(k), params_(std::move(params)) {}
  int k_ = 0;
  std::map<std::pair<int, int>, Poly> params_;
};

struct BPrimeTable {
  int k = 0;
  std::map<std::pair<int, int>, Poly> values;
  static BPrimeTable from(const ConstantStructure& b);
};

// The four bracket kinds. pi(i,j) is the structure entry {x_i, x_j}.
class Bracket {
 public:
  enum class Kind { Quadratic, Constant, Deformed, Pencil };

  static Bracket quadratic(int k) { return Bracket(k, Kind::Quadratic, std::nullopt); }
  static Bracket constant(ConstantStructure b) {
    int k = b.k();
    return Bracket(k, Kind::Constant, std::move(b));
  }
  static Bracket deformed(ConstantStructure b) {
    int k = b.k();
    return Bracket(k, Kind::Deformed, std::move(b));
  }
  // {,}_b^(k) - nu * {,}_1 with symbolic nu.
  static Bracket pencil(ConstantStructure b) {
    int k = b.k();
    return Bracket(k, Kind::Pencil, std::move(b));
  }

  int k() const { return k_; }
  int n() const { return 2 * k_ + 1; }
  Kind kind() const { return kind_; }

  Poly pi(int i, int j) const;
  Poly bracket(const Poly& f, const Poly& g) const;
  // Component i is {x_i, h}.
  std::vector<Poly> hamiltonian_vector_field(const Poly& h) const;
  // {x_i,{x_j,x_m}} + {x_j,{x_m,x_i}} + {x_m,{x_i,x_j}}.
  Poly jacobi_defect(int i, int j, int m) const;
  bool jacobi_holds() const;
  // Rank of the structure matrix at a full numeric assignment.
  int rank_at(const std::map<VarId, Rational>& point) const;

 private:
  Bracket(int k, Kind kind, std::optional<ConstantStructure> b)
      : k_(k), kind_(kind), b_(std::move(b)), ones_(ConstantStructure::pencil_ones(k)) {}
  void check_dims(const Poly& p) const;
  int k_;
  Kind kind_;
  std::optional<ConstantStructure> b_;
  ConstantStructure ones_;
};

// Triples (i, j, m), j < m, i distinct from both, where
// full[j][m] * (A_{i,j} + A_{i,m}) is nonzero; empty iff the quadratic
// bracket plus the constant structure satisfies Jacobi. `full` is any skew
// matrix over Poly, 1-based via full[i-1][j-1].
std::vector<std::array<int, 3>> jacobi_violations(int k, const std::vector<std::vector<Poly>>& full);
std::vector<std::array<int, 3>> jacobi_violations(const ConstantStructure& b);

// Rank by fraction-free (Bareiss) elimination, exact over Rational.
int rank_bareiss(std::vector<std::vector<Rational>> m);

// Deterministic generic point: distinct small primes for x_1..x_n, then the
// b parameters, then nu, assigned after a seed-keyed shuffle.
std::map<VarId, Rational> generic_point(int k, uint64_t seed, bool with_b = true, bool with_nu = false);

}  // namespace bilv
