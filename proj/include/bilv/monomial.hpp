#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "bilv/varid.hpp"

namespace bilv {

// Sparse exponent vector, sorted by VarId, exponents > 0.
class Monomial {
 public:
  using Entry = std::pair<VarId, uint32_t>;

  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(VarId v, uint32_t e = 1) {
    Monomial m;
    if (e > 0) m.e_.emplace_back(v, e);
    return m;
  }
  // Entries need not be sorted or unique; zero exponents are dropped.
  static Monomial from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : entries) {
      if (e == 0) continue;
      if (!m.e_.empty() && m.e_.back().first == v)
        m.e_.back().second += e;
      else
        m.e_.emplace_back(v, e);
    }
    return m;
  }

  const std::vector<Entry>& entries() const { return e_; }
  bool is_one() const { return e_.empty(); }

  uint32_t degree() const {
    uint32_t d = 0;
    for (const auto& [v, e] : e_) d += e;
    return d;
  }
  uint32_t degree_of_kind(VarKind k) const {
    uint32_t d = 0;
    for (const auto& [v, e] : e_)
      if (v.kind() == k) d += e;
    return d;
  }
  uint32_t exponent_of(VarId v) const {
    for (const auto& [w, e] : e_)
      if (w == v) return e;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e_.reserve(a.e_.size() + b.e_.size());
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() && ib != b.e_.end()) {
      if (ia->first < ib->first)
        r.e_.push_back(*ia++);
      else if (ib->first < ia->first)
        r.e_.push_back(*ib++);
      else {
        r.e_.emplace_back(ia->first, ia->second + ib->second);
        ++ia;
        ++ib;
      }
    }
    r.e_.insert(r.e_.end(), ia, a.e_.end());
    r.e_.insert(r.e_.end(), ib, b.e_.end());
    return r;
  }

  // Monomial with exponent of v reduced by one (caller ensures it occurs).
  Monomial without_one(VarId v) const {
    Monomial r = *this;
    for (auto it = r.e_.begin(); it != r.e_.end(); ++it) {
      if (it->first == v) {
        if (--it->second == 0) r.e_.erase(it);
        return r;
      }
    }
    return r;
  }
  // Monomial with v removed entirely.
  Monomial without_var(VarId v) const {
    Monomial r;
    for (const auto& ent : e_)
      if (ent.first != v) r.e_.push_back(ent);
    return r;
  }

  bool operator==(const Monomial&) const = default;

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (const auto& [v, e] : e_) {
      h = (h ^ v.code()) * 1099511628211ull;
      h = (h ^ e) * 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }

 private:
  std::vector<Entry> e_;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Graded lexicographic: total degree first, ties broken on exponents in
// increasing VarId order, larger exponent on the earlier variable wins.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  auto ia = a.entries().begin(), ib = b.entries().begin();
  while (ia != a.entries().end() && ib != b.entries().end()) {
    if (ia->first != ib->first) return !(ia->first < ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return ia == a.entries().end() && ib != b.entries().end();
}

}  // namespace bilv
