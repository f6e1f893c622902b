#include "bilv/indexsets.hpp"

#include <algorithm>

namespace bilv {

int mod_into_I(int k, int r) {
  int n = 2 * k + 1;
  int m = r % n;
  if (m <= 0) m += n;
  return m;
}

namespace {

void check_k_ell(int k, int ell) {
  if (k < 1) throw DomainViolation("k must be >= 1");
  if (ell < 0 || ell > k) throw DomainViolation("ell must be in [0, k]");
}

std::string tuple_str(const IndexTuple& m) {
  std::string s = "(";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + ")";
}

// Entries in I and strictly increasing; empty witness when fine.
std::string tuple_shape_witness(int k, const IndexTuple& m) {
  int n = 2 * k + 1;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1 || m[i] > n) return "entry " + std::to_string(m[i]) + " outside I";
    if (i > 0 && m[i] <= m[i - 1]) return "not strictly increasing at position " + std::to_string(i + 1);
  }
  return "";
}

}  // namespace

SMembership is_in_S(int k, int ell, const IndexTuple& m) {
  check_k_ell(k, ell);
  if (static_cast<int>(m.size()) != 2 * ell + 1)
    throw WrongArity("tuple must have 2*ell+1 entries, got " + std::to_string(m.size()));
  if (auto w = tuple_shape_witness(k, m); !w.empty()) return {false, w};
  auto at = [&](int i) { return m[static_cast<size_t>(i) - 1]; };  // 1-based
  for (int i = 1; i <= ell; ++i) {
    if (!(at(ell + i) < at(i) + k + 1))
      return {false, "m_" + std::to_string(ell + i) + " < m_" + std::to_string(i) + "+k+1 fails for " + tuple_str(m)};
    if (!(at(i) + k + 1 <= at(ell + i + 1)))
      return {false, "m_" + std::to_string(i) + "+k+1 <= m_" + std::to_string(ell + i + 1) + " fails for " + tuple_str(m)};
  }
  if (!(at(2 * ell + 1) < at(ell + 1) + k + 1))
    return {false, "m_" + std::to_string(2 * ell + 1) + " < m_" + std::to_string(ell + 1) + "+k+1 fails for " + tuple_str(m)};
  return {true, ""};
}

bool in_S(int k, int ell, const IndexTuple& m) { return is_in_S(k, ell, m).in_S; }

std::vector<IndexTuple> enumerate_S(int k, int ell) {
  check_k_ell(k, ell);
  int n = 2 * k + 1;
  int size = 2 * ell + 1;
  std::vector<IndexTuple> out;
  IndexTuple m(static_cast<size_t>(size));
  // t is the 1-based position being filled; prefix checks prune early.
  auto rec = [&](auto&& self, int t) -> void {
    if (t > size) {
      out.push_back(m);
      return;
    }
    int lo = (t == 1) ? 1 : m[static_cast<size_t>(t) - 2] + 1;
    for (int v = lo; v <= n; ++v) {
      m[static_cast<size_t>(t) - 1] = v;
      if (t > ell && t <= 2 * ell) {
        int i = t - ell;
        if (!(v < m[static_cast<size_t>(i) - 1] + k + 1)) break;  // grows with v
      }
      if (t >= ell + 2) {
        int i = t - ell - 1;
        if (!(m[static_cast<size_t>(i) - 1] + k + 1 <= v)) continue;
      }
      if (t == size && ell >= 1) {
        if (!(v < m[static_cast<size_t>(ell)] + k + 1)) break;
      }
      self(self, t + 1);
    }
  };
  rec(rec, 1);
  return out;
}

IndexTuple sigma(int k, const IndexTuple& m) {
  if (auto w = tuple_shape_witness(k, m); !w.empty()) throw DomainViolation("sigma: " + w);
  size_t s = m.size();
  IndexTuple r(s);
  for (size_t i = 0; i < s; ++i) r[i] = 2 * k + 2 - m[s - 1 - i];
  return r;
}

IndexTuple tau(int k, const IndexTuple& m) {
  if (auto w = tuple_shape_witness(k, m); !w.empty()) throw DomainViolation("tau: " + w);
  if (m.empty()) return m;
  IndexTuple r;
  r.reserve(m.size());
  if (m.back() < 2 * k + 1) {
    for (int v : m) r.push_back(v + 1);
  } else {
    r.push_back(1);
    for (size_t i = 0; i + 1 < m.size(); ++i) r.push_back(m[i] + 1);
  }
  return r;
}

IndexTuple complement(int k, const IndexTuple& m) {
  if (auto w = tuple_shape_witness(k, m); !w.empty()) throw DomainViolation("complement: " + w);
  IndexTuple r;
  size_t pos = 0;
  for (int v = 1; v <= 2 * k + 1; ++v) {
    if (pos < m.size() && m[pos] == v)
      ++pos;
    else
      r.push_back(v);
  }
  return r;
}

bool is_in_S_prime(int k, int ell, const IndexTuple& mp) {
  check_k_ell(k, ell);
  int d = k - ell;
  if (static_cast<int>(mp.size()) != 2 * d)
    throw WrongArity("tuple must have 2*(k-ell) entries, got " + std::to_string(mp.size()));
  if (!tuple_shape_witness(k, mp).empty()) return false;
  for (int j = 0; j < d; ++j) {
    int diff = mp[static_cast<size_t>(d + j)] - mp[static_cast<size_t>(j)];
    if (diff != k && diff != k + 1) return false;
  }
  return true;
}

namespace {

IndexTuple phi_insert(int k, int ell, const IndexTuple& m, int second, const char* name) {
  if (ell < 1 || ell > k) throw DomainViolation(std::string(name) + ": ell must be in [1, k]");
  if (!in_S(k, ell - 1, m)) throw DomainViolation(std::string(name) + ": tuple not in S_(ell-1)");
  if (std::find(m.begin(), m.end(), 1) != m.end())
    throw DomainViolation(std::string(name) + ": tuple contains 1");
  if (std::find(m.begin(), m.end(), second) != m.end())
    throw DomainViolation(std::string(name) + ": insertion collides at " + std::to_string(second));
  IndexTuple r = m;
  r.push_back(1);
  r.push_back(second);
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

IndexTuple phi1(int k, int ell, const IndexTuple& m) {
  if (ell >= 1 && static_cast<int>(m.size()) >= ell && m[static_cast<size_t>(ell) - 1] > k + 1)
    throw DomainViolation("phi1: m_ell must be <= k+1");
  return phi_insert(k, ell, m, k + 2, "phi1");
}

IndexTuple phi2(int k, int ell, const IndexTuple& m) {
  if (ell >= 1 && static_cast<int>(m.size()) >= ell && m[static_cast<size_t>(ell) - 1] < k + 2)
    throw DomainViolation("phi2: m_ell must be >= k+2");
  return phi_insert(k, ell, m, k + 1, "phi2");
}

}  // namespace bilv
