#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>

#include "bilv/indexsets.hpp"
#include "bilv/poisson.hpp"

using namespace bilv;

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

// Definitional oracle: the submatrix of A^{(k)} on rows and columns m equals
// A^{(ell)} entrywise.
std::vector<IndexTuple> brute_S(int k, int ell) {
  auto A = build_A(k);
  std::vector<IndexTuple> out;
  for_each_tuple(2 * k + 1, 2 * ell + 1, [&](const IndexTuple& m) {
    int len = static_cast<int>(m.size());
    for (int i = 1; i <= len; ++i)
      for (int j = 1; j <= len; ++j)
        if (A[static_cast<size_t>(m[static_cast<size_t>(i - 1)]) - 1]
             [static_cast<size_t>(m[static_cast<size_t>(j - 1)]) - 1] != A_entry(ell, i, j))
          return;
    out.push_back(m);
  });
  return out;
}

bool contains(const IndexTuple& t, int v) { return std::find(t.begin(), t.end(), v) != t.end(); }

}  // namespace

TEST_CASE("modular representative") {
  CHECK(mod_into_I(2, 6) == 1);
  CHECK(mod_into_I(2, 0) == 5);
  CHECK(mod_into_I(2, -1) == 4);
  CHECK(mod_into_I(1, 3) == 3);
}

TEST_CASE("interlacing membership with witnesses") {
  CHECK(in_S(2, 1, {1, 2, 4}));
  SMembership bad = is_in_S(2, 1, {1, 2, 5});
  CHECK(!bad.in_S);
  CHECK(bad.witness == "m_3 < m_2+k+1 fails for (1,2,5)");
  CHECK(in_S(2, 0, {3}));
  CHECK(is_in_S(2, 0, {3}).witness.empty());
  CHECK_THROWS_AS(is_in_S(2, 1, {1, 2}), WrongArity);
  CHECK_THROWS_AS(is_in_S(2, 1, {1, 2, 3, 4, 5}), WrongArity);
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_S(1, 1) == std::vector<IndexTuple>{{1, 2, 3}});
  CHECK(enumerate_S(1, 0) == std::vector<IndexTuple>{{1}, {2}, {3}});
  CHECK(enumerate_S(2, 1) == std::vector<IndexTuple>{{1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
}

TEST_CASE("enumeration equals the submatrix oracle for k <= 4") {
  for (int k = 1; k <= 4; ++k)
    for (int ell = 0; ell <= k; ++ell) {
      CAPTURE(k);
      CAPTURE(ell);
      CHECK(enumerate_S(k, ell) == brute_S(k, ell));
    }
}

TEST_CASE("sigma examples and involution") {
  CHECK(sigma(2, {1, 2, 4}) == IndexTuple{2, 4, 5});
  CHECK(sigma(1, {1, 2, 3}) == IndexTuple{1, 2, 3});
  for (int k = 1; k <= 3; ++k)
    for_each_tuple(2 * k + 1, 3, [&](const IndexTuple& m) { CHECK(sigma(k, sigma(k, m)) == m); });
  CHECK_THROWS_AS(sigma(2, {4, 2}), DomainViolation);
}

TEST_CASE("tau examples and cyclic order") {
  CHECK(tau(2, {1, 2, 4}) == IndexTuple{2, 3, 5});
  CHECK(tau(2, {2, 3, 5}) == IndexTuple{1, 3, 4});
  for_each_tuple(7, 3, [&](const IndexTuple& m) {
    IndexTuple r = m;
    for (int step = 0; step < 7; ++step) r = tau(3, r);
    CHECK(r == m);
  });
}

TEST_CASE("complement examples") {
  CHECK(complement(2, {1, 2, 4}) == IndexTuple{3, 5});
  CHECK(complement(1, {1, 2, 3}) == IndexTuple{});
  for_each_tuple(5, 2, [&](const IndexTuple& m) { CHECK(complement(2, complement(2, m)) == m); });
}

TEST_CASE("pairing characterization of the complements") {
  CHECK(is_in_S_prime(2, 1, {3, 5}));
  CHECK(!is_in_S_prime(2, 1, {2, 3}));
  CHECK(is_in_S_prime(2, 2, {}));
  CHECK_THROWS_AS(is_in_S_prime(2, 1, {1, 2, 3}), WrongArity);
}

TEST_CASE("complement duality is exhaustive for k <= 4") {
  for (int k = 1; k <= 4; ++k)
    for (int ell = 0; ell <= k; ++ell)
      for_each_tuple(2 * k + 1, 2 * ell + 1,
                     [&](const IndexTuple& m) { CHECK(in_S(k, ell, m) == is_in_S_prime(k, ell, complement(k, m))); });
}

TEST_CASE("closure under sigma and tau for k <= 4") {
  for (int k = 1; k <= 4; ++k)
    for (int ell = 0; ell <= k; ++ell)
      for (const auto& m : enumerate_S(k, ell)) {
        CHECK(in_S(k, ell, sigma(k, m)));
        CHECK(in_S(k, ell, tau(k, m)));
      }
}

TEST_CASE("phi insertion examples") {
  CHECK(phi1(2, 1, {2}) == IndexTuple{1, 2, 4});
  CHECK(phi2(2, 1, {4}) == IndexTuple{1, 3, 4});
  CHECK_THROWS_AS(phi1(2, 1, {4}), DomainViolation);
  CHECK_THROWS_AS(phi2(2, 1, {2}), DomainViolation);
  CHECK_THROWS_AS(phi1(2, 1, {1}), DomainViolation);  // 1 must not occur
}

TEST_CASE("phi bijection diagram is exhaustive for k <= 4") {
  for (int k = 1; k <= 4; ++k)
    for (int ell = 1; ell <= k; ++ell) {
      std::vector<IndexTuple> dom1, dom2, plus;
      for (const auto& m : enumerate_S(k, ell - 1)) {
        if (m.front() == 1) continue;
        if (m[static_cast<size_t>(ell) - 1] <= k + 1) dom1.push_back(m);
        if (m[static_cast<size_t>(ell) - 1] >= k + 2) dom2.push_back(m);
      }
      for (const auto& n : enumerate_S(k, ell))
        if (n.front() == 1) plus.push_back(n);

      std::vector<IndexTuple> im1, im2, expect1, expect2;
      for (const auto& m : dom1) im1.push_back(phi1(k, ell, m));
      for (const auto& m : dom2) im2.push_back(phi2(k, ell, m));
      std::sort(im1.begin(), im1.end());
      std::sort(im2.begin(), im2.end());
      CHECK(std::adjacent_find(im1.begin(), im1.end()) == im1.end());
      CHECK(std::adjacent_find(im2.begin(), im2.end()) == im2.end());
      for (const auto& n : plus) {
        if (contains(n, k + 2)) expect1.push_back(n);
        if (contains(n, k + 1)) expect2.push_back(n);
      }
      CHECK(im1 == expect1);
      CHECK(im2 == expect2);
      for (const auto& m : dom1) {
        IndexTuple down = tau(k, sigma(k, m));
        REQUIRE(down.front() != 1);
        REQUIRE(down[static_cast<size_t>(ell) - 1] >= k + 2);
        CHECK(tau(k, sigma(k, phi1(k, ell, m))) == phi2(k, ell, down));
      }
      // The vertical map is itself a bijection between the domains.
      std::vector<IndexTuple> moved;
      for (const auto& m : dom1) moved.push_back(tau(k, sigma(k, m)));
      std::sort(moved.begin(), moved.end());
      std::vector<IndexTuple> dom2_sorted = dom2;
      std::sort(dom2_sorted.begin(), dom2_sorted.end());
      CHECK(moved == dom2_sorted);
    }
}

TEST_CASE("cardinality partition by membership of 1") {
  for (int k = 1; k <= 4; ++k)
    for (int ell = 0; ell <= k; ++ell) {
      auto all = enumerate_S(k, ell);
      std::vector<IndexTuple> plus, minus;
      for_each_tuple(2 * k + 1, 2 * ell + 1, [&](const IndexTuple& m) {
        if (!in_S(k, ell, m)) return;
        (contains(m, 1) ? plus : minus).push_back(m);
      });
      CHECK(plus.size() + minus.size() == all.size());
      std::vector<IndexTuple> merged = plus;
      merged.insert(merged.end(), minus.begin(), minus.end());
      std::sort(merged.begin(), merged.end());
      CHECK(merged == all);
    }
}
