#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bilv/integrals.hpp"
#include "bilv/lax.hpp"

using namespace bilv;

namespace {

Poly X(int i, uint32_t e = 1) { return Poly::var(VarId::x(i), e); }
Poly B(int i, int j) { return Poly::var(VarId::b(i, j)); }

LaurentMatrix lmat_zero(int n) { return LaurentMatrix(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n))); }

LaurentMatrix lmat_identity(int n) {
  LaurentMatrix m = lmat_zero(n);
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = LaurentPoly::from_poly(Poly::one());
  return m;
}

}  // namespace

TEST_CASE("matrix entries at k=1") {
  SUBCASE("undeformed") {
    auto L = build_lax(1, ConstantStructure::zero(1));
    REQUIRE(L.size() == 3);
    CHECK(L[0][1].coeff_at(1) == Poly::one());
    CHECK(L[0][1].min_offset() == 1);
    CHECK(L[1][2].coeff_at(1) == Poly::one());
    CHECK(L[2][0].coeff_at(1) == Poly::one());
    CHECK(L[0][2].coeff_at(0) == X(1));
    CHECK(L[1][0].coeff_at(0) == X(2));
    CHECK(L[2][1].coeff_at(0) == X(3));
    CHECK(L[0][0].is_zero());
    CHECK(L[1][1].is_zero());
    CHECK(L[2][2].is_zero());
  }
  SUBCASE("deformation constants sit on the diagonal at offset -1") {
    ConstantStructure b = ConstantStructure::symbolic(1);
    auto L = build_lax(1, b);
    CHECK(L[0][0].coeff_at(-1) == b.full(2, 1));
    CHECK(L[0][0].coeff_at(-1) == -B(1, 2));
    CHECK(L[1][1].coeff_at(-1) == -B(2, 3));
    CHECK(L[2][2].coeff_at(-1) == B(1, 3));
    CHECK(L[0][0].min_offset() == -1);
    CHECK(L[0][0].max_offset() == -1);
  }
}

TEST_CASE("shift matrix has order 2k+1") {
  int n = 5;
  LaurentMatrix M = lmat_zero(n);
  for (int i = 0; i < n; ++i)
    M[static_cast<size_t>(i)][static_cast<size_t>((i + 1) % n)] = LaurentPoly::from_poly(Poly::one());
  LaurentMatrix P = lmat_identity(n);
  for (int r = 0; r < n; ++r) {
    P = lmat_mul(P, M);
    if (r + 1 < n) CHECK_FALSE(lmat_is_zero(lmat_sub(P, lmat_identity(n))));
  }
  CHECK(lmat_is_zero(lmat_sub(P, lmat_identity(n))));
}

TEST_CASE("gauge matrix shape at k=1") {
  auto G = lax_gauge(1);
  CHECK(G[0][0].coeff_at(0) == -(X(1) + X(2)));
  CHECK(G[1][1].coeff_at(0) == -(X(2) + X(3)));
  CHECK(G[2][2].coeff_at(0) == -(X(3) + X(1)));
  CHECK(G[0][2].coeff_at(1) == -Poly::one());
  CHECK(G[1][0].coeff_at(1) == -Poly::one());
  CHECK(G[2][1].coeff_at(1) == -Poly::one());
  CHECK(G[0][1].is_zero());
}

TEST_CASE("evolution equation closes") {
  CHECK(lmat_is_zero(lax_residual(1, ConstantStructure::zero(1))));
  CHECK(lmat_is_zero(lax_residual(1, ConstantStructure::symbolic(1))));
  CHECK(lmat_is_zero(lax_residual(2, ConstantStructure::symbolic(2))));
}

TEST_CASE("commutator helper is not trivially zero") {
  auto L = build_lax(1, ConstantStructure::symbolic(1));
  LaurentMatrix D = lmat_zero(3);
  D[0][0] = LaurentPoly::from_poly(X(1));
  CHECK_FALSE(lmat_is_zero(lmat_commutator(L, D)));
}

TEST_CASE("determinant of the undeformed matrix") {
  for (int k = 1; k <= 2; ++k) {
    LaurentPoly expect = LaurentPoly::from_poly(Poly::one(), 2 * k + 1) + LaurentPoly::from_poly(K(k, k));
    CHECK(det_lax(k, ConstantStructure::zero(k)) == expect);
  }
}

TEST_CASE("determinant matches its closed form") {
  for (int k = 1; k <= 2; ++k) {
    ConstantStructure b = ConstantStructure::symbolic(k);
    CHECK(det_lax(k, b) == det_lax_rhs(k, b));
  }
}

TEST_CASE("characteristic polynomial at k=1, b=0 by hand") {
  Poly H = X(1) + X(2) + X(3);
  Poly mu = Poly::var(VarId::mu());
  LaurentPoly expect = LaurentPoly::from_poly(Poly::one(), 3) + LaurentPoly::from_poly(-mu.pow(3)) +
                       LaurentPoly::from_poly(mu * H, 1) + LaurentPoly::from_poly(X(1) * X(2) * X(3));
  CHECK(char_poly_lax(1, ConstantStructure::zero(1)) == expect);
}

TEST_CASE("characteristic polynomial matches its closed form") {
  for (int k = 1; k <= 2; ++k) {
    ConstantStructure b = ConstantStructure::symbolic(k);
    CHECK(char_poly_lax(k, b) == char_poly_rhs(k, b));
  }
}

TEST_CASE("integrals read off the characteristic polynomial") {
  ConstantStructure b1 = ConstantStructure::symbolic(1);
  auto got1 = integrals_from_charpoly(1, b1);
  REQUIRE(got1.size() == 2);
  CHECK(got1[0] == X(1) + X(2) + X(3));
  for (int k = 1; k <= 2; ++k) {
    ConstantStructure b = ConstantStructure::symbolic(k);
    CHECK(integrals_from_charpoly(k, b) == K_b_list(k, b));
  }
}

TEST_CASE("encoded flow is the deformed system") {
  for (int k = 1; k <= 2; ++k) {
    ConstantStructure b = ConstantStructure::symbolic(k);
    Poly H;
    for (int i = 1; i <= 2 * k + 1; ++i) H += X(i);
    CHECK(lax_xdot(k, b) == Bracket::deformed(b).hamiltonian_vector_field(H));
  }
}

TEST_CASE("weight homogeneity of both determinants") {
  for (int k = 1; k <= 2; ++k) {
    ConstantStructure b = ConstantStructure::symbolic(k);
    CHECK(lax_weight_homogeneous(det_lax(k, b), k));
    CHECK(lax_weight_homogeneous(char_poly_lax(k, b), k));
    CHECK_FALSE(lax_weight_homogeneous(LaurentPoly::from_poly(X(1) + X(2, 2)), k));
  }
}

TEST_CASE("permutation support of the determinant expansion") {
  for (int k = 1; k <= 2; ++k) CHECK(lax_permutation_support_check(k));
}
