#pragma once

#include <vector>

#include "bilv/laurent.hpp"
#include "bilv/poisson.hpp"

namespace bilv {

// L = X + lam^{-1} Delta + lam M: x_i at (i, i-k), b_{i+k,i} on the diagonal
// at offset -1, ones at (i, i+1) at offset +1 (all indices mod 2k+1).
LaurentMatrix build_lax(int k, const ConstantStructure& b);

// xdot_i = sum_j A_{i,j} x_i x_j + b_{i,i+k} - b_{i-k,i}, written via b.
std::vector<Poly> lax_xdot(int k, const ConstantStructure& b);

// B - lam M^{k+1}: diagonal -(x_i + ... + x_{i+k}) minus lam at (i, i+k+1).
LaurentMatrix lax_gauge(int k);

// Ldot - [L, B - lam M^{k+1}] with xdot substituted; zero when the Lax
// equation reproduces the deformed system.
LaurentMatrix lax_residual(int k, const ConstantStructure& b);

LaurentPoly det_lax(int k, const ConstantStructure& b);
// lam^{2k+1} + lam^{-(2k+1)} prod_j b_{j+k,j} + K_k^b.
LaurentPoly det_lax_rhs(int k, const ConstantStructure& b);

// det(L - mu Id) as a Laurent polynomial in lam.
LaurentPoly char_poly_lax(int k, const ConstantStructure& b);
// lam^{2k+1} + lam^{-(2k+1)} prod_j (b_{j+k,j} - lam mu) + K_k^{b - lam mu 1}.
LaurentPoly char_poly_rhs(int k, const ConstantStructure& b);

// K_ell^b recovered from the (lam mu)^{k-ell} coefficients of char_poly_lax.
std::vector<Poly> integrals_from_charpoly(int k, const ConstantStructure& b);

// Every Leibniz term of the determinant has weight 2k+1 under
// weight(b) = 2, weight(x) = weight(lam) = weight(mu) = 1.
bool lax_weight_homogeneous(const LaurentPoly& p, int k);

// Brute force over all permutations of Lambda = L * E: the nonzero-product
// permutations are exactly the (2k+1)-cycle i -> i+k, its inverse, and
// products of disjoint admissible transpositions.
bool lax_permutation_support_check(int k);

}  // namespace bilv
