#pragma once

#include <vector>

#include "bilv/poisson.hpp"
#include "bilv/poly.hpp"

namespace bilv {

// K_ell = sum over S_ell of x_m (K_0 = H, K_k = C).
Poly K(int k, int ell);

// K_k^b: sum over ell and m in S_ell of b'_m x_m, where b'_m is the product
// of b' values over the complement pairs (r_j, s_j).
Poly deformed_casimir(int k, const ConstantStructure& b);

// The family K_0^b..K_k^b read off as nu-coefficients of K_k^{b - nu*1}.
std::vector<Poly> K_b_list(int k, const ConstantStructure& b);

// D = sum_i d^2/dx_i dx_{i+k}; D_b weights each summand by b_{i,i+k}.
Poly op_D(int k, const Poly& p);
Poly op_Db(int k, const ConstantStructure& b, const Poly& p);

// e^{D_b} K_ell truncated at order ell (D_b drops x-degree by two).
Poly K_b_via_exp(int k, int ell, const ConstantStructure& b);

// D K_i = (k-i+1) K_{i-1} for i = 1..k.
bool d_lowers_K(int k);
// D K_{i+1}^b = (k-i) K_i^b for i = 0..k-1.
bool d_lowers_K_b(int k, const ConstantStructure& b);

// Chain solve of b_{i,i+k} - b_{i-k,i} = c_i; c must sum to zero
// (ConstraintViolation otherwise). free_const is b_{1-k,1}.
ConstantStructure solve_b_from_c(int k, const std::vector<Rational>& c, const Rational& free_const);

// c_i = b_{i,i+k} - b_{i-k,i} for i = 1..2k+1.
std::vector<Poly> c_from_b(const ConstantStructure& b);

}  // namespace bilv
