#pragma once

#include <string>
#include <vector>

#include "bilv/errors.hpp"

namespace bilv {

// 1-based strictly increasing tuples over I = {1, ..., 2k+1}.
using IndexTuple = std::vector<int>;

struct SMembership {
  bool in_S = false;
  // First violated condition when in_S is false, empty otherwise.
  std::string witness;
};

// Representative of r mod 2k+1 in {1, ..., 2k+1}.
int mod_into_I(int k, int r);

// Interlacing test: m_{l+i} < m_i + k + 1 <= m_{l+i+1} for i = 1..l and
// m_{2l+1} < m_{l+1} + k + 1. Throws WrongArity unless |m| = 2l+1.
SMembership is_in_S(int k, int ell, const IndexTuple& m);
bool in_S(int k, int ell, const IndexTuple& m);

// All of S_l in lexicographic order, by pruned backtracking.
std::vector<IndexTuple> enumerate_S(int k, int ell);

// Entrywise reversal-reflection: result_i = 2k+2 - m_{s+1-i}.
IndexTuple sigma(int k, const IndexTuple& m);
// Add one to every entry; when m_s = 2k+1 the tuple wraps to (1, m_1+1, ...).
IndexTuple tau(int k, const IndexTuple& m);
// I minus the entries of m, increasing.
IndexTuple complement(int k, const IndexTuple& m);

// Split mp = (r_1..r_d, s_1..s_d), d = k-ell; true iff every s_j - r_j is in
// {k, k+1}. Throws WrongArity unless |mp| = 2(k-ell).
bool is_in_S_prime(int k, int ell, const IndexTuple& mp);

// Insert (1, k+2) resp. (1, k+1) into m from S_{ell-1} with 1 not in m;
// domain additionally requires m_ell <= k+1 (phi1) resp. m_ell >= k+2 (phi2).
IndexTuple phi1(int k, int ell, const IndexTuple& m);
IndexTuple phi2(int k, int ell, const IndexTuple& m);

}  // namespace bilv
