#pragma once

#include <cstdint>

#include "sard/sparse_matrix.hpp"

namespace sard {

/// Default modulus for fast ranks: the Mersenne prime 2^31 - 1.
constexpr std::int64_t kRankPrime = 2147483647;

/// Rank over the prime field Z/p by sparse elimination with Markowitz-style
/// pivot selection (cheapest column, then cheapest row within it).
int rank_mod_p(const SparseMatrix& m, std::int64_t p = kRankPrime);

/// Exact rank over the rationals.  Slower; used to confirm results when a
/// prime-field rank could be unlucky.
int rank_rational(const SparseMatrix& m);

}  // namespace sard
