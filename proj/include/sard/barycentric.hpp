#pragma once

#include <cstdint>
#include <vector>

#include "sard/fvector.hpp"

namespace sard {

/// Stirling number of the second kind S(n, k).
std::int64_t stirling2(int n, int k);

/// The (d+1) x (d+1) matrix A with A[k][j] = S(j+1, k+1) * (k+1)! mapping the
/// f-vector of a complex to the f-vector of its barycentric refinement:
/// a j-simplex contributes one refined k-cell per chain of k+1 nested
/// non-empty subsets ending at the full vertex set.
std::vector<std::vector<std::int64_t>> barycentric_operator(int d);

/// A applied to f; f is zero-padded or an error if longer than d+1.
FVector apply_barycentric_operator(const std::vector<std::vector<std::int64_t>>& op,
                                   const FVector& f);

}  // namespace sard
