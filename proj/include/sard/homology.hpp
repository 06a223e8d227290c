#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sard/delta_set.hpp"
#include "sard/fvector.hpp"
#include "sard/graph.hpp"
#include "sard/rank.hpp"
#include "sard/recognition.hpp"
#include "sard/simplicial_complex.hpp"
#include "sard/sparse_matrix.hpp"

namespace sard {

/// Signed boundary matrices of a graded cell structure.  boundary[k] maps
/// k-cells to (k-1)-cells; boundary[0] is the empty matrix.  Construction
/// verifies that consecutive boundaries compose to zero.
struct ChainComplex {
  std::vector<std::int64_t> sizes;
  std::vector<SparseMatrix> boundary;

  int dimension() const { return int(sizes.size()) - 1; }
  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto s : sizes) t += s;
    return t;
  }
};

ChainComplex chain_complex(const SimplicialComplex& c);
ChainComplex chain_complex(const DeltaSet& ds);

/// Coefficient choice for rank computations.
struct Coefficients {
  bool is_rational = false;
  std::int64_t prime = kRankPrime;

  static Coefficients rationals() { return {true, 0}; }
  static Coefficients mod(std::int64_t p) { return {false, p}; }
};

/// betti[k] = sizes[k] - rank d_k - rank d_{k+1} over the chosen field.
std::vector<std::int64_t> betti(const ChainComplex& cc,
                                const Coefficients& field);
std::vector<std::int64_t> betti(const SimplicialComplex& c,
                                const Coefficients& field);
std::vector<std::int64_t> betti(const DeltaSet& ds, const Coefficients& field);

/// D = d + d^T over the whole graded space (rows/cols = flat cell ids).
SparseMatrix dirac(const ChainComplex& cc);
/// D^2; block diagonal with one Hodge block per dimension.
SparseMatrix beltrami(const ChainComplex& cc);
/// The k-th Hodge block d_k^T d_k + d_{k+1} d_{k+1}^T.
SparseMatrix hodge_block(const ChainComplex& cc, int k);

/// All Hodge blocks with their rational nullities; betti[k] agrees with the
/// rank-based Betti numbers over the rationals.
struct HodgeDecomposition {
  std::vector<SparseMatrix> blocks;  // block k is sizes[k] square
  std::vector<std::int64_t> betti;
};

HodgeDecomposition hodge_decomposition(const ChainComplex& cc);

/// Compatible orientation of the top-dimensional cells of whitney(g).
struct Orientation {
  int dim = -1;
  // (facet vertex list, sign) in facet id order
  std::vector<std::pair<std::vector<int>, int>> facet_signs;
};

/// Consistent facet orientation of a closed manifold graph, or nullopt when
/// none exists.  Throws ClassificationError if g fails is_manifold or its
/// facet structure is not a closed pseudomanifold.  cfg is forwarded to the
/// manifold check; level set realizations routinely outgrow the default
/// vertex cap.
std::optional<Orientation> orientable(const Graph& g,
                                      const RecognitionConfig& cfg = {});

/// Dot product with the dimension-4 Dehn-Sommerville vector
/// (0,-22,33,-40,45); zero for closed 4-manifolds.
std::int64_t dehn_sommerville_check(const FVector& f);

}  // namespace sard
