#pragma once

#include <utility>
#include <vector>

#include "sard/fvector.hpp"
#include "sard/graph.hpp"
#include "sard/simplicial_complex.hpp"

namespace sard {

/// Graded cells with signed face maps.  Cells are addressed by (dimension,
/// index) or by a flat id (dimension offsets accumulate).  Instances come
/// from simplicial complexes or products; faces always point one dimension
/// down and the signed boundary squares to zero.
class DeltaSet {
 public:
  struct Face {
    int index;  // cell index in dimension dim-1
    int sign;   // +1 or -1
  };

  static DeltaSet from_complex(const SimplicialComplex& c);

  int dimension() const { return int(faces_.size()) - 1; }
  int num_cells(int dim) const;
  int total_cells() const { return total_; }
  FVector f_vector() const;

  const std::vector<Face>& faces(int dim, int index) const {
    return faces_[dim][index];
  }

  int flat_id(int dim, int index) const { return offsets_[dim] + index; }
  int dim_of_flat(int flat) const;
  int index_of_flat(int flat) const;

  /// Provenance label: for product cells the flat ids of the two factor
  /// cells; for complex cells (flat id, -1).
  std::pair<int, int> provenance(int dim, int index) const {
    return provenance_[dim][index];
  }

 private:
  friend DeltaSet product_delta(const SimplicialComplex&,
                                const SimplicialComplex&);

  // faces_[k][i] = signed faces of the i-th k-cell
  std::vector<std::vector<std::vector<Face>>> faces_;
  std::vector<std::vector<std::pair<int, int>>> provenance_;
  std::vector<int> offsets_;
  int total_ = 0;

  void finish();  // fills offsets_/total_ from faces_
};

/// Cartesian product as a delta set: cells are pairs (x,y) with dim summing,
/// boundary follows the graded rule: faces of x paired with y keep their
/// sign, faces of y paired with x pick up (-1)^{dim x}.
DeltaSet product_delta(const SimplicialComplex& a, const SimplicialComplex& b);

/// Graph on the cells: edge when one cell is an iterated face of the other.
/// Vertex ids are the flat cell ids.
Graph delta_graph_realization(const DeltaSet& ds);

}  // namespace sard
