#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "sard/fvector.hpp"
#include "sard/graph.hpp"

namespace sard {

/// Finite abstract simplicial complex.  Cells are strictly sorted vertex
/// lists, stored per dimension in lexicographic order; the global cell id
/// enumerates cells by (dimension, lexicographic vertex list), which is the
/// bijection used by graph realizations.  Complexes are immutable and always
/// downward closed.
class SimplicialComplex {
 public:
  using Cell = std::vector<int>;

  SimplicialComplex() = default;  // the empty complex

  /// Downward closure of the given facets.  Facets may overlap and need not
  /// be maximal.  An empty facet is rejected.
  static SimplicialComplex generate(const std::vector<Cell>& facets);

  /// Builds from an explicit cell list, which must already be downward
  /// closed (validated).
  static SimplicialComplex from_cells(const std::vector<Cell>& cells);

  /// Whitney (clique) complex of a graph: all vertex sets of complete
  /// subgraphs.
  static SimplicialComplex whitney(const Graph& g);

  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t size() const { return total_; }
  bool is_empty() const { return total_ == 0; }

  FVector f_vector() const;
  std::int64_t euler_characteristic() const { return f_vector().euler(); }

  std::size_t num_cells(int k) const;
  int cell_dim(std::size_t id) const;
  std::span<const std::int32_t> cell_span(std::size_t id) const;
  Cell cell(std::size_t id) const;

  /// Id of a sorted cell, if present.
  std::optional<std::size_t> find(const std::int32_t* verts, int count) const;
  std::optional<std::size_t> find(const Cell& cell) const;

  /// Sorted vertex labels (the 0-cells).
  std::vector<int> vertex_ids() const;

  /// Maximal cells in id order.
  std::vector<Cell> facets() const;

  /// 1-skeleton graph.
  Graph skeleton() const;

  /// Proper faces / cofaces of every cell as sorted id lists.  Built lazily,
  /// then shared; cheap to call repeatedly.
  const std::vector<std::vector<std::uint32_t>>& face_ids() const;
  const std::vector<std::vector<std::uint32_t>>& coface_ids() const;

  bool operator==(const SimplicialComplex& o) const { return cells_ == o.cells_; }

 private:
  // cells_[k]: flat array of (k+1)-tuples, lexicographically sorted
  std::vector<std::vector<std::int32_t>> cells_;
  std::vector<std::size_t> offset_;  // id base per dimension, size dims+1
  std::size_t total_ = 0;

  struct Incidence {
    std::vector<std::vector<std::uint32_t>> faces;
    std::vector<std::vector<std::uint32_t>> cofaces;
  };
  mutable std::shared_ptr<const Incidence> incidence_;

  void finalize(std::vector<std::vector<std::int32_t>> flat);
  const Incidence& incidence() const;
};

/// Graph on the cells of c: x ~ y iff one strictly contains the other.
/// Vertex i of the result is cell id i (the stable bijection).
Graph realization_graph(const SimplicialComplex& c);

/// A realization graph together with the complex labelling its vertices.
struct Realization {
  std::shared_ptr<const SimplicialComplex> complex;
  Graph graph;

  SimplicialComplex::Cell label(int vertex) const {
    return complex->cell(static_cast<std::size_t>(vertex));
  }
};

Realization realize(std::shared_ptr<const SimplicialComplex> c);

/// Splits the unit sphere of a realization vertex into the sub-cell part
/// (cells strictly contained in the label) and the super-cell part (cells
/// strictly containing it).  Their Zykov join is isomorphic to the unit
/// sphere itself.
std::pair<Graph, Graph> sphere_decomposition(const Realization& r, int vertex);

/// Barycentric refinement of a graph: the realization graph of its Whitney
/// complex.
Graph barycentric(const Graph& g);

}  // namespace sard
