#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "sard/graph.hpp"
#include "sard/recognition.hpp"
#include "sard/simplicial_complex.hpp"

namespace sard {

/// k-vector valued function on vertices.  Values are looked up by vertex id;
/// every vertex of the host must be covered.
struct VertexFunction {
  int k = 1;
  std::map<int, std::vector<double>> values;

  /// Independent +-1 components from the seeded generator.
  static VertexFunction random_signs(const std::vector<int>& vertices,
                                     int arity, std::uint64_t seed);
  /// k=1 random permutation of 1..n: injective by construction.
  static VertexFunction random_injective(const std::vector<int>& vertices,
                                         std::uint64_t seed);

  const std::vector<double>& at(int v) const;
  double at(int v, int comp) const;
};

/// A sign vector: k entries from {-1,+1}.
using SignVec = std::vector<int>;

/// The sign hypercube for arity 2 is the complete graph on the four sign
/// pairs; its edges and triangles select level-set variants.
std::vector<SignVec> sign_square_vertices();
std::vector<std::pair<SignVec, SignVec>> sign_square_edges();
std::vector<std::vector<SignVec>> sign_square_triangles();
/// The edge {(-1,1),(1,-1)}, the arity-2 instance of the default anchors.
std::pair<SignVec, SignVec> default_sign_edge();
/// The two triangles containing a given edge.
std::vector<std::vector<SignVec>> triangles_through(
    const std::pair<SignVec, SignVec>& edge);
/// Anchor pattern for arity k: k vectors, the i-th all +1 except -1 at i.
std::vector<SignVec> default_anchors(int k);
/// Number of distinct anchor choices for arity k: 2^(k-1) * (2^k - 1).
std::int64_t anchor_choice_count(int k);

/// An open set of cells of a host complex together with its containment
/// graph.  Cell ids are ascending host ids; realization vertices carry the
/// same ids.  The realization is materialized on first use since large
/// suites only need the per-link scan below.
struct LevelSet {
  std::shared_ptr<const SimplicialComplex> host;
  std::vector<std::size_t> cells;
  int k = 1;
  std::vector<double> c;

  bool empty() const { return cells.empty(); }
  bool contains(std::size_t cell_id) const;
  /// Counts of selected cells per host dimension.
  FVector cell_f_vector() const;
  /// Containment graph on the cells (vertex ids = cell ids).
  const Graph& realization() const;

 private:
  mutable std::shared_ptr<const Graph> realization_;
};

/// Manifold dimension of the realization, checked link by link without
/// building the whole containment graph.  nullopt when some link fails or
/// dimensions disagree; the empty level set is not a manifold.
std::optional<int> level_set_manifold_dim(const LevelSet& ls,
                                          const RecognitionConfig& cfg = {});

/// Cells where f - c changes sign; a (d-1)-manifold or empty on a
/// d-manifold host.  Throws RegularValueViolation when c hits a vertex
/// value.
LevelSet level_set_real(std::shared_ptr<const SimplicialComplex> host,
                        const VertexFunction& f, double c);

/// Arity-2 level set through an edge of the sign square: cells whose sign
/// image contains both edge endpoints and at least one more value.
LevelSet level_set_complex(std::shared_ptr<const SimplicialComplex> host,
                           const VertexFunction& psi,
                           std::pair<double, double> c,
                           const std::pair<SignVec, SignVec>& edge =
                               default_sign_edge());

/// Arity-k level set: cells whose sign image has at least k+1 values and
/// contains every anchor.
LevelSet level_set_multi(std::shared_ptr<const SimplicialComplex> host,
                         const VertexFunction& f, const std::vector<double>& c,
                         const std::vector<SignVec>& anchors);

/// Cells whose sign image contains all three corners of the triangle t; a
/// (d-2)-manifold with boundary on a d-manifold host.
LevelSet triangle_preimage(std::shared_ptr<const SimplicialComplex> host,
                           const VertexFunction& psi,
                           const std::vector<SignVec>& t);

/// Boundary of a manifold-with-boundary level set (vertices whose links are
/// balls).  Throws ClassificationError otherwise.
Graph boundary_of(const LevelSet& ls);

/// True when every coface of every selected cell is selected (Alexandrov
/// openness); exposed for the test suites.
bool is_open_set(const LevelSet& ls);

}  // namespace sard
