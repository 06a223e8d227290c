#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sard/graph.hpp"
#include "sard/levelset.hpp"

namespace sard {

/// Index of f at v: 1 - chi of the clique complex of the part of the unit
/// sphere where f is smaller.  Throws LocalInjectivityError when f ties v
/// with a neighbor; no silent tie breaking.
std::int64_t poincare_hopf_index(const Graph& g, const VertexFunction& f,
                                 int v);

/// Level set {f = f(v)} inside the clique complex of the unit sphere of v.
/// Empty at a local extremum; a (d-2)-sphere at a regular point of a
/// d-manifold.
LevelSet center_manifold(const Graph& g, const VertexFunction& f, int v);

/// Euler characteristic of the clique complex of a center manifold's
/// realization; the quantity the symmetric index formulas consume.
std::int64_t center_euler(const LevelSet& center);

/// Twice the symmetric index of f at v on a d-manifold: 2 - chi(center) when
/// d is even and -chi(center) when d is odd.  Doubled so the half-integer
/// value stays exact.
std::int64_t twice_symmetric_index(const Graph& g, const VertexFunction& f,
                                   int v, int dim);

struct IndexEntry {
  int vertex = 0;
  std::int64_t i_plus = 0;   // index of f
  std::int64_t i_minus = 0;  // index of -f
  std::int64_t center_chi = 0;
  std::int64_t twice_j = 0;
};

/// Per-vertex index table.  dim is the recognized manifold dimension, or -1
/// when the host is not a manifold, in which case twice_j falls back to
/// i_plus + i_minus.  sum_i_plus always equals the Euler characteristic of
/// the host's clique complex.
struct IndexReport {
  int dim = -1;
  std::vector<IndexEntry> entries;
  std::int64_t sum_i_plus = 0;
  std::int64_t sum_i_minus = 0;
  std::int64_t sum_twice_j = 0;
};

IndexReport index_report(const Graph& g, const VertexFunction& f);

struct CurvatureEstimate {
  int vertex = 0;
  int trials = 0;
  std::int64_t twice_j_sum = 0;  // exact tally over all trials
  std::map<std::int64_t, std::int64_t> center_chi_counts;

  double expectation() const {
    return trials > 0 ? 0.5 * double(twice_j_sum) / double(trials) : 0.0;
  }
};

/// Monte Carlo curvature at v: mean symmetric index over seeded random
/// injective colorings.  Trial t colors with seed + t, so single-vertex and
/// whole-graph runs under the same seed see identical colorings.  Throws
/// ClassificationError unless g is a manifold.
CurvatureEstimate curvature_expectation(const Graph& g, int v, int trials,
                                        std::uint64_t seed);

/// One estimate per vertex in vertex order, sharing each trial's coloring.
std::vector<CurvatureEstimate> curvature_profile(const Graph& g, int trials,
                                                 std::uint64_t seed);

enum class LaplacianMode { graph, beltrami };

struct ChladniSurface {
  LevelSet surface;         // {f = 0, g = 0} in the host clique complex
  LevelSet zero_set;        // H = {f = 0}
  VertexFunction pullback;  // arity 2: components (f, g)
  LaplacianMode mode = LaplacianMode::graph;
  int eigen_index = 0;
  double eigenvalue = 0.0;
};

/// Nodal surface of an eigenvector.  H = {f = 0}; psi = the eigen_index-th
/// eigenvector (eigenvalues ascending) of either the graph Laplacian of H's
/// realization or the Hodge operator of H's restricted chain complex; g
/// pulls psi back to host vertices by summing over the H cells containing
/// each vertex (vertices touching no H cell get the harmless value +1); the
/// result is the simultaneous level set {f = 0, g = 0}.  The dense
/// eigensolver is deterministic, so seed does not affect the output; it is
/// accepted for interface stability.  Throws EmptyLevelSetError when H is
/// empty, RegularValueViolation when some pullback value lands within tol of
/// zero, and LimitError when H is too large for a dense solve.
ChladniSurface chladni_surface(const Graph& host, const VertexFunction& f,
                               int eigen_index, std::uint64_t seed,
                               LaplacianMode mode = LaplacianMode::graph,
                               double tol = 1e-12);

}  // namespace sard
