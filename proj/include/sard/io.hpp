#pragma once

#include <cstdint>
#include <iosfwd>

#include "sard/graph.hpp"
#include "sard/levelset.hpp"
#include "sard/simplicial_complex.hpp"

namespace sard {

/// Facet file: {"facets": [[0,1,2], ...]}.  Reading generates the closure.
SimplicialComplex read_complex_json(std::istream& in);
void write_complex_json(const SimplicialComplex& c, std::ostream& out);

/// Vertex function file: {"k": 2, "values": {"0": [1.0, -1.0], ...}}.
VertexFunction read_function_json(std::istream& in);
void write_function_json(const VertexFunction& f, std::ostream& out);

/// Lossless graph round trip: {"vertices": [...], "edges": [[a,b], ...]},
/// both sorted.
Graph read_graph_json(std::istream& in);
void write_graph_json(const Graph& g, std::ostream& out);

/// Undirected dot file, one node line per vertex.
void write_dot(const Graph& g, std::ostream& out);

/// OFF mesh: one seeded force-directed 3d coordinate per vertex, faces from
/// the graph's triangles.  Deterministic for a fixed seed.
void write_off_layout(const Graph& g, std::uint64_t seed, std::ostream& out);

}  // namespace sard
