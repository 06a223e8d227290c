#pragma once

// Dense bitset graph used by the recognition and clique code.  Vertices are
// local indices 0..n-1; subgraphs are represented as bit masks over the same
// row storage, so recursive algorithms never copy adjacency data.

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "sard/graph.hpp"

namespace sard::detail {

using Word = std::uint64_t;

struct Mask {
  // inline up to 256 vertices; recursion over small links never allocates
  boost::container::small_vector<Word, 4> bits;

  explicit Mask(int words = 0) : bits(words, 0) {}
  bool test(int i) const { return (bits[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { bits[i >> 6] |= Word(1) << (i & 63); }
  void reset(int i) { bits[i >> 6] &= ~(Word(1) << (i & 63)); }
  int count() const;
  bool any() const;
  bool operator==(const Mask& o) const { return bits == o.bits; }
};

class BitGraph {
 public:
  explicit BitGraph(const Graph& g);
  BitGraph(int n);  // no edges

  int n() const { return n_; }
  int words() const { return words_; }
  const Word* row(int v) const { return rows_.data() + std::size_t(v) * words_; }
  Word* row(int v) { return rows_.data() + std::size_t(v) * words_; }
  bool edge(int a, int b) const { return (row(a)[b >> 6] >> (b & 63)) & 1u; }
  void add_edge(int a, int b);

  Mask full_mask() const;
  /// Neighbourhood of v inside m.
  Mask link(int v, const Mask& m) const;
  int degree(int v, const Mask& m) const;

  /// Original vertex id for local index v.
  int label(int v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }
  void relabel(std::vector<int> labels) { labels_ = std::move(labels); }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<Word> rows_;
  std::vector<int> labels_;
};

int popcount_words(const Word* w, int words);
std::vector<int> mask_vertices(const Mask& m);
bool mask_connected(const BitGraph& g, const Mask& m);
/// Connected components of the complement graph restricted to m; the join
/// factors of the induced subgraph.
std::vector<Mask> complement_components(const BitGraph& g, const Mask& m);
/// True when the complement restricted to m is connected (no join split).
bool complement_connected(const BitGraph& g, const Mask& m);

/// Canonical certificate of the subgraph induced by m.  The certificate is
/// (n, upper-triangular adjacency bits) under a canonical labelling computed
/// by equitable refinement plus individualization.  Returns nullopt when the
/// search would exceed node_budget branch nodes.
std::optional<std::vector<Word>> canonical_certificate(const BitGraph& g,
                                                       const Mask& m,
                                                       long node_budget);

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted by local
/// index; the list itself is in deterministic order.
std::vector<std::vector<int>> maximal_cliques(const BitGraph& g);

/// BitGraph of the unit sphere of v, built straight from adjacency lists.
/// Equivalent to BitGraph(g.unit_sphere(v)) without the intermediate Graph.
BitGraph link_bitgraph(const Graph& g, int v);

}  // namespace sard::detail
