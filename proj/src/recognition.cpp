#include "sard/recognition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "bitgraph.hpp"
#include "recognition_detail.hpp"
#include "sard/errors.hpp"
#include "sard/parallel.hpp"

namespace sard {

namespace {

using detail::BitGraph;
using detail::Mask;
using detail::Word;

// ---------------------------------------------------------------------------
// memo, keyed by canonical certificate; shared across calls and threads

struct MemoEntry {
  // -3 unknown, -2 definite no, otherwise the dimension / truth value
  std::int8_t contractible = -3;
  std::int8_t sphere = -3;
  std::int8_t manifold = -3;
  std::int8_t mwb = -3;
  std::int8_t ball = -3;
};

struct CertHash {
  std::size_t operator()(const std::vector<Word>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Word w : v) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct MemoStore {
  std::unordered_map<std::vector<Word>, MemoEntry, CertHash> map;
  std::shared_mutex mutex;
};

MemoStore& memo_store() {
  static MemoStore* store = new MemoStore();
  return *store;
}

MemoEntry memo_get(const std::vector<Word>& key) {
  auto& store = memo_store();
  std::shared_lock lock(store.mutex);
  auto it = store.map.find(key);
  return it == store.map.end() ? MemoEntry{} : it->second;
}

template <class F>
void memo_update(const std::vector<Word>& key, std::size_t cap, F&& apply) {
  auto& store = memo_store();
  std::unique_lock lock(store.mutex);
  if (store.map.size() >= cap && !store.map.count(key))
    throw LimitError("recognition memo budget exhausted");
  apply(store.map[key]);
}

// ---------------------------------------------------------------------------

struct Tri {
  enum State : std::int8_t { No, Yes, Unknown } state;
  int dim;  // valid when state == Yes

  static Tri no() { return {No, 0}; }
  static Tri yes(int d) { return {Yes, d}; }
  static Tri unknown() { return {Unknown, 0}; }
};

// Recursive classifier over masked subgraphs of one BitGraph.  All
// judgements follow the inductive definitions; the "cheap" tier only uses
// structure that certifies an answer outright (single vertices, cones,
// paths, cycles, join factors, greedy collapses) and reports Unknown
// otherwise.  The expensive tier resolves Unknown by exhaustive search with
// memoization on canonical forms.
class Recognizer {
 public:
  Recognizer(const BitGraph& g, const RecognitionConfig& cfg)
      : g_(g), cfg_(cfg) {}

  // --- structure helpers ---

  int first_vertex(const Mask& m) const {
    for (int w = 0; w < int(m.bits.size()); ++w)
      if (m.bits[w]) return w * 64 + std::countr_zero(m.bits[w]);
    return -1;
  }

  int dominating_vertex(const Mask& m, int n) const {
    for (int w = 0; w < int(m.bits.size()); ++w) {
      Word x = m.bits[w];
      while (x) {
        int v = w * 64 + std::countr_zero(x);
        x &= x - 1;
        if (g_.degree(v, m) == n - 1) return v;
      }
    }
    return -1;
  }

  bool is_path(const Mask& m, int n) const {
    if (n == 1) return true;
    int ends = 0;
    for (int w = 0; w < int(m.bits.size()); ++w) {
      Word x = m.bits[w];
      while (x) {
        int v = w * 64 + std::countr_zero(x);
        x &= x - 1;
        int d = g_.degree(v, m);
        if (d == 0 || d > 2) return false;
        if (d == 1) ++ends;
      }
    }
    return ends == 2 && detail::mask_connected(g_, m);
  }

  bool is_cycle(const Mask& m, int n) const {
    if (n < 4) return false;
    for (int w = 0; w < int(m.bits.size()); ++w) {
      Word x = m.bits[w];
      while (x) {
        int v = w * 64 + std::countr_zero(x);
        x &= x - 1;
        if (g_.degree(v, m) != 2) return false;
      }
    }
    return detail::mask_connected(g_, m);
  }

  // vertices of m ordered by (degree in m, index); inline storage keeps the
  // hot recursion allocation free
  using VertexOrder = boost::container::small_vector<int, 96>;

  VertexOrder by_degree(const Mask& m) const {
    boost::container::small_vector<std::pair<int, int>, 96> keyed;
    for (int w = 0; w < int(m.bits.size()); ++w) {
      Word x = m.bits[w];
      while (x) {
        int v = w * 64 + std::countr_zero(x);
        x &= x - 1;
        keyed.emplace_back(g_.degree(v, m), v);
      }
    }
    std::sort(keyed.begin(), keyed.end());
    VertexOrder out;
    for (const auto& [d, v] : keyed) {
      (void)d;
      out.push_back(v);
    }
    return out;
  }

  void check_depth(int depth) const {
    if (depth > cfg_.max_depth)
      throw LimitError("recognition recursion depth exceeded");
  }

  // --- contractibility ---

  // cheap tier; Yes answers are certified, No answers are definitional
  Tri contractible_cheap(const Mask& m, int depth,
                         std::vector<int>* witness = nullptr) {
    check_depth(depth);
    const int n = m.count();
    if (n == 0) return Tri::no();
    if (n == 1) {
      if (witness) witness->push_back(g_.label(first_vertex(m)));
      return Tri::yes(1);
    }
    if (!detail::mask_connected(g_, m)) return Tri::no();
    int apex = dominating_vertex(m, n);
    if (apex >= 0) {
      if (witness) cone_witness(m, apex, witness);
      return Tri::yes(1);
    }
    if (is_path(m, n)) {
      if (witness) path_witness(m, witness);
      return Tri::yes(1);
    }
    return greedy_collapse(m, depth, witness) ? Tri::yes(1) : Tri::unknown();
  }

  // removal order for a cone: peel non-apex vertices, apex last
  void cone_witness(const Mask& m, int apex, std::vector<int>* witness) {
    for (int v : detail::mask_vertices(m))
      if (v != apex) witness->push_back(g_.label(v));
    witness->push_back(g_.label(apex));
  }

  // removal order for a path: repeatedly drop an end vertex
  void path_witness(Mask m, std::vector<int>* witness) {
    int n = m.count();
    while (n > 1) {
      for (int v : detail::mask_vertices(m)) {
        if (g_.degree(v, m) == 1) {
          witness->push_back(g_.label(v));
          m.reset(v);
          --n;
          break;
        }
      }
    }
    witness->push_back(g_.label(first_vertex(m)));
  }

  // Removes one vertex with a cheaply contractible unit sphere at a time.
  // Success certifies contractibility; failure proves nothing.  The witness
  // is only appended to on success.
  bool greedy_collapse(Mask m, int depth, std::vector<int>* witness) {
    std::vector<int> order;
    std::vector<int>* out = witness ? &order : nullptr;
    bool ok = greedy_collapse_into(std::move(m), depth, out);
    if (ok && witness)
      witness->insert(witness->end(), order.begin(), order.end());
    return ok;
  }

  bool greedy_collapse_into(Mask m, int depth, std::vector<int>* out) {
    int n = m.count();
    while (n > 1) {
      int apex = dominating_vertex(m, n);
      if (apex >= 0) {
        if (out) cone_witness(m, apex, out);
        return true;
      }
      if (is_path(m, n)) {
        if (out) path_witness(m, out);
        return true;
      }
      bool removed = false;
      for (int v : by_degree(m)) {
        Mask link = g_.link(v, m);
        if (contractible_cheap(link, depth + 1).state == Tri::Yes) {
          if (out) out->push_back(g_.label(v));
          m.reset(v);
          --n;
          if (!detail::mask_connected(g_, m)) return false;
          removed = true;
          break;
        }
      }
      if (!removed) return false;
    }
    if (out) out->push_back(g_.label(first_vertex(m)));
    return true;
  }

  // exhaustive, memoized; definitive up to resource limits
  bool contractible_full(const Mask& m, int depth) {
    check_depth(depth);
    const int n = m.count();
    if (n == 0) return false;
    if (n == 1) return true;
    if (!detail::mask_connected(g_, m)) return false;
    if (dominating_vertex(m, n) >= 0) return true;
    if (is_path(m, n)) return true;

    auto key = detail::canonical_certificate(g_, m, cfg_.canon_node_budget);
    if (key) {
      MemoEntry e = memo_get(*key);
      if (e.contractible != -3) return e.contractible == 1;
    }
    bool result = false;
    if (greedy_collapse(m, depth, nullptr)) {
      result = true;
    } else {
      for (int v : by_degree(m)) {
        Mask link = g_.link(v, m);
        if (!contractible_full(link, depth + 1)) continue;
        Mask rest = m;
        rest.reset(v);
        if (contractible_full(rest, depth + 1)) {
          result = true;
          break;
        }
      }
    }
    if (key)
      memo_update(*key, cfg_.max_memo_entries, [&](MemoEntry& e) {
        e.contractible = result ? 1 : -2;
      });
    return result;
  }

  bool contractible(const Mask& m, int depth, std::vector<int>* witness) {
    Tri t = contractible_cheap(m, depth, witness);
    if (t.state == Tri::Yes) return true;
    if (t.state == Tri::No) return false;
    if (witness) witness->clear();
    bool ok = contractible_full(m, depth);
    if (ok && witness) replay_witness(m, depth, witness);
    return ok;
  }

  // reconstructs a removal order after contractible_full succeeded
  void replay_witness(Mask m, int depth, std::vector<int>* witness) {
    int n = m.count();
    while (n > 1) {
      if (greedy_collapse(m, depth, witness)) return;
      for (int v : by_degree(m)) {
        Mask link = g_.link(v, m);
        if (!contractible_full(link, depth + 1)) continue;
        Mask rest = m;
        rest.reset(v);
        if (contractible_full(rest, depth + 1)) {
          witness->push_back(g_.label(v));
          m = rest;
          --n;
          break;
        }
      }
    }
    if (n == 1) witness->push_back(g_.label(first_vertex(m)));
  }

  // --- spheres ---

  Tri sphere_cheap(const Mask& m, int depth) {
    check_depth(depth);
    const int n = m.count();
    if (n == 0) return Tri::yes(-1);
    if (n == 1) return Tri::no();
    if (n == 2) {
      int a = first_vertex(m);
      Mask link = g_.link(a, m);
      return link.any() ? Tri::no() : Tri::yes(0);
    }
    if (is_cycle(m, n)) return Tri::yes(1);

    // join decomposition: a join of spheres is a sphere with dims adding
    if (!detail::complement_connected(g_, m)) {
      auto comps = detail::complement_components(g_, m);
      int dim = int(comps.size()) - 1;
      bool all = true;
      for (const auto& c : comps) {
        Tri t = sphere_cheap(c, depth + 1);
        if (t.state != Tri::Yes) {
          all = false;
          break;
        }
        dim += t.dim;
      }
      if (all) return Tri::yes(dim);
      return Tri::unknown();
    }

    Tri md = manifold_cheap(m, depth);
    if (md.state == Tri::No) return Tri::no();
    if (md.state == Tri::Unknown) return Tri::unknown();

    bool all_no = true;
    for (int v : by_degree(m)) {
      Mask rest = m;
      rest.reset(v);
      Tri c = contractible_cheap(rest, depth + 1);
      if (c.state == Tri::Yes) return Tri::yes(md.dim);
      if (c.state != Tri::No) all_no = false;
    }
    return all_no ? Tri::no() : Tri::unknown();
  }

  Tri manifold_cheap(const Mask& m, int depth) {
    check_depth(depth);
    if (!m.any()) return Tri::no();
    int dim = -9;
    for (int w = 0; w < int(m.bits.size()); ++w) {
      Word x = m.bits[w];
      while (x) {
        int v = w * 64 + std::countr_zero(x);
        x &= x - 1;
        Tri t = sphere_cheap(g_.link(v, m), depth + 1);
        if (t.state == Tri::No) return Tri::no();
        if (t.state == Tri::Unknown) return Tri::unknown();
        if (dim == -9)
          dim = t.dim;
        else if (dim != t.dim)
          return Tri::no();
      }
    }
    return Tri::yes(dim + 1);
  }

  std::optional<int> sphere_full(const Mask& m, int depth) {
    check_depth(depth);
    Tri t = sphere_cheap(m, depth);
    if (t.state == Tri::Yes) return t.dim;
    if (t.state == Tri::No) return std::nullopt;

    auto key = detail::canonical_certificate(g_, m, cfg_.canon_node_budget);
    if (key) {
      MemoEntry e = memo_get(*key);
      if (e.sphere != -3)
        return e.sphere == -2 ? std::nullopt : std::optional<int>(e.sphere);
    }
    std::optional<int> result;
    auto md = manifold_full(m, depth);
    if (md) {
      for (int v : by_degree(m)) {
        Mask rest = m;
        rest.reset(v);
        if (contractible_full(rest, depth + 1)) {
          result = md;
          break;
        }
      }
    }
    if (key)
      memo_update(*key, cfg_.max_memo_entries, [&](MemoEntry& e) {
        e.sphere = result ? std::int8_t(*result) : std::int8_t(-2);
      });
    return result;
  }

  std::optional<int> manifold_full(const Mask& m, int depth) {
    check_depth(depth);
    Tri t = manifold_cheap(m, depth);
    if (t.state == Tri::Yes) return t.dim;
    if (t.state == Tri::No) return std::nullopt;

    auto key = detail::canonical_certificate(g_, m, cfg_.canon_node_budget);
    if (key) {
      MemoEntry e = memo_get(*key);
      if (e.manifold != -3)
        return e.manifold == -2 ? std::nullopt : std::optional<int>(e.manifold);
    }
    std::optional<int> result;
    int dim = -9;
    bool ok = true;
    for (int v : detail::mask_vertices(m)) {
      auto s = sphere_full(g_.link(v, m), depth + 1);
      if (!s || (dim != -9 && dim != *s)) {
        ok = false;
        break;
      }
      dim = *s;
    }
    if (ok) result = dim + 1;
    if (key)
      memo_update(*key, cfg_.max_memo_entries, [&](MemoEntry& e) {
        e.manifold = result ? std::int8_t(*result) : std::int8_t(-2);
      });
    return result;
  }

  // --- balls and manifolds with boundary ---

  Tri ball_cheap(const Mask& m, int depth) {
    check_depth(depth);
    const int n = m.count();
    if (n == 0) return Tri::no();
    if (n == 1) return Tri::yes(0);
    if (is_path(m, n)) return Tri::yes(1);
    return Tri::unknown();
  }

  std::optional<int> ball_full(const Mask& m, int depth) {
    check_depth(depth);
    Tri t = ball_cheap(m, depth);
    if (t.state == Tri::Yes) return t.dim;
    if (t.state == Tri::No) return std::nullopt;

    auto key = detail::canonical_certificate(g_, m, cfg_.canon_node_budget);
    if (key) {
      MemoEntry e = memo_get(*key);
      if (e.ball != -3)
        return e.ball == -2 ? std::nullopt : std::optional<int>(e.ball);
    }
    std::optional<int> result;
    Mask boundary(g_.words());
    auto d = mwb_full(m, depth, &boundary);
    if (d && contractible_full(m, depth)) {
      auto bs = sphere_full(boundary, depth + 1);
      if (bs && *bs == *d - 1) result = d;
    }
    if (key)
      memo_update(*key, cfg_.max_memo_entries, [&](MemoEntry& e) {
        e.ball = result ? std::int8_t(*result) : std::int8_t(-2);
      });
    return result;
  }

  std::optional<int> mwb_full(const Mask& m, int depth, Mask* boundary_out) {
    check_depth(depth);
    if (!m.any()) return std::nullopt;

    auto key = detail::canonical_certificate(g_, m, cfg_.canon_node_budget);
    if (key && !boundary_out) {
      MemoEntry e = memo_get(*key);
      if (e.mwb != -3)
        return e.mwb == -2 ? std::nullopt : std::optional<int>(e.mwb);
    }
    std::optional<int> result;
    Mask boundary(g_.words());
    int dim = -9;
    bool ok = true;
    for (int v : detail::mask_vertices(m)) {
      Mask link = g_.link(v, m);
      int link_dim;
      auto s = sphere_full(link, depth + 1);
      if (s) {
        link_dim = *s;
      } else {
        auto b = ball_full(link, depth + 1);
        if (!b) {
          ok = false;
          break;
        }
        link_dim = *b;
        boundary.set(v);
      }
      if (dim == -9)
        dim = link_dim;
      else if (dim != link_dim) {
        ok = false;
        break;
      }
    }
    if (ok) result = dim + 1;
    if (key)
      memo_update(*key, cfg_.max_memo_entries, [&](MemoEntry& e) {
        e.mwb = result ? std::int8_t(*result) : std::int8_t(-2);
      });
    if (result && boundary_out) *boundary_out = boundary;
    return result;
  }

 private:
  const BitGraph& g_;
  const RecognitionConfig& cfg_;
};

void check_size(const Graph& g, const RecognitionConfig& cfg) {
  if (g.num_vertices() > cfg.max_graph_vertices)
    throw LimitError("graph exceeds the configured recognition size limit");
}

// Whole-graph algorithms hold a dense n x n adjacency; cap n so the matrix
// stays modest.  Per-link algorithms (manifold scans) have no such cap.
constexpr int kDenseVertexLimit = 16384;

void check_dense(const Graph& g) {
  if (g.num_vertices() > kDenseVertexLimit)
    throw LimitError("graph too large for whole-graph recognition");
}

// Large-graph manifold scan: classifies each unit sphere independently so
// the full graph never needs dense adjacency.
template <class LinkFn>
std::optional<int> common_link_dim(const Graph& g, LinkFn&& classify_link) {
  const auto& verts = g.vertices();
  std::vector<std::int8_t> dims(verts.size());
  parallel_for(verts.size(), [&](std::size_t i) {
    dims[i] = classify_link(verts[i]);  // -2 = not recognized
  });
  int dim = -9;
  for (auto d : dims) {
    if (d == -2) return std::nullopt;
    if (dim == -9)
      dim = d;
    else if (dim != d)
      return std::nullopt;
  }
  return dim + 1;
}

}  // namespace

bool is_contractible(const Graph& g, std::vector<int>* witness,
                     const RecognitionConfig& cfg) {
  if (witness) witness->clear();
  if (g.is_empty()) return false;
  check_size(g, cfg);
  check_dense(g);
  BitGraph bg(g);
  Recognizer rec(bg, cfg);
  return rec.contractible(bg.full_mask(), 0, witness);
}

std::optional<int> is_manifold(const Graph& g, const RecognitionConfig& cfg) {
  if (g.is_empty()) return std::nullopt;
  check_size(g, cfg);
  return common_link_dim(g, [&](int v) -> std::int8_t {
    BitGraph link = detail::link_bitgraph(g, v);
    Recognizer rec(link, cfg);
    auto s = rec.sphere_full(link.full_mask(), 0);
    return s ? std::int8_t(*s) : std::int8_t(-2);
  });
}

std::optional<int> is_sphere(const Graph& g, const RecognitionConfig& cfg) {
  if (g.is_empty()) return -1;
  check_size(g, cfg);
  check_dense(g);
  auto md = is_manifold(g, cfg);
  if (!md) return std::nullopt;
  BitGraph bg(g);
  Recognizer rec(bg, cfg);
  Mask full = bg.full_mask();
  // cheap pass over all deletions first, then the exhaustive one
  for (int i = 0; i < g.num_vertices(); ++i) {
    Mask rest = full;
    rest.reset(i);
    if (rec.contractible_cheap(rest, 0).state == Tri::Yes) return md;
  }
  for (int i = 0; i < g.num_vertices(); ++i) {
    Mask rest = full;
    rest.reset(i);
    if (rec.contractible_full(rest, 0)) return md;
  }
  return std::nullopt;
}

std::optional<ManifoldWithBoundary> is_manifold_with_boundary(
    const Graph& g, const RecognitionConfig& cfg) {
  if (g.is_empty()) return std::nullopt;
  check_size(g, cfg);

  const auto& verts = g.vertices();
  // per vertex: link dim, or -2 when unrecognized; flag marks ball links
  std::vector<std::int8_t> dims(verts.size());
  std::vector<std::int8_t> on_boundary(verts.size(), 0);
  parallel_for(verts.size(), [&](std::size_t i) {
    BitGraph link = detail::link_bitgraph(g, verts[i]);
    Recognizer rec(link, cfg);
    Mask full = link.full_mask();
    auto s = rec.sphere_full(full, 0);
    if (s) {
      dims[i] = std::int8_t(*s);
      return;
    }
    auto b = rec.ball_full(full, 0);
    if (b) {
      dims[i] = std::int8_t(*b);
      on_boundary[i] = 1;
    } else {
      dims[i] = -2;
    }
  });

  int dim = -9;
  for (auto d : dims) {
    if (d == -2) return std::nullopt;
    if (dim == -9)
      dim = d;
    else if (dim != d)
      return std::nullopt;
  }
  ManifoldWithBoundary out;
  out.dim = dim + 1;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (on_boundary[i]) out.boundary_vertices.push_back(verts[i]);
  out.boundary = g.induced(out.boundary_vertices);
  return out;
}

std::optional<int> is_ball(const Graph& g, const RecognitionConfig& cfg) {
  if (g.is_empty()) return std::nullopt;
  check_size(g, cfg);
  check_dense(g);
  BitGraph bg(g);
  Recognizer rec(bg, cfg);
  return rec.ball_full(bg.full_mask(), 0);
}

Classification classify(const Graph& g, const RecognitionConfig& cfg) {
  Classification c;
  if (g.is_empty()) {
    c.sphere_dim = -1;
    return c;
  }
  c.contractible = is_contractible(g, nullptr, cfg);
  c.manifold_dim = is_manifold(g, cfg);
  if (c.manifold_dim) c.sphere_dim = is_sphere(g, cfg);
  if (auto mwb = is_manifold_with_boundary(g, cfg))
    c.boundary_manifold_dim = mwb->dim;
  return c;
}

void clear_recognition_cache() {
  auto& store = memo_store();
  std::unique_lock lock(store.mutex);
  store.map.clear();
}

}  // namespace sard

namespace sard::detail {

std::optional<int> bitgraph_sphere_dim(const BitGraph& g,
                                       const RecognitionConfig& cfg) {
  Recognizer rec(g, cfg);
  return rec.sphere_full(g.full_mask(), 0);
}

std::optional<int> bitgraph_ball_dim(const BitGraph& g,
                                     const RecognitionConfig& cfg) {
  Recognizer rec(g, cfg);
  return rec.ball_full(g.full_mask(), 0);
}

}  // namespace sard::detail
