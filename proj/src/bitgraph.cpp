#include "bitgraph.hpp"

#include <algorithm>
#include <bit>

#include "sard/errors.hpp"

namespace sard::detail {

int popcount_words(const Word* w, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
  return c;
}

int Mask::count() const {
  int c = 0;
  for (Word w : bits) c += std::popcount(w);
  return c;
}

bool Mask::any() const {
  for (Word w : bits)
    if (w) return true;
  return false;
}

BitGraph::BitGraph(int n) : n_(n), words_((n + 63) / 64) {
  rows_.assign(std::size_t(n_) * words_, 0);
  labels_.resize(n_);
  for (int i = 0; i < n_; ++i) labels_[i] = i;
}

BitGraph::BitGraph(const Graph& g) : BitGraph(g.num_vertices()) {
  labels_ = g.vertices();
  for (const auto& e : g.edges()) {
    int a = int(std::lower_bound(labels_.begin(), labels_.end(), e.first) -
                labels_.begin());
    int b = int(std::lower_bound(labels_.begin(), labels_.end(), e.second) -
                labels_.begin());
    add_edge(a, b);
  }
}

void BitGraph::add_edge(int a, int b) {
  row(a)[b >> 6] |= Word(1) << (b & 63);
  row(b)[a >> 6] |= Word(1) << (a & 63);
}

Mask BitGraph::full_mask() const {
  Mask m(words_);
  for (int i = 0; i < n_; ++i) m.set(i);
  return m;
}

Mask BitGraph::link(int v, const Mask& m) const {
  Mask out(words_);
  const Word* r = row(v);
  for (int i = 0; i < words_; ++i) out.bits[i] = r[i] & m.bits[i];
  return out;
}

int BitGraph::degree(int v, const Mask& m) const {
  const Word* r = row(v);
  int c = 0;
  for (int i = 0; i < words_; ++i) c += std::popcount(r[i] & m.bits[i]);
  return c;
}

std::vector<int> mask_vertices(const Mask& m) {
  std::vector<int> out;
  for (int w = 0; w < int(m.bits.size()); ++w) {
    Word x = m.bits[w];
    while (x) {
      int b = std::countr_zero(x);
      out.push_back(w * 64 + b);
      x &= x - 1;
    }
  }
  return out;
}

bool mask_connected(const BitGraph& g, const Mask& m) {
  int total = m.count();
  if (total == 0) return false;
  int start = -1;
  for (int w = 0; w < int(m.bits.size()); ++w)
    if (m.bits[w]) {
      start = w * 64 + std::countr_zero(m.bits[w]);
      break;
    }
  Mask seen(int(m.bits.size()));
  seen.set(start);
  boost::container::small_vector<int, 128> stack{start};
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const Word* r = g.row(v);
    for (int w = 0; w < int(m.bits.size()); ++w) {
      Word x = r[w] & m.bits[w] & ~seen.bits[w];
      while (x) {
        int b = std::countr_zero(x);
        x &= x - 1;
        int u = w * 64 + b;
        seen.set(u);
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == total;
}

bool complement_connected(const BitGraph& g, const Mask& m) {
  int total = m.count();
  if (total == 0) return true;
  int start = -1;
  for (int w = 0; w < int(m.bits.size()) && start < 0; ++w)
    if (m.bits[w]) start = w * 64 + std::countr_zero(m.bits[w]);
  Mask seen(int(m.bits.size()));
  seen.set(start);
  boost::container::small_vector<int, 128> stack{start};
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const Word* r = g.row(v);
    for (int w = 0; w < int(m.bits.size()); ++w) {
      Word x = ~r[w] & m.bits[w] & ~seen.bits[w];
      while (x) {
        int b = std::countr_zero(x);
        x &= x - 1;
        int u = w * 64 + b;
        seen.set(u);
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == total;
}

std::vector<Mask> complement_components(const BitGraph& g, const Mask& m) {
  std::vector<Mask> comps;
  Mask remaining = m;
  const int words = int(m.bits.size());
  while (remaining.any()) {
    int start = -1;
    for (int w = 0; w < words && start < 0; ++w)
      if (remaining.bits[w]) start = w * 64 + std::countr_zero(remaining.bits[w]);
    Mask comp(words);
    comp.set(start);
    remaining.reset(start);
    boost::container::small_vector<int, 128> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      const Word* r = g.row(v);
      for (int w = 0; w < words; ++w) {
        // complement neighbours of v still remaining
        Word x = ~r[w] & remaining.bits[w];
        while (x) {
          int b = std::countr_zero(x);
          x &= x - 1;
          int u = w * 64 + b;
          comp.set(u);
          remaining.reset(u);
          stack.push_back(u);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

// Equitable refinement of a colouring restricted to verts.  Colours are
// non-negative and ordered; refinement is deterministic.
void refine(const BitGraph& g, const std::vector<int>& verts,
            std::vector<int>& color) {
  const int n = int(verts.size());
  std::vector<std::vector<int>> sig(n);
  std::vector<int> order(n);
  for (;;) {
    // signature: own colour followed by sorted multiset of neighbour colours
    for (int i = 0; i < n; ++i) {
      sig[i].clear();
      sig[i].push_back(color[i]);
      for (int j = 0; j < n; ++j)
        if (g.edge(verts[i], verts[j])) sig[i].push_back(color[j]);
      std::sort(sig[i].begin() + 1, sig[i].end());
    }
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return sig[a] < sig[b];
    });
    std::vector<int> next(n);
    int c = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++c;
      next[order[k]] = c;
    }
    if (next == color) return;
    color = std::move(next);
  }
}

struct CanonSearch {
  const BitGraph& g;
  const std::vector<int>& verts;
  long budget;
  std::vector<Word> best;
  bool have_best = false;

  // colours are a partition; a labelling is complete when all colours are
  // distinct, in which case vertex with colour c goes to position c
  void run(std::vector<int> color) {
    if (budget-- < 0) throw LimitError("canonical labelling budget exhausted");
    const int n = int(verts.size());
    refine(g, verts, color);

    int target = -1, target_size = n + 1;
    std::vector<int> count(n, 0);
    for (int c : color) ++count[c];
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = c;
        target_size = count[c];
        break;  // first (smallest colour) non-singleton class
      }

    if (target < 0) {
      // discrete: emit certificate
      std::vector<int> pos(n);
      for (int i = 0; i < n; ++i) pos[color[i]] = i;
      std::vector<Word> cert;
      cert.push_back(Word(n));
      Word acc = 0;
      int nb = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          acc = (acc << 1) |
                Word(g.edge(verts[pos[a]], verts[pos[b]]) ? 1 : 0);
          if (++nb == 64) {
            cert.push_back(acc);
            acc = 0;
            nb = 0;
          }
        }
      if (nb) cert.push_back(acc << (64 - nb));
      if (!have_best || cert < best) {
        best = std::move(cert);
        have_best = true;
      }
      return;
    }

    (void)target_size;
    for (int i = 0; i < n; ++i) {
      if (color[i] != target) continue;
      std::vector<int> c2(color);
      for (int j = 0; j < n; ++j)
        if (c2[j] >= target && j != i) ++c2[j];
      run(std::move(c2));
    }
  }
};

}  // namespace

std::optional<std::vector<Word>> canonical_certificate(const BitGraph& g,
                                                       const Mask& m,
                                                       long node_budget) {
  std::vector<int> verts = mask_vertices(m);
  const int n = int(verts.size());
  if (n == 0) return std::vector<Word>{0};

  // complete and edgeless subgraphs have a trivial certificate; this also
  // avoids factorial individualization on them
  long edge_count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.edge(verts[i], verts[j])) ++edge_count;
  if (edge_count == 0 || edge_count == long(n) * (n - 1) / 2) {
    std::vector<Word> cert;
    cert.push_back(Word(n));
    int bits = n * (n - 1) / 2;
    int words = (bits + 63) / 64;
    Word fill = edge_count ? ~Word(0) : 0;
    for (int w = 0; w < words; ++w) cert.push_back(fill);
    if (edge_count && bits % 64)
      cert.back() = ~Word(0) << (64 - bits % 64);
    return cert;
  }

  CanonSearch search{g, verts, node_budget, {}, false};
  try {
    search.run(std::vector<int>(n, 0));
  } catch (const LimitError&) {
    return std::nullopt;
  }
  return search.best;
}

namespace {

void bron_kerbosch(const BitGraph& g, Mask r, Mask p, Mask x,
                   std::vector<int>& stack,
                   std::vector<std::vector<int>>& out) {
  if (!p.any() && !x.any()) {
    out.push_back(stack);
    return;
  }
  // pivot: vertex of p|x with most neighbours in p
  int pivot = -1, best = -1;
  const int words = int(p.bits.size());
  for (int w = 0; w < words; ++w) {
    Word cand = p.bits[w] | x.bits[w];
    while (cand) {
      int b = std::countr_zero(cand);
      cand &= cand - 1;
      int v = w * 64 + b;
      int d = 0;
      const Word* row = g.row(v);
      for (int k = 0; k < words; ++k) d += std::popcount(row[k] & p.bits[k]);
      if (d > best) {
        best = d;
        pivot = v;
      }
    }
  }
  Mask ext = p;
  if (pivot >= 0) {
    const Word* row = g.row(pivot);
    for (int k = 0; k < words; ++k) ext.bits[k] &= ~row[k];
  }
  for (int w = 0; w < words; ++w) {
    Word cand = ext.bits[w];
    while (cand) {
      int b = std::countr_zero(cand);
      cand &= cand - 1;
      int v = w * 64 + b;
      Mask r2 = r;
      r2.set(v);
      Mask p2(words), x2(words);
      const Word* row = g.row(v);
      for (int k = 0; k < words; ++k) {
        p2.bits[k] = p.bits[k] & row[k];
        x2.bits[k] = x.bits[k] & row[k];
      }
      stack.push_back(v);
      bron_kerbosch(g, r2, p2, x2, stack, out);
      stack.pop_back();
      p.reset(v);
      x.set(v);
    }
  }
  (void)r;
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const BitGraph& g) {
  std::vector<std::vector<int>> out;
  const int words = g.words();
  Mask r(words), p = g.full_mask(), x(words);
  std::vector<int> stack;
  bron_kerbosch(g, r, p, x, stack, out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sard::detail

namespace sard {

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
    return false;
  detail::BitGraph ga(a), gb(b);
  const long budget = 2'000'000;
  auto ca = detail::canonical_certificate(ga, ga.full_mask(), budget);
  auto cb = detail::canonical_certificate(gb, gb.full_mask(), budget);
  if (!ca || !cb)
    throw LimitError("canonical labelling budget exhausted in isomorphism test");
  return *ca == *cb;
}

}  // namespace sard

namespace sard::detail {

BitGraph link_bitgraph(const Graph& g, int v) {
  const std::vector<int>& nb = g.neighbors(v);
  const int n = int(nb.size());
  BitGraph out(n);
  for (int i = 0; i < n; ++i) {
    // sorted-list intersection of N(nb[i]) with nb[i+1..]
    const std::vector<int>& ni = g.neighbors(nb[i]);
    std::size_t a = 0;
    int j = i + 1;
    while (a < ni.size() && j < n) {
      if (ni[a] < nb[j])
        ++a;
      else if (ni[a] > nb[j])
        ++j;
      else {
        out.add_edge(i, j);
        ++a;
        ++j;
      }
    }
  }
  out.relabel(nb);
  return out;
}

}  // namespace sard::detail
