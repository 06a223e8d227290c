#include "sard/morse.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "sard/delta_set.hpp"
#include "sard/errors.hpp"
#include "sard/parallel.hpp"
#include "sard/recognition.hpp"
#include "sard/simplicial_complex.hpp"

namespace sard {

namespace {

// neighbors of v split by f; throws on ties
struct SphereSplit {
  std::vector<int> below, above;
};

SphereSplit split_sphere(const Graph& g, const VertexFunction& f, int v) {
  if (f.k != 1) throw InvalidInput("index computations need arity 1");
  double fv = f.at(v, 0);
  SphereSplit out;
  std::vector<int> ties;
  for (int w : g.neighbors(v)) {
    double fw = f.at(w, 0);
    if (fw == fv)
      ties.push_back(w);
    else if (fw < fv)
      out.below.push_back(w);
    else
      out.above.push_back(w);
  }
  if (!ties.empty()) {
    std::ostringstream msg;
    msg << "function ties vertex " << v << " with " << ties.size()
        << " neighbour(s)";
    throw LocalInjectivityError(msg.str(), std::move(ties));
  }
  return out;
}

std::int64_t clique_euler(const Graph& g) {
  return SimplicialComplex::whitney(g).f_vector().euler();
}

std::int64_t twice_j_from_chi(std::int64_t chi, int dim) {
  return dim % 2 == 0 ? 2 - chi : -chi;
}

}  // namespace

std::int64_t poincare_hopf_index(const Graph& g, const VertexFunction& f,
                                 int v) {
  SphereSplit s = split_sphere(g, f, v);
  return 1 - clique_euler(g.induced(s.below));
}

LevelSet center_manifold(const Graph& g, const VertexFunction& f, int v) {
  split_sphere(g, f, v);  // surface ties as LocalInjectivityError
  auto sphere = std::make_shared<SimplicialComplex>(
      SimplicialComplex::whitney(g.unit_sphere(v)));
  return level_set_real(std::move(sphere), f, f.at(v, 0));
}

std::int64_t center_euler(const LevelSet& center) {
  return clique_euler(center.realization());
}

std::int64_t twice_symmetric_index(const Graph& g, const VertexFunction& f,
                                   int v, int dim) {
  return twice_j_from_chi(center_euler(center_manifold(g, f, v)), dim);
}

IndexReport index_report(const Graph& g, const VertexFunction& f) {
  IndexReport report;
  report.dim = is_manifold(g).value_or(-1);
  for (int v : g.vertices()) {
    SphereSplit s = split_sphere(g, f, v);
    IndexEntry e;
    e.vertex = v;
    e.i_plus = 1 - clique_euler(g.induced(s.below));
    e.i_minus = 1 - clique_euler(g.induced(s.above));
    e.center_chi = center_euler(center_manifold(g, f, v));
    e.twice_j = report.dim >= 0 ? twice_j_from_chi(e.center_chi, report.dim)
                                : e.i_plus + e.i_minus;
    report.sum_i_plus += e.i_plus;
    report.sum_i_minus += e.i_minus;
    report.sum_twice_j += e.twice_j;
    report.entries.push_back(e);
  }
  return report;
}

namespace {

// center-manifold chi per vertex for one coloring, links prebuilt
std::vector<std::int64_t> center_chis(
    const std::vector<int>& verts,
    const std::vector<std::shared_ptr<const SimplicialComplex>>& links,
    const VertexFunction& f) {
  std::vector<std::int64_t> chis(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    chis[i] = center_euler(level_set_real(links[i], f, f.at(verts[i], 0)));
  return chis;
}

std::vector<std::shared_ptr<const SimplicialComplex>> link_complexes(
    const Graph& g) {
  const auto& verts = g.vertices();
  std::vector<std::shared_ptr<const SimplicialComplex>> links(verts.size());
  parallel_for(verts.size(), [&](std::size_t i) {
    links[i] = std::make_shared<const SimplicialComplex>(
        SimplicialComplex::whitney(g.unit_sphere(verts[i])));
  });
  return links;
}

}  // namespace

std::vector<CurvatureEstimate> curvature_profile(const Graph& g, int trials,
                                                 std::uint64_t seed) {
  auto dim = is_manifold(g);
  if (!dim) throw ClassificationError("curvature needs a manifold host");
  if (trials < 1) throw InvalidInput("trial count must be positive");
  const auto& verts = g.vertices();
  auto links = link_complexes(g);

  // per-trial chi tables, merged in trial order for determinism
  std::vector<std::vector<std::int64_t>> table(trials);
  parallel_for(std::size_t(trials), [&](std::size_t t) {
    VertexFunction f = VertexFunction::random_injective(verts, seed + t);
    table[t] = center_chis(verts, links, f);
  });

  std::vector<CurvatureEstimate> out(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    out[i].vertex = verts[i];
    out[i].trials = trials;
  }
  for (int t = 0; t < trials; ++t)
    for (std::size_t i = 0; i < verts.size(); ++i) {
      std::int64_t chi = table[t][i];
      out[i].twice_j_sum += twice_j_from_chi(chi, *dim);
      ++out[i].center_chi_counts[chi];
    }
  return out;
}

CurvatureEstimate curvature_expectation(const Graph& g, int v, int trials,
                                        std::uint64_t seed) {
  auto dim = is_manifold(g);
  if (!dim) throw ClassificationError("curvature needs a manifold host");
  if (trials < 1) throw InvalidInput("trial count must be positive");
  if (!g.has_vertex(v)) throw InvalidInput("vertex not in graph");
  const auto& verts = g.vertices();
  auto link = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::whitney(g.unit_sphere(v)));

  std::vector<std::int64_t> chis(trials);
  parallel_for(std::size_t(trials), [&](std::size_t t) {
    VertexFunction f = VertexFunction::random_injective(verts, seed + t);
    chis[t] = center_euler(level_set_real(link, f, f.at(v, 0)));
  });

  CurvatureEstimate out;
  out.vertex = v;
  out.trials = trials;
  for (std::int64_t chi : chis) {
    out.twice_j_sum += twice_j_from_chi(chi, *dim);
    ++out.center_chi_counts[chi];
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kEigenCellLimit = 4096;  // dense solver cutoff

Eigen::MatrixXd graph_laplacian(const LevelSet& h) {
  const Graph& rz = h.realization();
  const std::size_t n = h.cells.size();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  // realization vertices are the sorted cell ids, matching h.cells order
  std::unordered_map<int, int> pos;
  pos.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pos.emplace(int(h.cells[i]), int(i));
  for (int u : rz.vertices())
    for (int w : rz.neighbors(u))
      if (u < w) {
        int i = pos.at(u), j = pos.at(w);
        lap(i, i) += 1;
        lap(j, j) += 1;
        lap(i, j) -= 1;
        lap(j, i) -= 1;
      }
  return lap;
}

Eigen::MatrixXd restricted_hodge(const LevelSet& h) {
  const SimplicialComplex& host = *h.host;
  DeltaSet ds = DeltaSet::from_complex(host);
  const std::size_t n = h.cells.size();
  std::unordered_map<int, int> pos;
  pos.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pos.emplace(int(h.cells[i]), int(i));

  std::vector<std::size_t> base(host.dimension() + 1, 0);
  for (int k = 1; k <= host.dimension(); ++k)
    base[k] = base[k - 1] + host.num_cells(k - 1);

  // boundary restricted to the open set; squares to zero because the set is
  // closed under taking cofaces
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t id = h.cells[j];
    int k = host.cell_dim(id);
    if (k == 0) continue;
    for (const auto& face : ds.faces(k, int(id - base[k]))) {
      auto it = pos.find(int(base[k - 1] + face.index));
      if (it != pos.end()) d(it->second, j) = double(face.sign);
    }
  }
  Eigen::MatrixXd dirac = d + d.transpose();
  return dirac * dirac;
}

}  // namespace

ChladniSurface chladni_surface(const Graph& host, const VertexFunction& f,
                               int eigen_index, std::uint64_t seed,
                               LaplacianMode mode, double tol) {
  (void)seed;  // the dense solve below is already deterministic
  auto hc = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::whitney(host));
  ChladniSurface out;
  out.mode = mode;
  out.eigen_index = eigen_index;
  out.zero_set = level_set_real(hc, f, 0.0);
  const LevelSet& h = out.zero_set;
  if (h.empty()) throw EmptyLevelSetError("the zero set of f is empty");
  const std::size_t n = h.cells.size();
  if (eigen_index < 0 || std::size_t(eigen_index) >= n)
    throw InvalidInput("eigenvector index out of range");
  if (n > kEigenCellLimit)
    throw LimitError("zero set too large for a dense eigensolve");

  Eigen::MatrixXd lap = mode == LaplacianMode::graph ? graph_laplacian(h)
                                                     : restricted_hodge(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success)
    throw Error("eigensolver failed to converge");
  Eigen::VectorXd psi = solver.eigenvectors().col(eigen_index);
  out.eigenvalue = solver.eigenvalues()(eigen_index);
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(psi(i)) > tol) {
      if (psi(i) < 0) psi = -psi;
      break;
    }

  // pull back to host vertices; untouched vertices get a fixed sign, which
  // is safe because every cell of the final level set lies inside h
  std::unordered_map<int, double> pulled;
  for (std::size_t i = 0; i < n; ++i)
    for (std::int32_t v : hc->cell_span(h.cells[i])) pulled[v] += psi(i);

  VertexFunction pair;
  pair.k = 2;
  std::vector<int> violating;
  for (int v : hc->vertex_ids()) {
    auto it = pulled.find(v);
    double gv = it == pulled.end() ? 1.0 : it->second;
    if (it != pulled.end() && std::abs(gv) < tol) violating.push_back(v);
    pair.values.emplace(v, std::vector<double>{f.at(v, 0), gv});
  }
  if (!violating.empty()) {
    std::ostringstream msg;
    msg << "eigenvector pullback vanishes at " << violating.size()
        << " vertex(es) within tolerance " << tol;
    throw RegularValueViolation(msg.str(), std::move(violating));
  }

  out.pullback = pair;
  out.surface = level_set_complex(hc, pair, {0.0, 0.0});
  return out;
}

}  // namespace sard
