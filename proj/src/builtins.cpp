#include "sard/builtins.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "builtins_detail.hpp"
#include "sard/delta_set.hpp"
#include "sard/errors.hpp"

namespace sard {

namespace {

Builtin from_graph(std::string name, Graph g, int dim) {
  Builtin b;
  b.name = std::move(name);
  b.complex = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::whitney(g));
  b.graph = std::move(g);
  b.manifold_dim = dim;
  return b;
}

Builtin from_facets(std::string name, const std::vector<std::vector<int>>& rows,
                    int dim, bool skeleton_is_manifold) {
  Builtin b;
  b.name = std::move(name);
  auto c = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::generate(rows));
  b.complex = c;
  b.graph = skeleton_is_manifold ? c->skeleton() : realization_graph(*c);
  b.manifold_dim = dim;
  return b;
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(std::uint8_t(s[a]))) ++a;
  while (b > a && std::isspace(std::uint8_t(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// splits "f(inner)" into name and inner text; empty name for plain atoms
std::pair<std::string, std::string> split_call(const std::string& expr) {
  auto open = expr.find('(');
  if (open == std::string::npos) return {"", ""};
  if (expr.back() != ')')
    throw InvalidInput("unbalanced parentheses in '" + expr + "'");
  return {strip(expr.substr(0, open)),
          strip(expr.substr(open + 1, expr.size() - open - 2))};
}

int parse_int(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InvalidInput("expected an integer argument in '" + where + "'");
  }
  if (used != s.size())
    throw InvalidInput("expected an integer argument in '" + where + "'");
  return value;
}

// top-level comma of "a, b"; respects nesting
std::pair<std::string, std::string> split_pair(const std::string& s,
                                               const std::string& where) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == ',' && depth == 0)
      return {strip(s.substr(0, i)), strip(s.substr(i + 1))};
  }
  throw InvalidInput("expected two arguments in '" + where + "'");
}

}  // namespace

Graph torus_flat_graph(int n) {
  if (n < 4) throw InvalidInput("flat torus needs n >= 4");
  std::vector<int> verts;
  std::vector<std::pair<int, int>> edges;
  auto id = [n](int i, int j) {
    return ((i % n + n) % n) * n + ((j % n + n) % n);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      verts.push_back(id(i, j));
      edges.push_back({id(i, j), id(i + 1, j)});
      edges.push_back({id(i, j), id(i, j + 1)});
      edges.push_back({id(i, j), id(i + 1, j + 1)});
    }
  return Graph::from_edges(verts, edges);
}

std::vector<std::string> builtin_names() {
  return {"octahedron",        "cross_polytope(3)", "cross_polytope(4)",
          "cross_polytope(5)", "cycle(4)",          "cycle(7)",
          "rp3",               "poincare_sphere",   "torus2d",
          "klein_bottle",      "torus_flat(4)",     "torus_flat(6)"};
}

Builtin resolve_complex(const std::string& raw) {
  std::string expr = strip(raw);
  if (expr == "octahedron") return from_graph(expr, cross_polytope(2), 2);
  if (expr == "rp3") return from_facets(expr, detail::rp3_facets(), 3, false);
  if (expr == "poincare_sphere")
    return from_facets(expr, detail::poincare_facets(), 3, false);
  if (expr == "torus2d")
    return from_facets(expr, detail::torus2d_facets(), 2, true);
  if (expr == "klein_bottle")
    return from_facets(expr, detail::klein_facets(), 2, true);

  auto [name, inner] = split_call(expr);
  if (name == "cross_polytope") {
    int d = parse_int(inner, expr);
    if (d < -1 || d > 5)
      throw InvalidInput("cross_polytope dimension must lie in -1..5");
    return from_graph(expr, cross_polytope(d), d);
  }
  if (name == "cycle") {
    int n = parse_int(inner, expr);
    if (n < 4) throw InvalidInput("cycle needs n >= 4");
    return from_graph(expr, Graph::cycle(n), 1);
  }
  if (name == "torus_flat") {
    int n = parse_int(inner, expr);
    return from_graph(expr, torus_flat_graph(n), 2);
  }
  if (name == "bary") {
    Builtin in = resolve_complex(inner);
    return from_graph("bary(" + in.name + ")", realization_graph(*in.complex),
                      in.manifold_dim);
  }
  if (name == "product") {
    auto [left, right] = split_pair(inner, expr);
    Builtin a = resolve_complex(left);
    Builtin b = resolve_complex(right);
    DeltaSet ds = product_delta(*a.complex, *b.complex);
    return from_graph("product(" + a.name + "," + b.name + ")",
                      delta_graph_realization(ds),
                      a.manifold_dim + b.manifold_dim);
  }
  throw InvalidInput("unknown complex '" + expr + "'");
}

}  // namespace sard
