#include "sard/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <unordered_map>

#include <json.hpp>

#include "sard/errors.hpp"
#include "sard/rng.hpp"

using nlohmann::json;

namespace sard {

namespace {

json parse(std::istream& in) {
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed json: ") + e.what());
  }
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw InvalidInput(std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

SimplicialComplex read_complex_json(std::istream& in) {
  json j = parse(in);
  if (!j.is_object() || !j.contains("facets"))
    throw InvalidInput("complex file needs a 'facets' array");
  std::vector<SimplicialComplex::Cell> facets;
  if (!j["facets"].is_array())
    throw InvalidInput("complex file needs a 'facets' array");
  for (const auto& f : j["facets"]) facets.push_back(int_array(f, "facet"));
  return SimplicialComplex::generate(facets);
}

void write_complex_json(const SimplicialComplex& c, std::ostream& out) {
  json j;
  j["facets"] = c.facets();
  out << j.dump(2) << '\n';
}

VertexFunction read_function_json(std::istream& in) {
  json j = parse(in);
  if (!j.is_object() || !j.contains("k") || !j.contains("values") ||
      !j["k"].is_number_integer() || !j["values"].is_object())
    throw InvalidInput("function file needs integer 'k' and object 'values'");
  VertexFunction f;
  f.k = j["k"].get<int>();
  if (f.k < 1) throw InvalidInput("function arity must be positive");
  for (const auto& [key, val] : j["values"].items()) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InvalidInput("value keys must be vertex ids, got '" + key + "'");
    }
    if (!val.is_array() || int(val.size()) != f.k)
      throw InvalidInput("each value must list k numbers");
    std::vector<double> nums;
    for (const auto& x : val) {
      if (!x.is_number()) throw InvalidInput("values must be numbers");
      nums.push_back(x.get<double>());
    }
    if (!f.values.emplace(v, std::move(nums)).second)
      throw InvalidInput("duplicate vertex id in function file");
  }
  return f;
}

void write_function_json(const VertexFunction& f, std::ostream& out) {
  json values = json::object();
  for (const auto& [v, nums] : f.values) values[std::to_string(v)] = nums;
  json j;
  j["k"] = f.k;
  j["values"] = values;
  out << j.dump(2) << '\n';
}

Graph read_graph_json(std::istream& in) {
  json j = parse(in);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw InvalidInput("graph file needs 'vertices' and 'edges' arrays");
  std::vector<int> verts = int_array(j["vertices"], "vertices");
  if (!j["edges"].is_array()) throw InvalidInput("edges must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    std::vector<int> pair = int_array(e, "edge");
    if (pair.size() != 2) throw InvalidInput("each edge needs two endpoints");
    edges.push_back({pair[0], pair[1]});
  }
  return Graph::from_edges(verts, edges);
}

void write_graph_json(const Graph& g, std::ostream& out) {
  json edges = json::array();
  for (int u : g.vertices())
    for (int w : g.neighbors(u))
      if (u < w) edges.push_back(std::array<int, 2>{u, w});
  json j;
  j["vertices"] = g.vertices();
  j["edges"] = edges;
  out << j.dump(2) << '\n';
}

void write_dot(const Graph& g, std::ostream& out) {
  out << "graph g {\n";
  for (int u : g.vertices()) out << "  " << u << ";\n";
  for (int u : g.vertices())
    for (int w : g.neighbors(u))
      if (u < w) out << "  " << u << " -- " << w << ";\n";
  out << "}\n";
}

namespace {

using Point = std::array<double, 3>;

// Fruchterman-Reingold in three dimensions, fixed iteration count
std::vector<Point> force_layout(const Graph& g, std::uint64_t seed) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  SplitMix64 rng(seed);
  auto coin = [&] {
    return 2.0 * (double(rng.next() >> 11) * 0x1.0p-53) - 1.0;
  };
  std::vector<Point> pos(n);
  for (auto& p : pos) p = {coin(), coin(), coin()};
  if (n < 2) return pos;

  std::unordered_map<int, int> idx;
  idx.reserve(n);
  for (std::size_t i = 0; i < n; ++i) idx.emplace(vs[i], int(i));
  const double k = std::cbrt(8.0 / double(n));
  const int iters = 60;
  std::vector<Point> disp(n);
  for (int it = 0; it < iters; ++it) {
    for (auto& d : disp) d = {0, 0, 0};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Point d{pos[i][0] - pos[j][0], pos[i][1] - pos[j][1],
                pos[i][2] - pos[j][2]};
        double d2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + 1e-9;
        double rep = k * k / d2;
        for (int c = 0; c < 3; ++c) {
          disp[i][c] += d[c] * rep;
          disp[j][c] -= d[c] * rep;
        }
      }
    for (int u : vs)
      for (int w : g.neighbors(u)) {
        if (u >= w) continue;
        int i = idx.at(u), j = idx.at(w);
        Point d{pos[i][0] - pos[j][0], pos[i][1] - pos[j][1],
                pos[i][2] - pos[j][2]};
        double len = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]) + 1e-9;
        double att = len / k;  // pull of strength len^2/k along the unit vector
        for (int c = 0; c < 3; ++c) {
          disp[i][c] -= d[c] * att;
          disp[j][c] += d[c] * att;
        }
      }
    double temp = 0.1 * (1.0 - double(it) / iters) + 1e-3;
    for (std::size_t i = 0; i < n; ++i) {
      double len = std::sqrt(disp[i][0] * disp[i][0] + disp[i][1] * disp[i][1] +
                             disp[i][2] * disp[i][2]);
      if (len < 1e-12) continue;
      double step = std::min(len, temp) / len;
      for (int c = 0; c < 3; ++c) pos[i][c] += disp[i][c] * step;
    }
  }
  return pos;
}

}  // namespace

void write_off_layout(const Graph& g, std::uint64_t seed, std::ostream& out) {
  const auto& vs = g.vertices();
  std::vector<Point> pos = force_layout(g, seed);
  std::unordered_map<int, int> idx;
  idx.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) idx.emplace(vs[i], int(i));

  std::vector<std::array<int, 3>> tris;
  for (int u : vs)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      for (int w : g.neighbors(v))
        if (w > v && g.has_edge(u, w))
          tris.push_back({idx.at(u), idx.at(v), idx.at(w)});
    }

  out << "OFF\n" << vs.size() << ' ' << tris.size() << ' ' << g.num_edges()
      << '\n';
  char buf[96];
  for (const auto& p : pos) {
    std::snprintf(buf, sizeof buf, "%.6f %.6f %.6f\n", p[0], p[1], p[2]);
    out << buf;
  }
  for (const auto& t : tris)
    out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

}  // namespace sard
