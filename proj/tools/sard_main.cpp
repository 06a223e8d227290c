// Command line front end: every subcommand prints one JSON document.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sard/barycentric.hpp"
#include "sard/builtins.hpp"
#include "sard/delta_set.hpp"
#include "sard/errors.hpp"
#include "sard/homology.hpp"
#include "sard/io.hpp"
#include "sard/levelset.hpp"
#include "sard/morse.hpp"
#include "sard/recognition.hpp"
#include "sard/simplicial_complex.hpp"

using nlohmann::json;
using namespace sard;

namespace {

Coefficients parse_field(const std::string& field) {
  if (field == "q" || field == "Q") return Coefficients::rationals();
  if (field == "gf2") return Coefficients::mod(2);
  try {
    std::size_t used = 0;
    long long p = std::stoll(field, &used);
    if (used == field.size() && p >= 2) return Coefficients::mod(p);
  } catch (const std::exception&) {
  }
  throw InvalidInput("field must be q, gf2, or a prime");
}

VertexFunction function_for(const Builtin& b, int k, std::uint64_t seed,
                            const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw InvalidInput("cannot open function file " + file);
    VertexFunction f = read_function_json(in);
    if (f.k != k)
      throw InvalidInput("function file has arity " + std::to_string(f.k) +
                         ", expected " + std::to_string(k));
    return f;
  }
  return VertexFunction::random_signs(b.complex->vertex_ids(), k, seed);
}

json fvec(const FVector& f) { return json(f.counts); }

LevelSet seeded_level_set(const std::shared_ptr<const SimplicialComplex>& host,
                          const VertexFunction& f) {
  std::vector<double> zero(f.k, 0.0);
  if (f.k == 1) return level_set_real(host, f, 0.0);
  if (f.k == 2) return level_set_complex(host, f, {0.0, 0.0});
  return level_set_multi(host, f, zero, default_anchors(f.k));
}

json level_set_report(const LevelSet& ls) {
  json out;
  out["cells"] = ls.cells.size();
  out["f_vector"] = fvec(ls.cell_f_vector());
  out["empty"] = ls.empty();
  out["open"] = is_open_set(ls);
  auto dim = level_set_manifold_dim(ls);
  out["manifold_dim"] = dim ? json(*dim) : json(nullptr);
  return out;
}

void emit(const json& j, const std::string& out_file) {
  // objects pretty-printed, top level arrays (betti vectors) on one line
  std::string text = j.is_array() ? j.dump() : j.dump(2);
  if (out_file.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_file);
  if (!out) throw InvalidInput("cannot open output file " + out_file);
  out << text << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete manifold toolbox"};
  app.require_subcommand(1);

  struct {
    std::string complex, left, right, facets, function, field = "q";
    std::string format = "json-graph", out, graph_file, laplacian = "graph";
    std::uint64_t seed = 0;
    int k = 1, triangle = 1, trials = 100, mode = 0, vertex = -1;
    int levelset_k = 0;
    bool with_betti = false, verify = false;
  } opt;

  auto* library = app.add_subcommand("library", "catalog with pinned data");
  (void)library;

  auto* build = app.add_subcommand("build", "summarize a facet file");
  build->add_option("--facets", opt.facets, "json facet file")->required();

  auto* checkm = app.add_subcommand("check-manifold", "recognize a manifold");
  checkm->add_option("--complex", opt.complex)->required();

  auto* betti_cmd = app.add_subcommand("betti", "homology ranks");
  betti_cmd->add_option("--complex", opt.complex)->required();
  betti_cmd->add_option("--field", opt.field, "q, gf2, or a prime");

  auto* levelset_cmd = app.add_subcommand("levelset", "seeded level set");
  levelset_cmd->add_option("--complex", opt.complex)->required();
  levelset_cmd->add_option("--k", opt.k, "function arity");
  levelset_cmd->add_option("--seed", opt.seed);
  levelset_cmd->add_option("--function", opt.function, "json function file");

  auto* preimage = app.add_subcommand("preimage", "triangle preimage");
  preimage->add_option("--complex", opt.complex)->required();
  preimage->add_option("--seed", opt.seed);
  preimage->add_option("--function", opt.function);
  preimage->add_option("--triangle", opt.triangle, "1 or 2");

  auto* product = app.add_subcommand("product", "cell product of complexes");
  product->add_option("--left", opt.left)->required();
  product->add_option("--right", opt.right)->required();
  product->add_flag("--betti", opt.with_betti, "also compute betti numbers");
  product->add_option("--field", opt.field);

  auto* bary = app.add_subcommand("barycentric", "refinement counting");
  bary->add_option("--complex", opt.complex)->required();
  bary->add_flag("--verify", opt.verify, "refine and recount");

  auto* indices = app.add_subcommand("indices", "vertex index table");
  indices->add_option("--complex", opt.complex)->required();
  indices->add_option("--seed", opt.seed);
  indices->add_option("--function", opt.function);

  auto* curvature = app.add_subcommand("curvature", "index expectation");
  curvature->add_option("--complex", opt.complex)->required();
  curvature->add_option("--trials", opt.trials);
  curvature->add_option("--seed", opt.seed);
  curvature->add_option("--vertex", opt.vertex, "restrict to one vertex");

  auto* chladni = app.add_subcommand("chladni", "eigenvector nodal surface");
  chladni->add_option("--complex", opt.complex)->required();
  chladni->add_option("--mode", opt.mode, "eigenvector number");
  chladni->add_option("--seed", opt.seed);
  chladni->add_option("--function", opt.function);
  chladni->add_option("--laplacian", opt.laplacian, "graph or beltrami");

  auto* export_cmd = app.add_subcommand("export", "write viewer files");
  export_cmd->add_option("--complex", opt.complex);
  export_cmd->add_option("--graph-file", opt.graph_file, "json-graph input");
  export_cmd->add_option("--format", opt.format, "dot, json-graph, off-layout");
  export_cmd->add_option("--out", opt.out, "output file (default stdout)");
  export_cmd->add_option("--seed", opt.seed, "layout seed");
  export_cmd->add_option("--levelset-k", opt.levelset_k,
                         "export a seeded level set instead of the graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (library->parsed()) {
      json entries = json::array();
      for (const auto& name : builtin_names()) {
        Builtin b = resolve_complex(name);
        json e;
        e["name"] = name;
        e["dimension"] = b.manifold_dim;
        e["f_vector"] = fvec(b.complex->f_vector());
        e["euler"] = b.complex->f_vector().euler();
        e["betti_q"] = betti(*b.complex, Coefficients::rationals());
        e["betti_gf2"] = betti(*b.complex, Coefficients::mod(2));
        entries.push_back(e);
      }
      emit(json{{"entries", entries}}, "");
    } else if (build->parsed()) {
      std::ifstream in(opt.facets);
      if (!in) throw InvalidInput("cannot open facet file " + opt.facets);
      SimplicialComplex c = read_complex_json(in);
      json out;
      out["dimension"] = c.dimension();
      out["f_vector"] = fvec(c.f_vector());
      out["euler"] = c.f_vector().euler();
      out["cells"] = c.size();
      emit(out, "");
    } else if (checkm->parsed()) {
      Builtin b = resolve_complex(opt.complex);
      auto dim = is_manifold(b.graph);
      json out;
      out["manifold"] = bool(dim);
      out["dim"] = dim ? json(*dim) : json(nullptr);
      emit(out, "");
    } else if (betti_cmd->parsed()) {
      Builtin b = resolve_complex(opt.complex);
      emit(json(betti(*b.complex, parse_field(opt.field))), "");
    } else if (levelset_cmd->parsed()) {
      Builtin b = resolve_complex(opt.complex);
      VertexFunction f = function_for(b, opt.k, opt.seed, opt.function);
      LevelSet ls = seeded_level_set(b.complex, f);
      json out = level_set_report(ls);
      out["complex"] = b.name;
      out["k"] = f.k;
      out["seed"] = opt.seed;
      emit(out, "");
    } else if (preimage->parsed()) {
      if (opt.triangle != 1 && opt.triangle != 2)
        throw InvalidInput("--triangle must be 1 or 2");
      Builtin b = resolve_complex(opt.complex);
      VertexFunction psi = function_for(b, 2, opt.seed, opt.function);
      auto tris = triangles_through(default_sign_edge());
      LevelSet pre = triangle_preimage(b.complex, psi, tris[opt.triangle - 1]);
      json out;
      out["cells"] = pre.cells.size();
      out["f_vector"] = fvec(pre.cell_f_vector());
      out["empty"] = pre.empty();
      auto mwb = is_manifold_with_boundary(pre.realization());
      if (mwb) {
        out["manifold_with_boundary"] =
            json{{"dim", mwb->dim},
                 {"boundary_vertices", mwb->boundary_vertices.size()}};
      } else {
        out["manifold_with_boundary"] = nullptr;
      }
      emit(out, "");
    } else if (product->parsed()) {
      Builtin a = resolve_complex(opt.left);
      Builtin c = resolve_complex(opt.right);
      DeltaSet ds = product_delta(*a.complex, *c.complex);
      Graph rz = delta_graph_realization(ds);
      json out;
      out["f_vector"] = fvec(ds.f_vector());
      out["total_cells"] = ds.total_cells();
      out["realization_vertices"] = rz.num_vertices();
      out["realization_edges"] = rz.num_edges();
      if (opt.with_betti) out["betti"] = betti(ds, parse_field(opt.field));
      emit(out, "");
    } else if (bary->parsed()) {
      Builtin b = resolve_complex(opt.complex);
      FVector f = b.complex->f_vector();
      auto op = barycentric_operator(b.complex->dimension());
      FVector once = apply_barycentric_operator(op, f);
      FVector twice = apply_barycentric_operator(op, once);
      json out;
      out["dimension"] = b.complex->dimension();
      out["operator"] = op;
      out["f_vector"] = fvec(f);
      out["refined"] = fvec(once);
      out["refined_twice"] = fvec(twice);
      if (opt.verify) {
        SimplicialComplex r =
            SimplicialComplex::whitney(realization_graph(*b.complex));
        out["refined_actual"] = fvec(r.f_vector());
      }
      emit(out, "");
    } else if (indices->parsed()) {
      Builtin b = resolve_complex(opt.complex);
      VertexFunction f =
          opt.function.empty()
              ? VertexFunction::random_injective(b.graph.vertices(), opt.seed)
              : function_for(b, 1, opt.seed, opt.function);
      IndexReport r = index_report(b.graph, f);
      json entries = json::array();
      for (const auto& e : r.entries)
        entries.push_back(json{{"vertex", e.vertex},
                               {"i_plus", e.i_plus},
                               {"i_minus", e.i_minus},
                               {"center_chi", e.center_chi},
                               {"twice_j", e.twice_j}});
      json out;
      out["dim"] = r.dim >= 0 ? json(r.dim) : json(nullptr);
      out["seed"] = opt.seed;
      out["entries"] = entries;
      out["sum_i_plus"] = r.sum_i_plus;
      out["sum_i_minus"] = r.sum_i_minus;
      out["sum_twice_j"] = r.sum_twice_j;
      emit(out, "");
    } else if (curvature->parsed()) {
      Builtin b = resolve_complex(opt.complex);
      json verts = json::array();
      double total = 0;
      auto push = [&](const CurvatureEstimate& c) {
        json counts = json::object();
        for (const auto& [chi, n] : c.center_chi_counts)
          counts[std::to_string(chi)] = n;
        verts.push_back(json{{"vertex", c.vertex},
                             {"twice_j_sum", c.twice_j_sum},
                             {"expectation", c.expectation()},
                             {"center_chi_counts", counts}});
        total += c.expectation();
      };
      if (opt.vertex >= 0) {
        push(curvature_expectation(b.graph, opt.vertex, opt.trials, opt.seed));
      } else {
        for (const auto& c : curvature_profile(b.graph, opt.trials, opt.seed))
          push(c);
      }
      json out;
      out["trials"] = opt.trials;
      out["seed"] = opt.seed;
      out["vertices"] = verts;
      out["total_expectation"] = total;
      emit(out, "");
    } else if (chladni->parsed()) {
      Builtin b = resolve_complex(opt.complex);
      LaplacianMode mode;
      if (opt.laplacian == "graph") mode = LaplacianMode::graph;
      else if (opt.laplacian == "beltrami") mode = LaplacianMode::beltrami;
      else throw InvalidInput("--laplacian must be graph or beltrami");
      VertexFunction f = function_for(b, 1, opt.seed, opt.function);
      ChladniSurface cs = chladni_surface(b.graph, f, opt.mode, opt.seed, mode);
      json out;
      out["mode"] = opt.mode;
      out["seed"] = opt.seed;
      out["laplacian"] = opt.laplacian;
      out["eigenvalue"] = cs.eigenvalue;
      out["zero_set_cells"] = cs.zero_set.cells.size();
      out["surface"] = level_set_report(cs.surface);
      emit(out, "");
    } else if (export_cmd->parsed()) {
      Graph g;
      if (!opt.graph_file.empty()) {
        std::ifstream in(opt.graph_file);
        if (!in) throw InvalidInput("cannot open graph file " + opt.graph_file);
        g = read_graph_json(in);
      } else if (!opt.complex.empty()) {
        Builtin b = resolve_complex(opt.complex);
        if (opt.levelset_k > 0) {
          VertexFunction f = function_for(b, opt.levelset_k, opt.seed, "");
          g = seeded_level_set(b.complex, f).realization();
        } else {
          g = b.graph;
        }
      } else {
        throw InvalidInput("export needs --complex or --graph-file");
      }
      std::ostringstream buf;
      if (opt.format == "dot") {
        write_dot(g, buf);
      } else if (opt.format == "json-graph") {
        write_graph_json(g, buf);
      } else if (opt.format == "off-layout") {
        write_off_layout(g, opt.seed, buf);
      } else {
        throw InvalidInput("format must be dot, json-graph, or off-layout");
      }
      if (opt.out.empty()) {
        std::cout << buf.str();
      } else {
        std::ofstream out(opt.out);
        if (!out) throw InvalidInput("cannot open output file " + opt.out);
        out << buf.str();
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
