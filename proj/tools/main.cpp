// Copyright 2026 The platobell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// platobell command-line driver. Data goes to stdout (or -o files),
// progress to stderr.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "platobell/bbsolver.hpp"
#include "platobell/bell.hpp"
#include "platobell/errors.hpp"
#include "platobell/geomstrat.hpp"
#include "platobell/json_writer.hpp"
#include "platobell/orient.hpp"
#include "platobell/polygon.hpp"
#include "platobell/polytopes.hpp"
#include "platobell/tables.hpp"
#include "platobell/text_io.hpp"
#include "platobell/tsirelson.hpp"

using namespace platobell;

namespace {

struct Globals {
  int threads = 0;
  uint64_t seed = 1;
  bool verbose = false;
};

// A body is a vertex file, a solid name, or "family:N" (polygon:6, simplex:5).
VertexSet resolve_body(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return load_vertex_set(spec);
  const auto colon = spec.find(':');
  if (colon != std::string::npos)
    return polytope_by_name(spec.substr(0, colon), std::stoi(spec.substr(colon + 1)));
  return polytope_by_name(spec);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    save_text(path, text);
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

EnumerateOptions enum_opts(const Globals& g) {
  EnumerateOptions o;
  o.seed = g.seed;
  o.threads = g.threads;
  o.verbose = g.verbose;
  return o;
}

OrthogonalTransform read_orientation(const std::vector<double>& angles,
                                     const std::string& matrix_file, int d) {
  if (!matrix_file.empty()) {
    std::ifstream in(matrix_file);
    if (!in) throw ValidationError("cannot open " + matrix_file);
    return OrthogonalTransform::from_matrix(read_matrix(in));
  }
  if (angles.empty()) return OrthogonalTransform::identity(d);
  return angles_to_transform(angles, d);
}

// Exact L of build(A, B, O), enumerating the side with fewer regions.
double exact_local_bound(const VertexSet& a, const VertexSet& b,
                         const OrthogonalTransform& o, const Globals& g) {
  const VertexSet ma = merge_antipodal(a), mb = merge_antipodal(b);
  const bool enumerate_b = region_count(mb.m(), b.d) <= region_count(ma.m(), a.d);
  if (enumerate_b) {
    const BodyStrategies sb = body_strategies(b, enum_opts(g));
    return local_bound(a, sb.vectors, o.matrix, g.threads);
  }
  const BodyStrategies sa = body_strategies(a, enum_opts(g));
  return local_bound(b, sa.vectors, o.matrix.transpose(), g.threads);
}

Json sweep_json(const SweepRecord& r) {
  Json j;
  j["lambda"] = r.lambda;
  j["Q"] = r.q;
  j["L_lower"] = r.l_lower;
  j["L_upper"] = r.l_upper;
  j["ratio_lower"] = r.ratio_lower;
  j["ratio_upper"] = r.ratio_upper;
  j["certified"] = r.certified;
  j["scale"] = r.scale;
  j["L_int"] = r.int_value;
  j["delta_sum"] = r.delta_sum;
  j["nodes"] = r.nodes;
  j["method"] = r.method;
  j["witness_a"] = r.witness_a;
  j["witness_b"] = r.witness_b;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Platonic Bell inequalities: polytopes, quantum and local bounds"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_flag("-v,--verbose", g.verbose, "Progress on stderr");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a vertex set");
  std::string gen_name, gen_out;
  int gen_dim = 0;
  bool gen_halve = false;
  gen->add_option("solid", gen_name, "Solid name")->required();
  gen->add_option("--dim,--param", gen_dim, "Dimension or vertex count for families");
  gen->add_flag("--halve", gen_halve, "Keep one vertex per antipodal pair");
  gen->add_option("-o,--output", gen_out, "Output file");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Q, L and Q/L of a pair");
  std::string b_a, b_b, b_matrix;
  std::vector<double> b_angles;
  bounds->add_option("A", b_a)->required();
  bounds->add_option("B", b_b)->required();
  bounds->add_option("--orient", b_angles, "Plane-rotation angles (radians)");
  bounds->add_option("--orient-matrix", b_matrix, "File holding an orthogonal matrix");

  // strategies
  auto* strat = app.add_subcommand("strategies", "Enumerate geometric strategies");
  std::string s_body, s_text, s_bin, s_vec, s_groups;
  int s_runs = 3;
  double s_eps = 1e-7;
  strat->add_option("body", s_body)->required();
  strat->add_option("--runs", s_runs);
  strat->add_option("--eps", s_eps);
  strat->add_option("--text", s_text, "Write strategies as +-1 rows");
  strat->add_option("--binary", s_bin, "Write packed strategies");
  strat->add_option("--vectors", s_vec, "Write signed strategy vectors");
  strat->add_option("--groups", s_groups, "Write the length-group CSV");

  // sweep
  auto* sw = app.add_subcommand("sweep", "Bracket L(lambda) of the shifted matrix");
  std::string sw_body, sw_csv;
  double sw_from = 0, sw_to = 0;
  int sw_steps = 0;
  int64_t sw_scale = 1000000;
  bool sw_halve = false, sw_doll = false;
  sw->add_option("body", sw_body)->required();
  sw->add_option("--lambda-from", sw_from);
  sw->add_option("--lambda-to", sw_to);
  sw->add_option("--steps", sw_steps);
  sw->add_option("--scale", sw_scale);
  sw->add_flag("--halve", sw_halve, "Halve the body first");
  sw->add_flag("--russian-doll", sw_doll, "Use suffix bounds in the search");
  std::string sw_method = "auto";
  sw->add_option("--method", sw_method, "auto, bb or cells")
      ->check(CLI::IsMember({"auto", "bb", "cells"}));
  sw->add_option("--csv", sw_csv, "Also write a CSV");

  // optimize
  auto* opt = app.add_subcommand("optimize", "Minimize L over orientations");
  std::string o_a, o_b;
  int o_restarts = 200;
  opt->add_option("A", o_a)->required();
  opt->add_option("B", o_b)->required();
  opt->add_option("--restarts", o_restarts);

  // table
  auto* table = app.add_subcommand("table", "Reproduce tables and figure data");
  std::string t_which, t_csv;
  int t_restarts = 200, t_steps = 360;
  bool t_no_lower = false;
  table->add_option("which", t_which, "1, 2, 3 or fig1")->required();
  table->add_option("--restarts", t_restarts);
  table->add_option("--steps", t_steps, "Points per curve for fig1");
  table->add_flag("--no-lower", t_no_lower, "Skip the orientation search");
  table->add_option("--csv", t_csv, "CSV output file");

  // verify
  auto* verify = app.add_subcommand("verify", "Self-checks");
  int v_dim = 0;
  verify->add_option("--dim", v_dim, "Only check gamma operators of this dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*gen) {
    VertexSet v = polytope_by_name(gen_name, gen_dim);
    if (gen_halve) v = halve(v);
    std::ostringstream os;
    write_vertex_set(os, v);
    emit(os.str(), gen_out);
    return 0;
  }

  if (*bounds) {
    const VertexSet a = resolve_body(b_a), b = resolve_body(b_b);
    if (a.d != b.d) throw ValidationError("bodies have different dimensions");
    const OrthogonalTransform o = read_orientation(b_angles, b_matrix, a.d);
    const double q = pair_quantum_bound(a, b, o);
    const double l = exact_local_bound(a, b, o, g);
    Json j;
    j["A"] = a.name;
    j["B"] = b.name;
    j["Q"] = q;
    j["L"] = l;
    j["ratio"] = q / l;
    j["matrix"] = matrix_json(o.matrix);
    std::cout << dump_json(j);
    return 0;
  }

  if (*strat) {
    const VertexSet v = resolve_body(s_body);
    EnumerateOptions eo = enum_opts(g);
    eo.runs = s_runs;
    eo.eps = s_eps;
    const BodyStrategies b = body_strategies(v, eo);
    const StrategyVectorSet sv = strategy_vectors(b.merged, b.strategies, true);
    if (!s_text.empty()) {
      std::ofstream f(s_text);
      write_strategies_text(f, b.strategies);
    }
    if (!s_bin.empty()) {
      std::ofstream f(s_bin, std::ios::binary);
      write_strategies_binary(f, b.strategies);
    }
    if (!s_vec.empty()) {
      std::ofstream f(s_vec);
      write_strategy_vectors(f, sv);
    }
    if (!s_groups.empty()) {
      std::ofstream f(s_groups);
      write_group_csv(f, sv);
    }
    Json j;
    j["body"] = v.name;
    j["m"] = v.m();
    j["merged_m"] = b.merged.m();
    j["canonical"] = b.strategies.size();
    j["signed"] = sv.size();
    j["groups"] = sv.groups.size();
    j["longest"] = sv.longest();
    j["longest_count"] = sv.groups.empty() ? 0 : sv.groups[0].count;
    std::cout << dump_json(j);
    return 0;
  }

  if (*sw) {
    VertexSet v = resolve_body(sw_body);
    if (sw_halve) v = halve(v);
    BBOptions bo;
    bo.threads = g.threads;
    bo.russian_doll = sw_doll;
    bo.verbose = g.verbose;
    const SweepMethod method = sw_method == "bb"      ? SweepMethod::kBranchAndBound
                               : sw_method == "cells" ? SweepMethod::kCells
                                                      : SweepMethod::kAuto;
    const auto recs = sweep(v, sw_from, sw_to, sw_steps, sw_scale, bo, method);
    Json arr = Json::array();
    std::ostringstream csv;
    csv << "lambda,Q,L_lower,L_upper,ratio_lower,ratio_upper,certified\n";
    for (const auto& r : recs) {
      arr.push_back(sweep_json(r));
      csv << format_real(r.lambda) << ',' << format_real(r.q) << ','
          << format_real(r.l_lower) << ',' << format_real(r.l_upper) << ','
          << format_real(r.ratio_lower) << ',' << format_real(r.ratio_upper) << ','
          << (r.certified ? 1 : 0) << '\n';
    }
    if (!sw_csv.empty()) save_text(sw_csv, csv.str());
    std::cout << dump_json(arr);
    return 0;
  }

  if (*opt) {
    const VertexSet a = resolve_body(o_a), b = resolve_body(o_b);
    OrientOptions oo;
    oo.restarts = o_restarts;
    oo.seed = g.seed;
    oo.threads = g.threads;
    oo.verbose = g.verbose;
    const OrientationResult r = minimize_local_bound(a, b, oo);
    Json j;
    j["angles"] = r.best_transform.angles;
    j["matrix"] = matrix_json(r.best_transform.matrix);
    j["L"] = r.best_L;
    j["Q"] = r.Q;
    j["ratio"] = r.ratio;
    j["restarts"] = r.restarts_used;
    std::cout << dump_json(j);
    return 0;
  }

  if (*table) {
    std::ostringstream csv;
    Json out;
    if (t_which == "1") {
      EnumerateOptions eo = enum_opts(g);
      csv << "solid,m,cs,n_sv,n_svg,n_svx,l_x,m_over_sqrt3_over_l_x\n";
      std::printf("%-28s %4s %3s %6s %5s %5s %12s\n", "solid", "m", "cs", "n_sv",
                  "n_svg", "n_svx", "m/sqrt3/l_x");
      for (const auto& r : strategy_table(solids3d_names(), eo)) {
        std::printf("%-28s %4d %3s %6lld %5lld %5lld %12.7f\n", r.name.c_str(), r.m,
                    r.cs ? "y" : "n", r.n_sv, r.n_svg, r.n_svx, r.ratio);
        csv << r.name << ',' << r.m << ',' << (r.cs ? 'y' : 'n') << ',' << r.n_sv
            << ',' << r.n_svg << ',' << r.n_svx << ',' << format_real(r.l_x) << ','
            << format_real(r.ratio) << '\n';
      }
    } else if (t_which == "2" || t_which == "3") {
      PairTableOptions po;
      po.enumerate = enum_opts(g);
      po.orient.restarts = t_restarts;
      po.orient.seed = g.seed;
      po.orient.threads = g.threads;
      po.orient.verbose = g.verbose;
      po.compute_lower = !t_no_lower;
      const auto& names = t_which == "2" ? platonic3d_names() : platonic4d_names();
      csv << "A,B,Q,L_max,upper,L_min,lower\n";
      std::printf("%-16s %-16s %12s %12s\n", "A", "B", "upper", "lower");
      for (const auto& e : pair_table(names, po)) {
        std::printf("%-16s %-16s %12.7f %12s\n", e.a.c_str(), e.b.c_str(), e.upper,
                    e.has_lower ? std::to_string(e.lower).c_str() : "-");
        csv << e.a << ',' << e.b << ',' << format_real(e.q) << ','
            << format_real(e.l_max) << ',' << format_real(e.upper) << ','
            << (e.has_lower ? format_real(e.l_min) : "") << ','
            << (e.has_lower ? format_real(e.lower) : "") << '\n';
      }
    } else if (t_which == "fig1") {
      const double period = 2 * std::numbers::pi / 4;
      csv << "pair,phi,L\n";
      for (auto [ma, mb] : {std::pair{4, 4}, {6, 6}, {4, 6}})
        for (const auto& p : polygon_curve(ma, mb, t_steps, period))
          csv << ma << 'x' << mb << ',' << format_real(p.phi) << ','
              << format_real(p.l) << '\n';
      std::cout << csv.str();
    } else {
      throw ValidationError("table must be 1, 2, 3 or fig1");
    }
    if (!t_csv.empty()) save_text(t_csv, csv.str());
    return 0;
  }

  if (*verify) {
    bool ok = true;
    auto line = [&ok](const std::string& what, bool pass) {
      std::cout << (pass ? "PASS " : "FAIL ") << what << "\n";
      ok = ok && pass;
    };
    const int lo = v_dim ? v_dim : 2, hi = v_dim ? v_dim : 12;
    for (int d = lo; d <= hi; ++d) {
      const GammaSet gs = gamma_operators(d);
      double worst = 0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const Eigen::MatrixXcd ac = gs.ops[i] * gs.ops[j] + gs.ops[j] * gs.ops[i] -
                                      (i == j ? 2.0 : 0.0) *
                                          Eigen::MatrixXcd::Identity(gs.D, gs.D);
          worst = std::max(worst, ac.cwiseAbs().maxCoeff());
        }
      line("gamma anticommutation d=" + std::to_string(d), worst <= 1e-12);
    }
    if (!v_dim) {
      std::vector<VertexSet> all;
      for (const auto& n : named_polytopes()) all.push_back(polytope_by_name(n));
      for (int d = 2; d <= 8; ++d)
        for (auto* f : {&simplex, &cross_polytope, &hypercube}) all.push_back(f(d));
      for (int n = 3; n <= 12; ++n) all.push_back(regular_polygon(n));
      for (const auto& v : all)
        line("observation " + v.name, check_semiorthogonal(v).passed &&
                                          max_unit_norm_deviation(v) <= 1e-12);
      const double m = 1000;
      const double ratio = m * m / 2 / polygon_pair_local_bound(1000, 1000, 0.0);
      line("polygon limit pi^2/8", std::abs(ratio - std::numbers::pi * std::numbers::pi / 8) < 1e-4);
    }
    return ok ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
