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

#include "platobell/tables.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>

#include "platobell/bell.hpp"
#include "platobell/errors.hpp"
#include "platobell/polygon.hpp"
#include "platobell/polytopes.hpp"
#include "platobell/shifted_gram.hpp"

namespace platobell {

const std::vector<std::string>& platonic3d_names() {
  static const std::vector<std::string> n = {"tetrahedron", "octahedron", "cube",
                                             "icosahedron", "dodecahedron"};
  return n;
}

const std::vector<std::string>& platonic4d_names() {
  static const std::vector<std::string> n = {"pentachoron", "hexadecachoron",
                                             "tesseract",   "octaplex",
                                             "tetraplex",   "dodecaplex"};
  return n;
}

const std::vector<std::string>& solids3d_names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> all = platonic3d_names();
    for (const auto& a : archimedean_names()) all.push_back(a);
    return all;
  }();
  return n;
}

StrategySummary summarize(const VertexSet& v, const BodyStrategies& b) {
  StrategySummary s;
  s.name = v.name;
  s.m = v.m();
  s.cs = v.centrally_symmetric;
  const StrategyVectorSet signed_set = strategy_vectors(b.merged, b.strategies, true);
  s.n_sv = signed_set.size();
  s.n_svg = static_cast<long long>(signed_set.groups.size());
  s.n_svx = signed_set.groups.empty() ? 0 : signed_set.groups[0].count;
  s.l_x = signed_set.longest();
  s.ratio = v.m() / std::sqrt(static_cast<double>(v.d)) / s.l_x;
  return s;
}

std::vector<StrategySummary> strategy_table(const std::vector<std::string>& names,
                                            const EnumerateOptions& opt) {
  std::vector<StrategySummary> rows;
  for (const auto& n : names) {
    const VertexSet v = polytope_by_name(n);
    rows.push_back(summarize(v, body_strategies(v, opt)));
  }
  return rows;
}

std::vector<PairEntry> pair_table(const std::vector<std::string>& names,
                                  const PairTableOptions& opt) {
  std::map<std::string, VertexSet> bodies;
  std::map<std::string, BodyStrategies> strat;
  for (const auto& n : names) {
    bodies[n] = polytope_by_name(n);
    if (opt.enumerate.verbose) std::cerr << "strategies of " << n << "\n";
    strat[n] = body_strategies(bodies[n], opt.enumerate);
  }
  auto skipped = [&](const std::string& n) {
    return std::find(opt.skip_lower.begin(), opt.skip_lower.end(), n) !=
           opt.skip_lower.end();
  };
  std::vector<PairEntry> out;
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i; j < names.size(); ++j) {
      const std::string &a = names[i], &b = names[j];
      PairEntry e;
      e.a = a;
      e.b = b;
      e.q = quantum_bound_formula(bodies[a], bodies[b]);
      e.l_max = max_local_bound(strat[a].vectors, strat[b].vectors);
      e.upper = e.q / e.l_max;
      if (opt.compute_lower) {
        OrientOptions o = opt.orient;
        bool run = true;
        if (skipped(a) || skipped(b)) {
          run = opt.reduced_restarts > 0;
          o.restarts = opt.reduced_restarts;
        }
        if (run) {
          if (opt.orient.verbose) std::cerr << "orienting " << a << " / " << b << "\n";
          const OrientationResult r =
              minimize_local_bound(strat[a], strat[b], bodies[a], bodies[b], o);
          e.has_lower = true;
          e.l_min = r.best_L;
          e.lower = e.q / e.l_min;
        }
      }
      out.push_back(e);
    }
  return out;
}

std::vector<CurvePoint> polygon_curve(int ma, int mb, int steps, double phi_max) {
  if (steps < 1) throw ValidationError("polygon_curve: steps must be positive");
  std::vector<CurvePoint> pts;
  for (int k = 0; k <= steps; ++k) {
    const double phi = phi_max * k / steps;
    pts.push_back({phi, polygon_pair_local_bound(ma, mb, phi)});
  }
  return pts;
}

SweepRecord sweep_point(const VertexSet& a, double lambda, int64_t scale,
                        const BBOptions& opt, SweepMethod method) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepRecord r;
  r.lambda = lambda;
  const double limit = a.m() / (2.0 * a.d);
  r.certified = lambda >= 0 && lambda <= limit * (1 + 1e-12);
  // Past m/(2d) the same expression is reported, marked uncertified.
  r.q = r.certified ? quantum_bound_shifted(a, lambda)
                    : double(a.m()) * a.m() / a.d - lambda * a.m();
  const BellMatrix m =
      diagonal_shift(build(a, a, OrthogonalTransform::identity(a.d)), lambda);
  if (method == SweepMethod::kAuto)
    method = a.m() > 30 && lambda > 0 ? SweepMethod::kCells : SweepMethod::kBranchAndBound;
  BoundBracket br;
  if (method == SweepMethod::kCells) {
    ShiftedGramOptions so;
    so.verbose = opt.verbose;
    br = ShiftedGram(a.vectors, lambda, so).bracket(m.entries(), scale);
    r.method = "cells";
  } else {
    br = local_bound_bracket(m, scale, opt);
    r.method = "bb";
  }
  r.l_lower = br.lower;
  r.l_upper = br.upper;
  r.ratio_lower = r.q / r.l_upper;
  r.ratio_upper = r.q / r.l_lower;
  r.scale = br.scale;
  r.int_value = br.int_value;
  r.delta_sum = br.delta_sum;
  r.witness_a = br.witness_a;
  r.witness_b = br.witness_b;
  r.nodes = br.nodes;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<SweepRecord> sweep(const VertexSet& a, double from, double to,
                               int steps, int64_t scale, const BBOptions& opt,
                               SweepMethod method) {
  if (steps < 0) throw ValidationError("sweep: steps must be non-negative");
  std::vector<SweepRecord> out;
  for (int k = 0; k <= steps; ++k) {
    const double lambda = steps == 0 ? from : from + (to - from) * k / steps;
    if (opt.verbose) std::cerr << "sweep: lambda = " << lambda << "\n";
    out.push_back(sweep_point(a, lambda, scale, opt, method));
  }
  std::sort(out.begin(), out.end(),
            [](const SweepRecord& x, const SweepRecord& y) { return x.lambda < y.lambda; });
  return out;
}

}  // namespace platobell
