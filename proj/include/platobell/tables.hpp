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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "platobell/bbsolver.hpp"
#include "platobell/geomstrat.hpp"
#include "platobell/orient.hpp"
#include "platobell/vertex_set.hpp"

namespace platobell {

// Strategy-vector summary of a 3D body.
struct StrategySummary {
  std::string name;
  int m = 0;
  bool cs = false;
  long long n_sv = 0;   // signed strategy vectors
  long long n_svg = 0;  // distinct lengths
  long long n_svx = 0;  // size of the longest group
  double l_x = 0.0;
  double ratio = 0.0;   // m / sqrt(d) / l_x
};

/** The five Platonic solids then the thirteen Archimedean ones. */
const std::vector<std::string>& solids3d_names();
const std::vector<std::string>& platonic3d_names();
const std::vector<std::string>& platonic4d_names();

StrategySummary summarize(const VertexSet& v, const BodyStrategies& b);
std::vector<StrategySummary> strategy_table(const std::vector<std::string>& names,
                                            const EnumerateOptions& opt = {});

struct PairEntry {
  std::string a;
  std::string b;
  double q = 0.0;
  double l_max = 0.0;      // longest vectors aligned
  double upper = 0.0;      // Q / l_max
  bool has_lower = false;
  double l_min = 0.0;      // best orientation found
  double lower = 0.0;      // Q / l_min
};

struct PairTableOptions {
  EnumerateOptions enumerate;
  OrientOptions orient;
  bool compute_lower = true;
  /** Skip the orientation search for pairs containing these bodies. */
  std::vector<std::string> skip_lower;
  /** Restart count for pairs in skip_lower when > 0 instead of skipping. */
  int reduced_restarts = 0;
};

/** Upper triangle of Q/L for every pair of `names`. */
std::vector<PairEntry> pair_table(const std::vector<std::string>& names,
                                  const PairTableOptions& opt = {});

struct CurvePoint {
  double phi = 0.0;
  double l = 0.0;
};

/** Local bound of two polygons against the rotation angle, phi in [0, max]. */
std::vector<CurvePoint> polygon_curve(int ma, int mb, int steps, double phi_max);

/** How sweep_point finds the exact bound of the scaled integer matrix. */
enum class SweepMethod {
  kAuto,  // cells for m > 30 and lambda > 0, branch and bound otherwise
  kBranchAndBound,
  kCells,  // ShiftedGram; needs lambda > 0
};

struct SweepRecord {
  double lambda = 0.0;
  double q = 0.0;
  double l_lower = 0.0;
  double l_upper = 0.0;
  double ratio_lower = 0.0;  // Q / l_upper
  double ratio_upper = 0.0;  // Q / l_lower
  bool certified = true;     // lambda <= m/(2d)
  int64_t scale = 0;
  int64_t int_value = 0;
  double delta_sum = 0.0;
  std::vector<int> witness_a;
  std::vector<int> witness_b;
  uint64_t nodes = 0;
  double seconds = 0.0;
  std::string method;  // "bb" or "cells"
};

/** Q, L bracket and ratios of build(A, A, I) shifted by lambda. */
SweepRecord sweep_point(const VertexSet& a, double lambda, int64_t scale,
                        const BBOptions& opt = {},
                        SweepMethod method = SweepMethod::kAuto);

std::vector<SweepRecord> sweep(const VertexSet& a, double from, double to,
                               int steps, int64_t scale,
                               const BBOptions& opt = {},
                               SweepMethod method = SweepMethod::kAuto);

}  // namespace platobell
