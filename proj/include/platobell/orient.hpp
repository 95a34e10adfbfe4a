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
#include <functional>
#include <vector>

#include "platobell/geomstrat.hpp"
#include "platobell/transform.hpp"
#include "platobell/vertex_set.hpp"

namespace platobell {

/** max over pairs |s_A . (O s_B)| for canonical (or signed) sets. */
double objective(const StrategyVectorSet& sa, const StrategyVectorSet& sb,
                 const OrthogonalTransform& o, int threads = 0);

/** l_x(A) l_x(B): the local bound with the longest vectors aligned. */
double max_local_bound(const StrategyVectorSet& sa, const StrategyVectorSet& sb);

/**
 * Local bound of build(A, B, O) as a function of O, precomputed once.
 * Picks pairwise strategy products or the sum over the other body's
 * vertices, whichever costs fewer dot products.
 */
class LocalBoundObjective {
 public:
  LocalBoundObjective(const BodyStrategies& a, const BodyStrategies& b,
                      int threads = 0);
  double operator()(const Eigen::MatrixXd& o) const;
  int d() const { return d_; }

 private:
  enum class Mode { kPairwise, kVerticesOfA, kVerticesOfB };
  const BodyStrategies& a_;
  const BodyStrategies& b_;
  int d_;
  int threads_;
  Mode mode_;
};

struct NelderMeadOptions {
  double initial_step = 0.3;
  double diameter_tol = 1e-10;
  int max_iterations = 5000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

/** Reflection 1, expansion 2, contraction 0.5, shrink 0.5. */
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const NelderMeadOptions& opt = {});

struct OrientOptions {
  int restarts = 200;
  uint64_t seed = 1;
  int threads = 0;
  NelderMeadOptions nm;
  /** Extra Nelder-Mead runs restarted from each converged point. */
  int polish_rounds = 8;
  bool verbose = false;
};

struct OrientationResult {
  OrthogonalTransform best_transform;
  double best_L = 0.0;
  double Q = 0.0;
  double ratio = 0.0;
  int restarts_used = 0;
  /** Best L after each restart, in restart order. */
  std::vector<double> history;
};

/** Starting angles of restart r; depends only on (seed, r). */
std::vector<double> restart_angles(int d, uint64_t seed, int r);

OrientationResult minimize_local_bound(const BodyStrategies& a,
                                       const BodyStrategies& b,
                                       const VertexSet& full_a,
                                       const VertexSet& full_b,
                                       const OrientOptions& opt = {});
OrientationResult minimize_local_bound(const VertexSet& a, const VertexSet& b,
                                       const OrientOptions& opt = {});

/** Q for the pair: the closed form when allowed, else the SVD bound. */
double pair_quantum_bound(const VertexSet& a, const VertexSet& b,
                          const OrthogonalTransform& o);

}  // namespace platobell
