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

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "platobell/bbsolver.hpp"

namespace platobell {

struct ShiftedGramOptions {
  bool verbose = false;
  /** Give up once the near-optimal search has produced this many pairs. */
  uint64_t max_pairs = 200000000;
};

/**
 * Local bounds of M = A A^T - lambda I that use the structure instead of
 * branching on the m x m matrix.
 *
 * For a, b in {+-1}^m let C = {i : a_i = b_i}, E the rest and
 * S_X = sum_{i in X} a_i A_i. Then
 *   a^T M b = |S_C|^2 - |S_E|^2 - lambda (|C| - |E|).
 * Write c_i = a_i on C and 0 on E, f(c) = |sum c_i A_i|^2 - 2 lambda |c| +
 * lambda m. Over y in R^d, c_i = sign(A_i . y) if |A_i . y| > 1 else 0 is
 * the pointwise best c, so the cells of the affine arrangement
 * {A_i . y = +-1} carry every c that can be optimal, and any pair whose
 * S_C / lambda falls in a cell is within a computable budget of that
 * cell's pattern. Pairs above a threshold are enumerated from the cells
 * and scored exactly.
 */
class ShiftedGram {
 public:
  /** Rows of `a` must span R^d. */
  ShiftedGram(const Eigen::MatrixXd& a, double lambda,
              const ShiftedGramOptions& opt = {});

  int m() const { return static_cast<int>(a_.rows()); }
  int d() const { return static_cast<int>(a_.cols()); }
  double lambda() const { return lambda_; }

  /** Distinct cells, sorted by decreasing f. */
  size_t cells() const { return f_.size(); }
  std::vector<int> cell_pattern(size_t k) const;
  double cell_value(size_t k) const { return f_[k]; }
  uint64_t vertices() const { return vertices_; }

  /** max f over the cells; an upper bound on L(M). */
  double cell_bound() const { return f_.empty() ? 0.0 : f_.front(); }

  /** a^T M b from the structured formula. */
  double value(const std::vector<int>& a, const std::vector<int>& b) const;

  /**
   * Calls fn on every pair with a^T M b >= t, up to the global sign. May
   * also report pairs a little below t. Returns the number of calls.
   */
  uint64_t for_each_pair_above(
      double t,
      const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) const;

  /** Exact L(M) with a witness pair. */
  struct RealResult {
    double value = 0.0;
    std::vector<int> witness_a;
    std::vector<int> witness_b;
    uint64_t pairs = 0;
  };
  RealResult local_bound() const;

  /**
   * Exact L of an integer matrix with sum_ij |scale M_ij - mi_ij| <= slack.
   * nodes counts the pairs scored.
   */
  IntBoundResult local_bound_int(const IntMatrix& mi, int64_t scale,
                                 double slack) const;

  /**
   * Same bracket as local_bound_bracket for a matrix m equal to
   * A A^T - lambda I up to rounding.
   */
  BoundBracket bracket(const Eigen::MatrixXd& m, int64_t scale) const;

 private:
  void enumerate_cells();
  void emit_vertex(const Eigen::VectorXd& u, const std::vector<int>& tight);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> seeds(size_t count) const;

  Eigen::MatrixXd a_;
  double lambda_;
  ShiftedGramOptions opt_;
  int words_ = 0;
  std::vector<uint64_t> cells_;  // per cell: outside mask, negative mask
  std::vector<double> f_;
  uint64_t vertices_ = 0;
};

}  // namespace platobell
