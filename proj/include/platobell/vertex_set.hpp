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
#include <string>
#include <vector>

namespace platobell {

/**
 * A finite set of vectors in R^d, stored one per row.
 *
 * Generators emit unit rows with weight 1. Rows with other weights only
 * come out of merge_antipodal().
 */
struct VertexSet {
  std::string name;
  int d = 0;
  Eigen::MatrixXd vectors;
  Eigen::VectorXd weights;
  bool centrally_symmetric = false;

  int m() const { return static_cast<int>(vectors.rows()); }
  Eigen::VectorXd row(int i) const { return vectors.row(i).transpose(); }
  /** Rows multiplied by their weights. */
  Eigen::MatrixXd weighted() const;
};

struct SemiorthReport {
  Eigen::MatrixXd gram;
  double target = 0.0;
  double max_abs_deviation = 0.0;
  bool passed = false;
};

/** Unit-weight set from raw rows; central symmetry is detected. */
VertexSet make_vertex_set(std::string name, const Eigen::MatrixXd& rows);

/** True if every row has exactly one partner equal to its negative. */
bool detect_central_symmetry(const Eigen::MatrixXd& rows, double tol = 1e-9);

/**
 * Weighted column Gram matrix sum_i w_i^2 V_ij V_ik compared against
 * (sum_i w_i^2 / d) I.
 */
SemiorthReport check_semiorthogonal(const VertexSet& v, double tol = 1e-9);

/** Largest deviation of a unit-weight row norm from 1. */
double max_unit_norm_deviation(const VertexSet& v);

enum class HalvePolicy {
  kLexLarger,    // keep the lexicographically larger row of each pair
  kFirstListed,  // keep whichever row appears first
};

VertexSet halve(const VertexSet& v, HalvePolicy policy = HalvePolicy::kLexLarger);

/** Rows mapped by x -> O x. */
VertexSet transform(const VertexSet& v, const Eigen::MatrixXd& o);

/** Rows plus their negatives, undoing halve() up to order. */
VertexSet unhalve(const VertexSet& v);

}  // namespace platobell
