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
#include <vector>

#include "platobell/bell.hpp"

namespace platobell {

/** Integer Bell matrix for the exact solver; sum of |entries| <= 2^31. */
class IntMatrix {
 public:
  static constexpr int64_t kAbsSumLimit = int64_t{1} << 31;

  IntMatrix() = default;
  IntMatrix(int rows, int cols, std::vector<int64_t> entries);
  /** Rejects non-integral entries. */
  static IntMatrix from_real(const Eigen::MatrixXd& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int64_t operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
  int64_t abs_sum() const { return abs_sum_; }
  IntMatrix transposed() const;
  Eigen::MatrixXd to_real() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> e_;
  int64_t abs_sum_ = 0;
};

struct IntBoundResult {
  int64_t value = 0;
  std::vector<int> witness_a;
  std::vector<int> witness_b;
  uint64_t nodes = 0;
  double wall_time = 0.0;
};

struct BBOptions {
  int threads = 0;
  /**
   * Replace the row-remainder bound with the exact local bound of the
   * unfixed columns, computed on growing suffixes first. Tighter, same
   * answer.
   */
  bool russian_doll = false;
  /** Known lower bound on the optimum; only speeds up pruning. */
  int64_t initial_incumbent = INT64_MIN;
  /** Progress on stderr. */
  bool verbose = false;
};

/** Exact max of sum_ij M_ij a_i b_j over +-1 vectors. */
IntBoundResult local_bound_int(const IntMatrix& m, const BBOptions& opt = {});

struct BoundBracket {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<int> witness_a;
  std::vector<int> witness_b;
  /** Scale actually used after the overflow fallback. */
  int64_t scale = 0;
  int64_t int_value = 0;
  /** sum of scale*M - floor(scale*M). */
  double delta_sum = 0.0;
  uint64_t nodes = 0;
};

/**
 * floor(scale*M) with entries within 1e-9 of an integer snapped to it, and
 * the non-negative remainder.
 */
IntMatrix floor_scaled(const Eigen::MatrixXd& m, int64_t scale,
                       double* delta_sum);

/** Largest power of ten <= requested that keeps scale*sum|M| within 2^31. */
int64_t fit_scale(const Eigen::MatrixXd& m, int64_t requested);

/**
 * lower <= L(M) <= upper from the exact bound of floor(scale*M). Falls back
 * to a smaller power of ten when the requested scale would overflow.
 */
BoundBracket local_bound_bracket(const BellMatrix& m, int64_t scale = 1000000,
                                 const BBOptions& opt = {});

/** Exhaustive over the smaller side; min(m_A, m_B) <= 26. */
double brute_force_local(const Eigen::MatrixXd& m);
inline double brute_force_local(const BellMatrix& m) {
  return brute_force_local(m.entries());
}

}  // namespace platobell
