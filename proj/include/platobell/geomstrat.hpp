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

#include "platobell/vertex_set.hpp"

namespace platobell {

/** Length-m vector of +-1 entries, first entry +1 in canonical form. */
using SignStrategy = std::vector<int>;

/**
 * Canonical strategies packed one per row of 64-bit words. Bit i set means
 * entry i is -1; bit 0 is always clear.
 */
class StrategySet {
 public:
  StrategySet() = default;
  explicit StrategySet(int m);

  int m() const { return m_; }
  int words() const { return words_; }
  size_t size() const { return words_ ? bits_.size() / words_ : 0; }

  const uint64_t* row(size_t k) const { return bits_.data() + k * words_; }
  int sign(size_t k, int i) const {
    return ((row(k)[i >> 6] >> (i & 63)) & 1) ? -1 : 1;
  }
  SignStrategy strategy(size_t k) const;

  /** Appends a row; flips it first if entry 0 is -1. */
  void push_canonical(const uint64_t* words);
  void push(const SignStrategy& s);
  /** Sorts rows into a deterministic order and drops duplicates. */
  void sort_unique();

  const std::vector<uint64_t>& raw() const { return bits_; }

 private:
  int m_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

struct EnumerateOptions {
  int runs = 3;
  double eps = 1e-7;
  uint64_t seed = 1;
  /** Drop candidates whose open cell is empty for the unperturbed rows. */
  bool exact_filter = true;
  int threads = 0;
  /** Progress lines on stderr. */
  bool verbose = false;
};

/**
 * All canonical sign vectors sign(V q) over directions q with no zero entry.
 * Antipodal pairs must be merged first.
 */
StrategySet enumerate_strategies(const VertexSet& v,
                                 const EnumerateOptions& opt = {});

/** True if some q has s_i (V_i . q) > 0 for every row. */
bool is_realizable(const Eigen::MatrixXd& rows, const SignStrategy& s,
                   double tol = 1e-9);

/** Merges antipodal pairs into one row carrying the summed weight. */
VertexSet merge_antipodal(const VertexSet& v);

struct LengthGroup {
  double length = 0.0;
  long long count = 0;
};

struct StrategyVectorSet {
  int d = 0;
  /** One row per strategy vector. */
  Eigen::MatrixXd vectors;
  bool include_antipodes = false;
  /** Decreasing lengths. */
  std::vector<LengthGroup> groups;

  long long size() const { return vectors.rows(); }
  double longest() const { return groups.empty() ? 0.0 : groups[0].length; }
};

StrategyVectorSet strategy_vectors(const VertexSet& v, const StrategySet& s,
                                   bool include_antipodes,
                                   double rel_tol = 1e-7);

/** Strategies of `v` (merged when centrally symmetric) and their vectors. */
struct BodyStrategies {
  VertexSet merged;
  StrategySet strategies;
  StrategyVectorSet vectors;  // canonical, no antipodes
};
BodyStrategies body_strategies(const VertexSet& v,
                               const EnumerateOptions& opt = {});

/**
 * max over s in sb of sum_i |A_i . (O s)|: Alice's best response against
 * every geometric strategy of Bob.
 */
double local_bound(const VertexSet& a, const StrategyVectorSet& sb,
                   const Eigen::MatrixXd& o, int threads = 0);

/** max over pairs |s_A . (O s_B)|. */
double local_bound_pairwise(const StrategyVectorSet& sa,
                            const StrategyVectorSet& sb,
                            const Eigen::MatrixXd& o, int threads = 0);

/** 2 sum_{k<d} C(m-1, k): generic number of signed strategies. */
uint64_t region_count(int m, int d);

}  // namespace platobell
