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
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace platobell::testutil {

inline Eigen::MatrixXd random_orthogonal(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::MatrixXd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = n(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return qr.householderQ();
}

inline Eigen::MatrixXd random_unit_rows(int m, int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::MatrixXd v(m, d);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) v(i, j) = n(rng);
    v.row(i).normalize();
  }
  return v;
}

// Every sign vector of the rows, each against the column-wise best response.
inline double exhaustive_local(const Eigen::MatrixXd& m) {
  const int ma = static_cast<int>(m.rows()), mb = static_cast<int>(m.cols());
  double best = -1e300;
  for (uint64_t x = 0; x < (uint64_t{1} << ma); ++x) {
    double v = 0;
    for (int j = 0; j < mb; ++j) {
      double col = 0;
      for (int i = 0; i < ma; ++i) col += (((x >> i) & 1) ? -1 : 1) * m(i, j);
      v += std::abs(col);
    }
    best = std::max(best, v);
  }
  return best;
}

/** max over a, b of sum M^A_i a_i + sum M^B_j b_j + sum M_ij a_i b_j. */
inline double exhaustive_marginal(const Eigen::VectorXd& ma,
                                  const Eigen::VectorXd& mb,
                                  const Eigen::MatrixXd& corr) {
  const int na = static_cast<int>(ma.size()), nb = static_cast<int>(mb.size());
  double best = -1e300;
  for (uint64_t x = 0; x < (uint64_t{1} << na); ++x)
    for (uint64_t y = 0; y < (uint64_t{1} << nb); ++y) {
      double v = 0;
      for (int i = 0; i < na; ++i) v += (((x >> i) & 1) ? -1 : 1) * ma[i];
      for (int j = 0; j < nb; ++j) v += (((y >> j) & 1) ? -1 : 1) * mb[j];
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
          v += ((((x >> i) ^ (y >> j)) & 1) ? -1 : 1) * corr(i, j);
      best = std::max(best, v);
    }
  return best;
}

}  // namespace platobell::testutil
