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
#include <optional>
#include <string>

#include "platobell/transform.hpp"
#include "platobell/vertex_set.hpp"

namespace platobell {

struct BellProvenance {
  VertexSet a;
  VertexSet b;
  OrthogonalTransform o;
  double lambda = 0.0;
};

/** Correlation Bell matrix M; sum_ij M_ij <a_i b_j> <= L. */
class BellMatrix {
 public:
  BellMatrix() = default;
  explicit BellMatrix(Eigen::MatrixXd entries,
                      std::optional<BellProvenance> prov = std::nullopt,
                      std::string warning = {})
      : m_(std::move(entries)), prov_(std::move(prov)),
        warning_(std::move(warning)) {}

  const Eigen::MatrixXd& entries() const { return m_; }
  int rows() const { return static_cast<int>(m_.rows()); }
  int cols() const { return static_cast<int>(m_.cols()); }
  double operator()(int i, int j) const { return m_(i, j); }

  const std::optional<BellProvenance>& provenance() const { return prov_; }
  double lambda() const { return prov_ ? prov_->lambda : 0.0; }
  /** Non-empty when a shift left the certified range. */
  const std::string& warning() const { return warning_; }

 private:
  Eigen::MatrixXd m_;
  std::optional<BellProvenance> prov_;
  std::string warning_;
};

/** Bell expression with single-party terms. */
struct MarginalBell {
  Eigen::VectorXd mA;
  Eigen::VectorXd mB;
  Eigen::MatrixXd corr;
};

struct ReducedBell {
  BellMatrix matrix;  // (m_A+1) x (m_B+1)
  double offset = 0.0;
};

/** M_ij = w_i A_i . (O w_j B_j). */
BellMatrix build(const VertexSet& a, const VertexSet& b,
                 const OrthogonalTransform& o);

/** M - lambda I. Out-of-range lambda sets warning() rather than throwing. */
BellMatrix diagonal_shift(const BellMatrix& m, double lambda);

/** m_A m_B / d; refuses unless both sets are semiorthogonal. */
double quantum_bound_formula(const VertexSet& a, const VertexSet& b);

/** sqrt(m_A m_B) sigma_max(M). */
double quantum_bound_svd(const BellMatrix& m);

/** m_A^2/d - lambda m_A, for lambda <= m_A/(2d). */
double quantum_bound_shifted(const VertexSet& a, double lambda);

/** Correlation form with one extra setting per side; L(G) = L(M') - offset. */
ReducedBell reduce_marginals(const MarginalBell& g);

/** Value of the Bell expression for deterministic +-1 strategies. */
double evaluate(const Eigen::MatrixXd& m, const std::vector<int>& a,
                const std::vector<int>& b);

}  // namespace platobell
