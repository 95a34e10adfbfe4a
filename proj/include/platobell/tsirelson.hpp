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
#include <vector>

#include "platobell/bell.hpp"

namespace platobell {

using HermitianOp = Eigen::MatrixXcd;

/** Mutually anticommuting Hermitian involutions on C^D. */
struct GammaSet {
  int d = 0;
  int D = 0;
  std::vector<HermitianOp> ops;
};

/**
 * d operators from Pauli tensor chains, D = 2^floor(d/2); 2 <= d <= 12.
 * d = 2 gives {sigma_x, sigma_z}.
 */
GammaSet gamma_operators(int d);

/** sum_i v_i gamma_i. */
HermitianOp alice_observable(const Eigen::VectorXd& v, const GammaSet& g);
/** sum_i v_i gamma_i^T. */
HermitianOp bob_observable(const Eigen::VectorXd& v, const GammaSet& g);

/** <Phi| A (x) B |Phi> on the maximally entangled state of two C^D. */
double max_entangled_expectation(const HermitianOp& a, const HermitianOp& b);

/** Correlation of the observables built from unit vectors a and b. */
double correlation(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                   const GammaSet& g);

/** sum_ij M_ij correlation(a_i, b_j); vectors are rows. */
double quantum_value(const BellMatrix& m, const Eigen::MatrixXd& a_vecs,
                     const Eigen::MatrixXd& b_vecs, const GammaSet& g);

struct EmbeddedStrategy {
  Eigen::MatrixXd a;  // one row per observable of A
  Eigen::MatrixXd b;
};

/**
 * Real vectors of length 2 D_A D_B with a_i . b_j = <psi| A_i (x) B_j |psi>.
 * The state is indexed as psi[alpha * D_B + beta].
 */
EmbeddedStrategy embed_quantum_strategy(const Eigen::VectorXcd& state,
                                        const std::vector<HermitianOp>& ops_a,
                                        const std::vector<HermitianOp>& ops_b);

}  // namespace platobell
