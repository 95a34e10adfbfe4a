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

#include "platobell/tsirelson.hpp"

#include <cmath>
#include <complex>

#include "platobell/errors.hpp"

namespace platobell {

namespace {

using cd = std::complex<double>;

Eigen::MatrixXcd pauli(char which) {
  Eigen::MatrixXcd s(2, 2);
  switch (which) {
    case 'x': s << 0, 1, 1, 0; break;
    case 'y': s << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'z': s << 1, 0, 0, -1; break;
    default: s = Eigen::MatrixXcd::Identity(2, 2);
  }
  return s;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// sigma_z^(k) (x) middle (x) I^(n-k-1)
Eigen::MatrixXcd chain(int n, int k, char middle) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int f = 0; f < n; ++f)
    out = kron(out, pauli(f < k ? 'z' : f == k ? middle : 'i'));
  return out;
}

void check_unit(const Eigen::VectorXd& v, int d) {
  if (v.size() != d) throw ValidationError("vector has the wrong dimension");
  if (std::abs(v.norm() - 1.0) > 1e-9)
    throw ValidationError("measurement vector is not a unit vector");
}

}  // namespace

GammaSet gamma_operators(int d) {
  if (d < 2 || d > 12) throw ValidationError("gamma_operators: need 2 <= d <= 12");
  GammaSet g;
  g.d = d;
  if (d == 2) {
    g.D = 2;
    g.ops = {pauli('x'), pauli('z')};
    return g;
  }
  const int n = d / 2;
  g.D = 1 << n;
  for (int k = 0; k < n; ++k) {
    g.ops.push_back(chain(n, k, 'x'));
    g.ops.push_back(chain(n, k, 'y'));
  }
  Eigen::MatrixXcd last = Eigen::MatrixXcd::Identity(1, 1);
  for (int f = 0; f < n; ++f) last = kron(last, pauli('z'));
  g.ops.push_back(last);
  g.ops.resize(d);
  return g;
}

HermitianOp alice_observable(const Eigen::VectorXd& v, const GammaSet& g) {
  check_unit(v, g.d);
  HermitianOp a = HermitianOp::Zero(g.D, g.D);
  for (int i = 0; i < g.d; ++i) a += v[i] * g.ops[i];
  return a;
}

HermitianOp bob_observable(const Eigen::VectorXd& v, const GammaSet& g) {
  check_unit(v, g.d);
  HermitianOp b = HermitianOp::Zero(g.D, g.D);
  for (int i = 0; i < g.d; ++i) b += v[i] * g.ops[i].transpose();
  return b;
}

double max_entangled_expectation(const HermitianOp& a, const HermitianOp& b) {
  // <Phi|A (x) B|Phi> = (1/D) sum_{mu,nu} A_{mu nu} B_{mu nu}
  if (a.rows() != b.rows()) throw ValidationError("operator sizes differ");
  return (a.cwiseProduct(b).sum() / static_cast<double>(a.rows())).real();
}

double correlation(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                   const GammaSet& g) {
  return max_entangled_expectation(alice_observable(a, g), bob_observable(b, g));
}

double quantum_value(const BellMatrix& m, const Eigen::MatrixXd& a_vecs,
                     const Eigen::MatrixXd& b_vecs, const GammaSet& g) {
  if (a_vecs.rows() != m.rows() || b_vecs.rows() != m.cols())
    throw ValidationError("quantum_value: vector count does not match M");
  std::vector<HermitianOp> as, bs;
  for (Eigen::Index i = 0; i < a_vecs.rows(); ++i)
    as.push_back(alice_observable(a_vecs.row(i).transpose(), g));
  for (Eigen::Index j = 0; j < b_vecs.rows(); ++j)
    bs.push_back(bob_observable(b_vecs.row(j).transpose(), g));
  double total = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0.0) total += m(i, j) * max_entangled_expectation(as[i], bs[j]);
  return total;
}

EmbeddedStrategy embed_quantum_strategy(const Eigen::VectorXcd& state,
                                        const std::vector<HermitianOp>& ops_a,
                                        const std::vector<HermitianOp>& ops_b) {
  if (ops_a.empty() || ops_b.empty())
    throw ValidationError("embed_quantum_strategy: no operators");
  const Eigen::Index da = ops_a[0].rows(), db = ops_b[0].rows();
  if (state.size() != da * db)
    throw ValidationError("embed_quantum_strategy: state dimension mismatch");
  if (std::abs(state.norm() - 1.0) > 1e-9)
    throw ValidationError("embed_quantum_strategy: state is not normalized");
  auto check = [](const HermitianOp& o, Eigen::Index dim) {
    if (o.rows() != dim || o.cols() != dim)
      throw ValidationError("embed_quantum_strategy: operator size mismatch");
    if ((o - o.adjoint()).cwiseAbs().maxCoeff() > 1e-10 ||
        (o * o - HermitianOp::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-10)
      throw ValidationError(
          "embed_quantum_strategy: operator is not a Hermitian involution");
  };
  // The state as a D_A x D_B matrix Psi; (A (x) I) psi is A Psi and
  // (I (x) B) psi is Psi B^T.
  Eigen::MatrixXcd psi(da, db);
  for (Eigen::Index x = 0; x < da; ++x)
    for (Eigen::Index y = 0; y < db; ++y) psi(x, y) = state[x * db + y];
  auto realify = [](const Eigen::MatrixXcd& v) {
    Eigen::RowVectorXd out(2 * v.size());
    Eigen::Index k = 0;
    for (Eigen::Index x = 0; x < v.rows(); ++x)
      for (Eigen::Index y = 0; y < v.cols(); ++y, ++k) {
        out[k] = v(x, y).real();
        out[v.size() + k] = v(x, y).imag();
      }
    return out;
  };
  EmbeddedStrategy e;
  e.a.resize(static_cast<Eigen::Index>(ops_a.size()), 2 * da * db);
  e.b.resize(static_cast<Eigen::Index>(ops_b.size()), 2 * da * db);
  for (size_t i = 0; i < ops_a.size(); ++i) {
    check(ops_a[i], da);
    e.a.row(i) = realify(ops_a[i] * psi);
  }
  for (size_t j = 0; j < ops_b.size(); ++j) {
    check(ops_b[j], db);
    e.b.row(j) = realify(psi * ops_b[j].transpose());
  }
  return e;
}

}  // namespace platobell
