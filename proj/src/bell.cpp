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

#include "platobell/bell.hpp"

#include <cmath>
#include <sstream>

#include "platobell/errors.hpp"

namespace platobell {

BellMatrix build(const VertexSet& a, const VertexSet& b,
                 const OrthogonalTransform& o) {
  if (a.d != b.d) throw ValidationError("build: dimension mismatch");
  if (o.d() != a.d) throw ValidationError("build: transform has wrong size");
  OrthogonalTransform checked = OrthogonalTransform::from_matrix(o.matrix);
  checked.angles = o.angles;
  const Eigen::MatrixXd m = a.weighted() * (b.weighted() * o.matrix.transpose()).transpose();
  return BellMatrix(m, BellProvenance{a, b, checked, 0.0});
}

BellMatrix diagonal_shift(const BellMatrix& m, double lambda) {
  if (m.rows() != m.cols())
    throw ValidationError("diagonal_shift: matrix is not square");
  if (lambda == 0.0) return m;
  Eigen::MatrixXd e = m.entries();
  e.diagonal().array() -= lambda;
  std::optional<BellProvenance> prov = m.provenance();
  std::string warning;
  if (prov) {
    prov->lambda += lambda;
    const double limit = static_cast<double>(prov->a.m()) / (2.0 * prov->a.d);
    if (prov->lambda > limit * (1 + 1e-12)) {
      std::ostringstream os;
      os << "lambda " << prov->lambda << " exceeds m_A/(2d) = " << limit
         << "; the shifted quantum bound is not certified";
      warning = os.str();
    }
  }
  return BellMatrix(std::move(e), std::move(prov), std::move(warning));
}

double quantum_bound_formula(const VertexSet& a, const VertexSet& b) {
  if (a.d != b.d) throw ValidationError("quantum_bound_formula: dimension mismatch");
  if (!check_semiorthogonal(a).passed || !check_semiorthogonal(b).passed)
    throw ValidationError(
        "quantum_bound_formula: a vertex set is not semiorthogonal, the "
        "closed form would only be a lower bound");
  return static_cast<double>(a.m()) * b.m() / a.d;
}

double quantum_bound_svd(const BellMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const double scale = std::sqrt(static_cast<double>(m.rows()) * m.cols());
  const auto& prov = m.provenance();
  if (prov && prov->lambda == 0.0) {
    // M = A B'^T with thin factors; sigma(M) = sigma(R_A R_B^T).
    const Eigen::MatrixXd fa = prov->a.weighted();
    const Eigen::MatrixXd fb = prov->b.weighted() * prov->o.matrix.transpose();
    const int d = prov->a.d;
    auto r_factor = [d](const Eigen::MatrixXd& f) {
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(f);
      const int k = std::min<int>(static_cast<int>(f.rows()), d);
      return Eigen::MatrixXd(
          qr.matrixQR().topRows(k).triangularView<Eigen::Upper>());
    };
    const Eigen::MatrixXd core = r_factor(fa) * r_factor(fb).transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(core);
    return scale * svd.singularValues()(0);
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m.entries());
  return scale * svd.singularValues()(0);
}

double quantum_bound_shifted(const VertexSet& a, double lambda) {
  if (!check_semiorthogonal(a).passed)
    throw ValidationError("quantum_bound_shifted: set is not semiorthogonal");
  const double m = a.m();
  if (lambda < 0 || lambda > m / (2.0 * a.d) * (1 + 1e-12))
    throw ValidationError("quantum_bound_shifted: lambda outside [0, m/(2d)]");
  return m * m / a.d - lambda * m;
}

ReducedBell reduce_marginals(const MarginalBell& g) {
  const Eigen::Index ma = g.corr.rows(), mb = g.corr.cols();
  if (g.mA.size() != ma || g.mB.size() != mb)
    throw ValidationError("reduce_marginals: inconsistent dimensions");
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(ma + 1, mb + 1);
  r.topLeftCorner(ma, mb) = g.corr;
  r.col(mb).head(ma) = g.mA;
  r.row(ma).head(mb) = g.mB.transpose();
  const double corner = g.mA.cwiseAbs().sum() + g.mB.cwiseAbs().sum() +
                        g.corr.cwiseAbs().sum();
  r(ma, mb) = corner;
  return ReducedBell{BellMatrix(std::move(r)), corner};
}

double evaluate(const Eigen::MatrixXd& m, const std::vector<int>& a,
                const std::vector<int>& b) {
  if (static_cast<Eigen::Index>(a.size()) != m.rows() ||
      static_cast<Eigen::Index>(b.size()) != m.cols())
    throw ValidationError("evaluate: strategy length mismatch");
  double total = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double row = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) row += m(i, j) * b[j];
    total += a[i] * row;
  }
  return total;
}

}  // namespace platobell
