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

#include "platobell/transform.hpp"

#include <cmath>
#include <string>

#include "platobell/errors.hpp"

namespace platobell {

OrthogonalTransform OrthogonalTransform::identity(int d) {
  OrthogonalTransform o;
  o.matrix = Eigen::MatrixXd::Identity(d, d);
  o.angles.assign(angle_count(d), 0.0);
  return o;
}

OrthogonalTransform OrthogonalTransform::from_matrix(const Eigen::MatrixXd& m,
                                                     double tol) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw ValidationError("orthogonal transform must be square");
  const double dev =
      (m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (dev > tol)
    throw ValidationError("matrix is not orthogonal (deviation " +
                          std::to_string(dev) + ")");
  OrthogonalTransform o;
  o.matrix = m;
  return o;
}

OrthogonalTransform angles_to_transform(const std::vector<double>& angles,
                                        int d) {
  if (d < 1 || static_cast<int>(angles.size()) != angle_count(d))
    throw ValidationError("angles_to_transform: expected " +
                          std::to_string(angle_count(d)) + " angles");
  Eigen::MatrixXd o = Eigen::MatrixXd::Identity(d, d);
  int k = 0;
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q, ++k) {
      const double c = std::cos(angles[k]), s = std::sin(angles[k]);
      // o <- o * G(p, q): only columns p and q change.
      const Eigen::VectorXd cp = o.col(p), cq = o.col(q);
      o.col(p) = c * cp + s * cq;
      o.col(q) = -s * cp + c * cq;
    }
  OrthogonalTransform t;
  t.matrix = o;
  t.angles = angles;
  return t;
}

}  // namespace platobell
