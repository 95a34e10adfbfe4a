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

namespace platobell {

/**
 * A d x d orthogonal matrix, optionally with the plane-rotation angles it
 * was built from (empty when entered as a raw matrix).
 */
struct OrthogonalTransform {
  Eigen::MatrixXd matrix;
  std::vector<double> angles;

  int d() const { return static_cast<int>(matrix.rows()); }
  static OrthogonalTransform identity(int d);
  /** Checks ||O^T O - I||_max <= tol; throws ValidationError otherwise. */
  static OrthogonalTransform from_matrix(const Eigen::MatrixXd& o,
                                         double tol = 1e-8);
};

/** Number of plane-rotation angles for dimension d. */
inline int angle_count(int d) { return d * (d - 1) / 2; }

/**
 * Product G(0,1,t_0) G(0,2,t_1) ... G(d-2,d-1,t_last) over planes in
 * lexicographic order. G(p,q,t) rotates e_p towards e_q.
 */
OrthogonalTransform angles_to_transform(const std::vector<double>& angles,
                                        int d);

}  // namespace platobell
