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

#include "platobell/vertex_set.hpp"

#include <cmath>

#include "platobell/errors.hpp"

namespace platobell {

namespace {

constexpr double kAntipodeTol = 1e-9;

// +1 if a > b lexicographically, -1 if a < b, 0 if equal within tol.
int lex_compare(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > 1e-12) return a[k] > b[k] ? 1 : -1;
  }
  return 0;
}

// Index of the row equal to -row(i), or -1.
std::vector<int> antipode_map(const Eigen::MatrixXd& rows, double tol) {
  const int m = static_cast<int>(rows.rows());
  std::vector<int> partner(m, -1);
  for (int i = 0; i < m; ++i) {
    int found = 0;
    for (int j = 0; j < m; ++j) {
      if ((rows.row(i) + rows.row(j)).norm() <= tol) {
        partner[i] = j;
        ++found;
      }
    }
    if (found != 1) partner[i] = -1;
  }
  return partner;
}

}  // namespace

Eigen::MatrixXd VertexSet::weighted() const {
  return weights.asDiagonal() * vectors;
}

VertexSet make_vertex_set(std::string name, const Eigen::MatrixXd& rows) {
  VertexSet v;
  v.name = std::move(name);
  v.d = static_cast<int>(rows.cols());
  v.vectors = rows;
  v.weights = Eigen::VectorXd::Ones(rows.rows());
  v.centrally_symmetric = detect_central_symmetry(rows);
  return v;
}

bool detect_central_symmetry(const Eigen::MatrixXd& rows, double tol) {
  if (rows.rows() == 0 || rows.rows() % 2 != 0) return false;
  for (int p : antipode_map(rows, tol)) {
    if (p < 0) return false;
  }
  return true;
}

SemiorthReport check_semiorthogonal(const VertexSet& v, double tol) {
  SemiorthReport r;
  const Eigen::MatrixXd w = v.weighted();
  r.gram = w.transpose() * w;
  r.target = v.weights.squaredNorm() / v.d;
  const Eigen::MatrixXd dev =
      r.gram - r.target * Eigen::MatrixXd::Identity(v.d, v.d);
  r.max_abs_deviation = dev.cwiseAbs().maxCoeff();
  r.passed = r.max_abs_deviation <= tol;
  return r;
}

double max_unit_norm_deviation(const VertexSet& v) {
  double worst = 0.0;
  for (int i = 0; i < v.m(); ++i) {
    if (v.weights[i] != 1.0) continue;
    worst = std::max(worst, std::abs(v.vectors.row(i).norm() - 1.0));
  }
  return worst;
}

VertexSet halve(const VertexSet& v, HalvePolicy policy) {
  const std::vector<int> partner = antipode_map(v.vectors, kAntipodeTol);
  for (int p : partner) {
    if (p < 0 || v.m() % 2 != 0)
      throw ValidationError("halve: vertex set '" + v.name +
                            "' is not centrally symmetric");
  }
  std::vector<int> keep;
  for (int i = 0; i < v.m(); ++i) {
    const int j = partner[i];
    bool take;
    if (policy == HalvePolicy::kFirstListed) {
      take = i < j;
    } else {
      take = lex_compare(v.row(i), v.row(j)) > 0;
    }
    if (take) keep.push_back(i);
  }
  VertexSet h;
  h.name = v.name + " (halved)";
  h.d = v.d;
  h.vectors.resize(static_cast<Eigen::Index>(keep.size()), v.d);
  h.weights.resize(static_cast<Eigen::Index>(keep.size()));
  for (size_t k = 0; k < keep.size(); ++k) {
    h.vectors.row(static_cast<Eigen::Index>(k)) = v.vectors.row(keep[k]);
    h.weights[static_cast<Eigen::Index>(k)] = v.weights[keep[k]];
  }
  h.centrally_symmetric = false;
  return h;
}

VertexSet transform(const VertexSet& v, const Eigen::MatrixXd& o) {
  if (o.rows() != v.d || o.cols() != v.d)
    throw ValidationError("transform: dimension mismatch");
  VertexSet r = v;
  r.vectors = v.vectors * o.transpose();
  return r;
}

VertexSet unhalve(const VertexSet& v) {
  VertexSet r;
  r.name = v.name;
  r.d = v.d;
  r.vectors.resize(2 * v.m(), v.d);
  r.vectors << v.vectors, -v.vectors;
  r.weights.resize(2 * v.m());
  r.weights << v.weights, v.weights;
  r.centrally_symmetric = true;
  return r;
}

}  // namespace platobell
