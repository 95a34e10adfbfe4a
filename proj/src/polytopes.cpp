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

#include "platobell/polytopes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "construct.hpp"
#include "platobell/errors.hpp"

namespace platobell {

namespace detail {

double golden() { return (1.0 + std::sqrt(5.0)) / 2.0; }

namespace {

int parity(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2;
}

std::vector<long long> key_of(const std::vector<double>& r) {
  std::vector<long long> k;
  for (double x : r) k.push_back(std::llround(x * 1e9));
  return k;
}

}  // namespace

std::vector<std::vector<double>> expand(const std::vector<double>& base,
                                        PermKind perms, SignRule rule) {
  const int n = static_cast<int>(base.size());
  std::vector<std::vector<double>> out;
  std::set<std::vector<long long>> seen;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    const int par = parity(p);
    if (perms == PermKind::kEven && par != 0) continue;
    if (perms == PermKind::kOdd && par != 1) continue;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<double> r(n);
      int minus = 0;
      for (int k = 0; k < n; ++k) {
        const bool neg = (mask >> k) & 1;
        minus += neg;
        r[k] = neg ? -base[p[k]] : base[p[k]];
      }
      const int plus = n - minus;
      if (rule == SignRule::kEvenMinus && minus % 2 != 0) continue;
      if (rule == SignRule::kEvenPlus && plus % 2 != 0) continue;
      if (rule == SignRule::kOddPlus && plus % 2 != 1) continue;
      if (seen.insert(key_of(r)).second) out.push_back(r);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows,
                          double norm) {
  const int m = static_cast<int>(rows.size());
  const int d = m ? static_cast<int>(rows[0].size()) : 0;
  Eigen::MatrixXd a(m, d);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < d; ++k) a(i, k) = rows[i][k] / norm;
  return a;
}

void append_unique(std::vector<std::vector<double>>& into,
                   const std::vector<std::vector<double>>& rows) {
  std::set<std::vector<long long>> seen;
  for (const auto& r : into) seen.insert(key_of(r));
  for (const auto& r : rows)
    if (seen.insert(key_of(r)).second) into.push_back(r);
}

}  // namespace detail

using detail::append_unique;
using detail::expand;
using detail::PermKind;
using detail::SignRule;
using detail::to_matrix;

VertexSet regular_polygon(int n) {
  if (n < 3) throw ValidationError("regular_polygon: n must be at least 3");
  Eigen::MatrixXd a(n, 2);
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    a(k, 0) = std::cos(t);
    a(k, 1) = std::sin(t);
  }
  // Exact zeros and ones where the angle is a multiple of pi/2.
  for (int k = 0; k < n; ++k) {
    if ((4 * k) % n == 0) {
      const int q = (4 * k) / n;
      const double c[4] = {1, 0, -1, 0}, s[4] = {0, 1, 0, -1};
      a(k, 0) = c[q];
      a(k, 1) = s[q];
    }
  }
  VertexSet v = make_vertex_set("polygon-" + std::to_string(n), a);
  v.centrally_symmetric = (n % 2 == 0);
  return v;
}

VertexSet simplex(int d) {
  if (d < 2) throw ValidationError("simplex: d must be at least 2");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d + 1, d);
  const double dd = d;
  for (int j = 1; j <= d; ++j) {
    const double tau = std::sqrt((dd + 1) * (dd + 1 - j) / (dd * (dd + 2 - j)));
    const double sigma = std::sqrt((dd + 1) / (dd * (dd + 1 - j) * (dd + 2 - j)));
    a(j - 1, j - 1) = tau;
    for (int i = j + 1; i <= d + 1; ++i) a(i - 1, j - 1) = -sigma;
  }
  return make_vertex_set("simplex-" + std::to_string(d), a);
}

VertexSet cross_polytope(int d) {
  if (d < 2) throw ValidationError("cross_polytope: d must be at least 2");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * d, d);
  for (int i = 0; i < d; ++i) {
    a(i, i) = 1.0;
    a(d + i, i) = -1.0;
  }
  VertexSet v = make_vertex_set("cross-" + std::to_string(d), a);
  v.centrally_symmetric = true;
  return v;
}

VertexSet hypercube(int d) {
  if (d < 2) throw ValidationError("hypercube: d must be at least 2");
  if (d > 20) throw ResourceError("hypercube: d > 20 exceeds the row guard");
  const long long m = 1LL << d;
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  Eigen::MatrixXd a(m, d);
  for (long long k = 0; k < m; ++k)
    for (int j = 0; j < d; ++j)
      a(k, j) = ((k >> (d - 1 - j)) & 1) ? s : -s;
  VertexSet v;
  v.name = "hypercube-" + std::to_string(d);
  v.d = d;
  v.vectors = a;
  v.weights = Eigen::VectorXd::Ones(m);
  v.centrally_symmetric = true;
  return v;
}

VertexSet solid3d(const std::string& name) {
  const double phi = detail::golden();
  if (name == "tetrahedron") {
    VertexSet v = simplex(3);
    v.name = name;
    return v;
  }
  if (name == "octahedron") {
    VertexSet v = cross_polytope(3);
    v.name = name;
    return v;
  }
  if (name == "cube") {
    VertexSet v = hypercube(3);
    v.name = name;
    return v;
  }
  if (name == "icosahedron") {
    std::vector<std::vector<double>> rows;
    for (int c = 0; c < 3; ++c)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          std::vector<double> r(3, 0.0);
          r[(c + 1) % 3] = s1;
          r[(c + 2) % 3] = s2 * phi;
          rows.push_back(r);
        }
    return make_vertex_set(name, to_matrix(rows, std::sqrt(1 + phi * phi)));
  }
  if (name == "dodecahedron") {
    auto rows = expand({1, 1, 1}, PermKind::kAll, SignRule::kAll);
    for (int c = 0; c < 3; ++c)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          std::vector<double> r(3, 0.0);
          r[(c + 1) % 3] = s1 / phi;
          r[(c + 2) % 3] = s2 * phi;
          rows.push_back(r);
        }
    return make_vertex_set(name, to_matrix(rows, std::sqrt(3.0)));
  }
  throw ValidationError("solid3d: unknown name '" + name + "'");
}

namespace {

Eigen::MatrixXd tetraplex_rows() {
  const double phi = detail::golden();
  std::vector<std::vector<double>> half;
  for (int k = 0; k < 4; ++k) {
    std::vector<double> r(4, 0.0);
    r[k] = 1.0;
    half.push_back(r);
  }
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<double> r = {0.5, 0.5, 0.5, 0.5};
    for (int k = 0; k < 3; ++k)
      if ((mask >> k) & 1) r[k + 1] = -0.5;
    half.push_back(r);
  }
  // Even permutations of (phi/2, +-1/2, +-1/(2 phi), 0) keeping phi/2 positive.
  const double base[4] = {phi / 2, 0.5, 1 / (2 * phi), 0.0};
  std::vector<int> p = {0, 1, 2, 3};
  std::vector<std::vector<int>> evens;
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inv;
    if (inv % 2 == 0) evens.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  for (int s = 0; s < 4; ++s) {
    const double b[4] = {base[0], (s & 1) ? -base[1] : base[1],
                         (s & 2) ? -base[2] : base[2], 0.0};
    for (const auto& e : evens) {
      std::vector<double> r(4);
      for (int k = 0; k < 4; ++k) r[e[k]] = b[k];
      half.push_back(r);
    }
  }
  Eigen::MatrixXd a(120, 4);
  for (int i = 0; i < 60; ++i)
    for (int k = 0; k < 4; ++k) {
      a(i, k) = half[i][k];
      a(60 + i, k) = -half[i][k];
    }
  return a;
}

Eigen::MatrixXd dodecaplex_rows() {
  const double phi = detail::golden();
  const double s5 = std::sqrt(5.0);
  std::vector<std::vector<double>> rows;
  append_unique(rows, expand({0, 0, 2, 2}, PermKind::kAll, SignRule::kAll));
  append_unique(rows, expand({1, 1, 1, s5}, PermKind::kAll, SignRule::kAll));
  append_unique(rows, expand({1 / (phi * phi), phi, phi, phi}, PermKind::kAll,
                             SignRule::kAll));
  append_unique(rows, expand({1 / phi, 1 / phi, 1 / phi, phi * phi},
                             PermKind::kAll, SignRule::kAll));
  append_unique(rows, expand({0, 1 / (phi * phi), 1, phi * phi},
                             PermKind::kEven, SignRule::kAll));
  append_unique(rows,
                expand({0, 1 / phi, phi, s5}, PermKind::kEven, SignRule::kAll));
  append_unique(rows,
                expand({1 / phi, 1, phi, 2}, PermKind::kEven, SignRule::kAll));
  return to_matrix(rows, 2.0 * std::sqrt(2.0));
}

}  // namespace

VertexSet solid4d(const std::string& name) {
  VertexSet v;
  if (name == "pentachoron") {
    v = simplex(4);
  } else if (name == "hexadecachoron") {
    v = cross_polytope(4);
  } else if (name == "tesseract") {
    v = hypercube(4);
  } else if (name == "octaplex") {
    auto rows = expand({1, 1, 0, 0}, PermKind::kAll, SignRule::kAll);
    v = make_vertex_set(name, to_matrix(rows, std::sqrt(2.0)));
  } else if (name == "tetraplex") {
    v = make_vertex_set(name, tetraplex_rows());
  } else if (name == "dodecaplex") {
    v = make_vertex_set(name, dodecaplex_rows());
  } else {
    throw ValidationError("solid4d: unknown name '" + name + "'");
  }
  v.name = name;
  return v;
}

const std::vector<std::string>& named_polytopes() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n = {"tetrahedron", "octahedron", "cube",
                                  "icosahedron", "dodecahedron", "pentachoron",
                                  "hexadecachoron", "tesseract", "octaplex",
                                  "tetraplex", "dodecaplex"};
    for (const auto& a : archimedean_names()) n.push_back(a);
    return n;
  }();
  return names;
}

VertexSet polytope_by_name(const std::string& raw, int param) {
  std::string name = raw;
  std::replace(name.begin(), name.end(), '_', ' ');
  std::replace(name.begin(), name.end(), '-', ' ');
  if (name == "polygon") return regular_polygon(param);
  if (name == "simplex") return simplex(param);
  if (name == "cross" || name == "cross polytope") return cross_polytope(param);
  if (name == "hypercube") return hypercube(param);
  for (const char* n3 :
       {"tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"})
    if (name == n3) return solid3d(name);
  for (const char* n4 : {"pentachoron", "hexadecachoron", "tesseract",
                         "octaplex", "tetraplex", "dodecaplex"})
    if (name == n4) return solid4d(name);
  for (const auto& a : archimedean_names())
    if (name == a) return archimedean(name);
  throw ValidationError("unknown polytope '" + raw + "'");
}

}  // namespace platobell
