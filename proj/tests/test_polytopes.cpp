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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "platobell/errors.hpp"
#include "platobell/polytopes.hpp"
#include "test_util.hpp"

using namespace platobell;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

// Number of nearest neighbours of vertex 0 (all vertices are equivalent
// for the bodies tested).
int degree(const VertexSet& v) {
  double best = -2;
  for (int j = 1; j < v.m(); ++j) best = std::max(best, v.vectors.row(0).dot(v.vectors.row(j)));
  int n = 0;
  for (int j = 1; j < v.m(); ++j)
    if (std::abs(v.vectors.row(0).dot(v.vectors.row(j)) - best) < 1e-9) ++n;
  return n;
}

std::set<std::vector<long long>> as_set(const Eigen::MatrixXd& rows) {
  std::set<std::vector<long long>> s;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    std::vector<long long> k;
    for (Eigen::Index j = 0; j < rows.cols(); ++j) k.push_back(std::llround(rows(i, j) * 1e8));
    s.insert(k);
  }
  return s;
}

}  // namespace

TEST(Polytopes, VertexCountsAndDimensions) {
  const std::map<std::string, std::pair<int, int>> expect = {
      {"tetrahedron", {4, 3}},  {"octahedron", {6, 3}},     {"cube", {8, 3}},
      {"icosahedron", {12, 3}}, {"dodecahedron", {20, 3}},  {"pentachoron", {5, 4}},
      {"hexadecachoron", {8, 4}}, {"tesseract", {16, 4}},   {"octaplex", {24, 4}},
      {"tetraplex", {120, 4}},  {"dodecaplex", {600, 4}}};
  for (const auto& [name, md] : expect) {
    const VertexSet v = polytope_by_name(name);
    EXPECT_EQ(v.m(), md.first) << name;
    EXPECT_EQ(v.d, md.second) << name;
  }
}

TEST(Polytopes, ArchimedeanCounts) {
  const std::map<std::string, int> expect = {
      {"truncated tetrahedron", 12},  {"cuboctahedron", 12},
      {"truncated cube", 24},         {"truncated octahedron", 24},
      {"rhombicuboctahedron", 24},    {"truncated cuboctahedron", 48},
      {"snub cube", 24},              {"icosidodecahedron", 30},
      {"truncated dodecahedron", 60}, {"truncated icosahedron", 60},
      {"rhombicosidodecahedron", 60}, {"truncated icosidodecahedron", 120},
      {"snub dodecahedron", 60}};
  ASSERT_EQ(archimedean_names().size(), 13u);
  for (const auto& [name, m] : expect) EXPECT_EQ(archimedean(name).m(), m) << name;
}

TEST(Polytopes, VertexDegreesMatchKnownSolids) {
  const std::map<std::string, int> expect = {
      {"tetrahedron", 3},  {"octahedron", 4},  {"cube", 3},  {"icosahedron", 5},
      {"dodecahedron", 3}, {"pentachoron", 4}, {"hexadecachoron", 6},
      {"tesseract", 4},    {"octaplex", 8},    {"tetraplex", 12}, {"dodecaplex", 4},
      {"truncated tetrahedron", 3}, {"cuboctahedron", 4}, {"truncated cube", 3},
      {"truncated octahedron", 3}, {"rhombicuboctahedron", 4},
      {"truncated cuboctahedron", 3}, {"snub cube", 5}, {"icosidodecahedron", 4},
      {"truncated dodecahedron", 3}, {"truncated icosahedron", 3},
      {"rhombicosidodecahedron", 4}, {"truncated icosidodecahedron", 3},
      {"snub dodecahedron", 5}};
  for (const auto& [name, k] : expect) EXPECT_EQ(degree(polytope_by_name(name)), k) << name;
}

TEST(Polytopes, TetraplexNeighboursAtGoldenAngle) {
  const VertexSet v = solid4d("tetraplex");
  for (int i = 0; i < v.m(); i += 17) {
    int n = 0;
    for (int j = 0; j < v.m(); ++j)
      if (std::abs(v.vectors.row(i).dot(v.vectors.row(j)) - kPhi / 2) < 1e-12) ++n;
    EXPECT_EQ(n, 12);
  }
}

TEST(Polytopes, ObservationHoldsForEveryShippedBody) {
  std::vector<VertexSet> all;
  for (const auto& n : named_polytopes()) all.push_back(polytope_by_name(n));
  for (int d = 2; d <= 8; ++d) {
    all.push_back(simplex(d));
    all.push_back(cross_polytope(d));
    all.push_back(hypercube(d));
  }
  for (int n = 3; n <= 12; ++n) all.push_back(regular_polygon(n));
  for (const auto& v : all) {
    const SemiorthReport r = check_semiorthogonal(v, 1e-9);
    EXPECT_TRUE(r.passed) << v.name << " deviation " << r.max_abs_deviation;
    EXPECT_LE(max_unit_norm_deviation(v), 1e-12) << v.name;
    EXPECT_DOUBLE_EQ(r.target, v.m() / double(v.d)) << v.name;
  }
}

TEST(Polytopes, CentralSymmetryFlags) {
  for (const char* n : {"tetrahedron", "pentachoron", "truncated tetrahedron", "snub cube",
                        "snub dodecahedron"})
    EXPECT_FALSE(polytope_by_name(n).centrally_symmetric) << n;
  for (const char* n : {"octahedron", "cube", "icosahedron", "dodecahedron", "tesseract",
                        "octaplex", "tetraplex", "dodecaplex", "cuboctahedron"})
    EXPECT_TRUE(polytope_by_name(n).centrally_symmetric) << n;
  EXPECT_FALSE(regular_polygon(5).centrally_symmetric);
  EXPECT_TRUE(regular_polygon(6).centrally_symmetric);
}

TEST(Polytopes, SimplexDotProducts) {
  for (int d = 2; d <= 8; ++d) {
    const VertexSet s = simplex(d);
    ASSERT_EQ(s.m(), d + 1);
    for (int i = 0; i < s.m(); ++i)
      for (int j = i + 1; j < s.m(); ++j)
        EXPECT_NEAR(s.vectors.row(i).dot(s.vectors.row(j)), -1.0 / d, 1e-13);
  }
}

TEST(Polytopes, HypercubeAndCrossDotProducts) {
  for (int d = 2; d <= 6; ++d) {
    const VertexSet h = hypercube(d);
    ASSERT_EQ(h.m(), 1 << d);
    for (int i = 0; i < h.m(); ++i)
      for (int j = 0; j < h.m(); ++j) {
        const double t = h.vectors.row(i).dot(h.vectors.row(j)) * d;
        EXPECT_NEAR(t, std::round(t), 1e-12);
      }
    const VertexSet c = cross_polytope(d);
    ASSERT_EQ(c.m(), 2 * d);
    for (int i = 0; i < c.m(); ++i)
      for (int j = i + 1; j < c.m(); ++j) {
        const double t = c.vectors.row(i).dot(c.vectors.row(j));
        EXPECT_TRUE(std::abs(t) < 1e-15 || std::abs(t + 1) < 1e-15);
      }
  }
}

TEST(Polytopes, PolygonVerticesOnCircle) {
  for (int n = 3; n <= 12; ++n) {
    const VertexSet p = regular_polygon(n);
    EXPECT_NEAR(p.vectors(0, 0), 1.0, 1e-15);
    for (int k = 0; k < n; ++k) {
      const double a = std::atan2(p.vectors(k, 1), p.vectors(k, 0));
      const double steps = a / (2 * M_PI / n);
      EXPECT_NEAR(steps, std::round(steps), 1e-12);
    }
  }
}

TEST(Polytopes, HalveKeepsOneOfEachPair) {
  EXPECT_EQ(halve(cross_polytope(3)).m(), 3);
  EXPECT_EQ(halve(regular_polygon(6)).m(), 3);
  EXPECT_EQ(halve(solid4d("dodecaplex")).m(), 300);
  EXPECT_THROW(halve(simplex(3)), ValidationError);
  // The halved cube is a tetrahedron up to row signs.
  const VertexSet h = halve(hypercube(3));
  ASSERT_EQ(h.m(), 4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      EXPECT_NEAR(std::abs(h.vectors.row(i).dot(h.vectors.row(j))), 1.0 / 3, 1e-15);
}

TEST(Polytopes, HalvedTetraplexFirstListed) {
  const VertexSet t = solid4d("tetraplex");
  const VertexSet h = halve(t, HalvePolicy::kFirstListed);
  ASSERT_EQ(h.m(), 60);
  EXPECT_TRUE(h.vectors.isApprox(t.vectors.topRows(60)));
  EXPECT_TRUE(check_semiorthogonal(h).passed);
  EXPECT_TRUE(check_semiorthogonal(halve(t)).passed);
}

TEST(Polytopes, UnhalveRestoresTheSet) {
  for (const char* n : {"octahedron", "icosahedron", "octaplex", "tetraplex", "truncated cube"}) {
    const VertexSet v = polytope_by_name(n);
    EXPECT_EQ(as_set(unhalve(halve(v)).vectors), as_set(v.vectors)) << n;
  }
}

TEST(Polytopes, TransformPreservesObservation) {
  std::mt19937_64 rng(7);
  for (const char* n : {"icosahedron", "snub cube", "octaplex"}) {
    const VertexSet v = polytope_by_name(n);
    for (int t = 0; t < 5; ++t) {
      const VertexSet w = transform(v, testutil::random_orthogonal(v.d, rng));
      EXPECT_TRUE(check_semiorthogonal(w).passed) << n;
      EXPECT_LE(max_unit_norm_deviation(w), 1e-12);
    }
  }
}

TEST(Polytopes, NonCompliantSetFailsObservation) {
  std::mt19937_64 rng(3);
  const VertexSet v = make_vertex_set("random", testutil::random_unit_rows(7, 3, rng));
  EXPECT_FALSE(check_semiorthogonal(v).passed);
}

TEST(Polytopes, NameLookup) {
  EXPECT_EQ(polytope_by_name("snub_cube").m(), 24);
  EXPECT_EQ(polytope_by_name("truncated-icosahedron").m(), 60);
  EXPECT_EQ(polytope_by_name("polygon", 7).m(), 7);
  EXPECT_EQ(polytope_by_name("simplex", 7).m(), 8);
  EXPECT_EQ(polytope_by_name("hypercube", 5).m(), 32);
  EXPECT_THROW(polytope_by_name("great dodecahedron"), ValidationError);
  EXPECT_EQ(named_polytopes().size(), 24u);
}
