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

#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "platobell/bbsolver.hpp"
#include "platobell/errors.hpp"
#include "platobell/geomstrat.hpp"
#include "platobell/json_writer.hpp"
#include "platobell/polytopes.hpp"
#include "platobell/text_io.hpp"
#include "test_util.hpp"

using namespace platobell;

TEST(TextIo, FormatRealRoundTrips) {
  std::mt19937_64 rng(137);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int k = 0; k < 1000; ++k) {
    const double x = u(rng);
    EXPECT_EQ(std::stod(format_real(x)), x);
  }
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
}

TEST(TextIo, VertexSetRoundTrip) {
  for (const char* n : {"dodecaplex", "snub dodecahedron", "pentachoron"}) {
    const VertexSet v = polytope_by_name(n);
    std::stringstream ss;
    write_vertex_set(ss, v);
    const VertexSet back = read_vertex_set(ss, n);
    EXPECT_EQ(back.vectors, v.vectors) << n;
    EXPECT_EQ(back.centrally_symmetric, v.centrally_symmetric);
  }
  const VertexSet merged = merge_antipodal(solid3d("cube"));
  std::stringstream ss;
  write_vertex_set(ss, merged);
  EXPECT_EQ(read_vertex_set(ss).weighted(), merged.weighted());
}

TEST(TextIo, VertexSetFormat) {
  std::stringstream ss("2 3\n1 0 0\n0 0.5 -0.25\n");
  const VertexSet v = read_vertex_set(ss, "x");
  EXPECT_EQ(v.m(), 2);
  EXPECT_EQ(v.d, 3);
  EXPECT_DOUBLE_EQ(v.vectors(1, 2), -0.25);
  std::stringstream truncated("3 2\n1 0\n0 1\n");
  EXPECT_THROW(read_vertex_set(truncated), ValidationError);
  std::stringstream junk("2 2\n1 0\nfoo 1\n");
  EXPECT_THROW(read_vertex_set(junk), ValidationError);
}

TEST(TextIo, MatrixRoundTrip) {
  std::mt19937_64 rng(139);
  const Eigen::MatrixXd m = testutil::random_orthogonal(5, rng) * 1e-3;
  std::stringstream ss;
  write_matrix(ss, m);
  EXPECT_EQ(read_matrix(ss), m);
}

TEST(TextIo, IntMatrixRoundTrip) {
  const IntMatrix m(2, 3, {1, -2, 300000, 0, 7, -1234567});
  std::stringstream ss;
  write_int_matrix(ss, m);
  const IntMatrix back = read_int_matrix(ss);
  ASSERT_EQ(back.rows(), 2);
  ASSERT_EQ(back.cols(), 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(back(i, j), m(i, j));
}

TEST(TextIo, StrategiesTextRoundTrip) {
  const StrategySet s = enumerate_strategies(halve(solid3d("dodecahedron")));
  std::stringstream ss;
  write_strategies_text(ss, s);
  const StrategySet back = read_strategies_text(ss);
  EXPECT_EQ(back.m(), s.m());
  EXPECT_EQ(back.raw(), s.raw());
}

TEST(TextIo, StrategiesBinaryLayout) {
  StrategySet s(10);
  s.push({1, -1, 1, 1, 1, 1, 1, 1, -1, -1});
  std::stringstream ss;
  write_strategies_binary(ss, s);
  const std::string bytes = ss.str();
  ASSERT_EQ(bytes.size(), 8u + 4u + 2u);
  EXPECT_EQ(static_cast<unsigned char>(bytes[0]), 1);
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 10);
  EXPECT_EQ(static_cast<unsigned char>(bytes[12]), 0x02);
  EXPECT_EQ(static_cast<unsigned char>(bytes[13]), 0x03);
}

TEST(TextIo, StrategiesBinaryRoundTrip) {
  const StrategySet s = enumerate_strategies(merge_antipodal(solid4d("tetraplex")));
  ASSERT_EQ(s.size(), 7200u);
  std::stringstream ss;
  write_strategies_binary(ss, s);
  const StrategySet back = read_strategies_binary(ss);
  EXPECT_EQ(back.raw(), s.raw());
}

TEST(TextIo, GroupCsv) {
  const BodyStrategies b = body_strategies(solid4d("octaplex"));
  const StrategyVectorSet sv = strategy_vectors(b.merged, b.strategies, true);
  std::stringstream ss;
  write_group_csv(ss, sv);
  std::string header, row;
  std::getline(ss, header);
  std::getline(ss, row);
  EXPECT_EQ(header, "length,multiplicity");
  EXPECT_EQ(row, format_real(sv.longest()) + ",192");
}

TEST(TextIo, FileHelpers) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string path = (dir / "platobell_io_test_square.txt").string();
  std::stringstream ss;
  write_vertex_set(ss, regular_polygon(4));
  save_text(path, ss.str());
  EXPECT_EQ(load_text(path), ss.str());
  const VertexSet v = load_vertex_set(path);
  EXPECT_EQ(v.name, "platobell_io_test_square");
  EXPECT_EQ(v.m(), 4);
  std::remove(path.c_str());
  EXPECT_THROW(load_vertex_set(path), ValidationError);
}

TEST(JsonWriter, SeventeenDigitsAndParseBack) {
  Json j;
  j["name"] = "icosahedron";
  j["L"] = 41.888543819998318;
  j["third"] = 1.0 / 3.0;
  j["n"] = 16;
  j["bad"] = std::nan("");
  j["list"] = {0.1, 2.5};
  const std::string s = dump_json(j);
  EXPECT_NE(s.find("41.888543819998318"), std::string::npos);
  EXPECT_NE(s.find("0.33333333333333331"), std::string::npos);
  EXPECT_NE(s.find("0.10000000000000001"), std::string::npos);
  const Json back = Json::parse(s);
  EXPECT_EQ(back["L"].get<double>(), 41.888543819998318);
  EXPECT_EQ(back["third"].get<double>(), 1.0 / 3.0);
  EXPECT_EQ(back["n"].get<int>(), 16);
  EXPECT_TRUE(back["bad"].is_null());
  EXPECT_EQ(back["name"], "icosahedron");
  // Key order is insertion order.
  EXPECT_LT(s.find("\"name\""), s.find("\"L\""));
}
