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
#include <iosfwd>
#include <string>

#include "platobell/bbsolver.hpp"
#include "platobell/geomstrat.hpp"
#include "platobell/vertex_set.hpp"

namespace platobell {

/** Reals at 17 significant digits, so text round-trips exactly. */
std::string format_real(double x);

// Vertex sets: "m d" then m rows of d reals. Weighted sets are written
// as their weighted rows.
void write_vertex_set(std::ostream& os, const VertexSet& v);
VertexSet read_vertex_set(std::istream& is, const std::string& name = "file");

// Matrices: "rows cols" then the rows.
void write_matrix(std::ostream& os, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix(std::istream& is);
void write_int_matrix(std::ostream& os, const IntMatrix& m);
IntMatrix read_int_matrix(std::istream& is);

// Strategies as text: one row of +1/-1 entries per strategy.
void write_strategies_text(std::ostream& os, const StrategySet& s);
StrategySet read_strategies_text(std::istream& is);

/**
 * Packed binary: uint64 row count, uint32 m, then ceil(m/8) bytes per row.
 * Bit i of a row (little-endian within and across bytes) set means -1.
 */
void write_strategies_binary(std::ostream& os, const StrategySet& s);
StrategySet read_strategies_binary(std::istream& is);

/** "length,multiplicity" per group, longest first. */
void write_group_csv(std::ostream& os, const StrategyVectorSet& s);

/** Strategy vectors in the vertex-set text format. */
void write_strategy_vectors(std::ostream& os, const StrategyVectorSet& s);

VertexSet load_vertex_set(const std::string& path);
void save_text(const std::string& path, const std::string& content);
std::string load_text(const std::string& path);

}  // namespace platobell
