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

namespace platobell::detail {

enum class PermKind { kAll, kEven, kOdd };
enum class SignRule { kAll, kEvenMinus, kEvenPlus, kOddPlus };

/**
 * Rows obtained from `base` by coordinate permutations of the given parity
 * and sign flips obeying `rule`, in a fixed order with duplicates removed.
 */
std::vector<std::vector<double>> expand(const std::vector<double>& base,
                                        PermKind perms, SignRule rule);

/** Stacks rows and divides each by `norm`. */
Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows,
                          double norm);

/** Appends rows not already present (within 1e-9). */
void append_unique(std::vector<std::vector<double>>& into,
                   const std::vector<std::vector<double>>& rows);

double golden();

}  // namespace platobell::detail
