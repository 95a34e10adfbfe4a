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

#include <vector>

namespace platobell {

/** Length shared by all strategy vectors of the regular m-gon. */
double polygon_strategy_length(int m);

/** Directions (radians) of the strategy vectors of the m-gon at rest. */
std::vector<double> polygon_strategy_angles(int m);

/** Number of strategy directions: m for even m, 2m for odd m. */
int polygon_direction_count(int m);

/**
 * Local bound of the pair (m_A-gon, m_B-gon rotated by phi), both with a
 * vertex on the x axis at rest: l_A l_B cos(delta) with delta the smallest
 * angle between strategy directions.
 */
double polygon_pair_local_bound(int ma, int mb, double phi);

/** 2 pi / lcm of the direction counts. */
double polygon_pair_period(int ma, int mb);

/** Minimum over phi of polygon_pair_local_bound. */
double polygon_pair_min_local_bound(int ma, int mb);

}  // namespace platobell
