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

#include "platobell/polygon.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "platobell/errors.hpp"

namespace platobell {

namespace {
constexpr double kPi = std::numbers::pi;

void check_m(int m) {
  if (m < 3) throw ValidationError("polygon needs at least 3 vertices");
}
}  // namespace

double polygon_strategy_length(int m) {
  check_m(m);
  return m % 2 == 0 ? 2.0 / std::sin(kPi / m) : 1.0 / std::sin(kPi / (2.0 * m));
}

int polygon_direction_count(int m) {
  check_m(m);
  return m % 2 == 0 ? m : 2 * m;
}

std::vector<double> polygon_strategy_angles(int m) {
  check_m(m);
  std::vector<double> out;
  if (m % 4 == 0) {
    for (int k = 0; k < m; ++k) out.push_back((2 * k + 1) * kPi / m);
  } else if (m % 2 == 0) {
    for (int k = 0; k < m; ++k) out.push_back(2 * k * kPi / m);
  } else {
    for (int k = 0; k < 2 * m; ++k) out.push_back(k * kPi / m);
  }
  return out;
}

double polygon_pair_local_bound(int ma, int mb, double phi) {
  const std::vector<double> a = polygon_strategy_angles(ma);
  const std::vector<double> b = polygon_strategy_angles(mb);
  double delta = kPi;
  for (double x : a)
    for (double y : b) {
      double t = std::remainder(x - y - phi, 2 * kPi);
      delta = std::min(delta, std::abs(t));
    }
  return polygon_strategy_length(ma) * polygon_strategy_length(mb) *
         std::cos(delta);
}

double polygon_pair_period(int ma, int mb) {
  return 2 * kPi / std::lcm(polygon_direction_count(ma),
                            polygon_direction_count(mb));
}

double polygon_pair_min_local_bound(int ma, int mb) {
  const int l = std::lcm(polygon_direction_count(ma),
                         polygon_direction_count(mb));
  return polygon_strategy_length(ma) * polygon_strategy_length(mb) *
         std::cos(kPi / l);
}

}  // namespace platobell
