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

#include <cmath>

#include "construct.hpp"
#include "platobell/errors.hpp"
#include "platobell/polytopes.hpp"

namespace platobell {

namespace {

using detail::append_unique;
using detail::expand;
using detail::PermKind;
using detail::SignRule;
using detail::to_matrix;

using Rows = std::vector<std::vector<double>>;

double row_norm(const std::vector<double>& r) {
  double s = 0;
  for (double x : r) s += x * x;
  return std::sqrt(s);
}

Rows all_perms(std::initializer_list<double> b) {
  return expand(b, PermKind::kAll, SignRule::kAll);
}

Rows even_perms(std::initializer_list<double> b) {
  return expand(b, PermKind::kEven, SignRule::kAll);
}

// Chiral snub dodecahedron on the unit sphere: orbit of one point under the
// rotation group of the icosahedron with all five nearest neighbours
// equidistant. Solved once to 40 digits and rounded.
constexpr double kSnubDodecahedron[60][3] = {
    {-0.0894750752440276953104, 0.809980595541053012486, -0.579590929671123023699},
    {-0.972732850565595865318, 0.153499994271178983245, -0.173863605131373492311},
    {0.0894750752440276953104, -0.809980595541053012486, -0.579590929671123023699},
    {-0.511706888379082926247, -0.76393421864765347439, 0.393141920894472841619},
    {0.393141920894472841619, -0.511706888379082926247, -0.76393421864765347439},
    {0.972732850565595865318, -0.153499994271178983245, -0.173863605131373492311},
    {0.656480601269874029241, -0.674459143403625779079, 0.337843283247709433936},
    {0.153499994271178983245, -0.173863605131373492311, -0.972732850565595865318},
    {0.337843283247709433936, 0.656480601269874029241, -0.674459143403625779079},
    {0.511706888379082926247, 0.76393421864765347439, 0.393141920894472841619},
    {-0.393141920894472841619, 0.511706888379082926247, -0.76393421864765347439},
    {0.917434212918832457635, 0.298273707161970086239, -0.263338680375401187622},
    {-0.298273707161970086239, -0.263338680375401187622, -0.917434212918832457635},
    {-0.76393421864765347439, 0.393141920894472841619, -0.511706888379082926247},
    {-0.263338680375401187622, 0.917434212918832457635, 0.298273707161970086239},
    {-0.917434212918832457635, -0.298273707161970086239, -0.263338680375401187622},
    {-0.656480601269874029241, 0.674459143403625779079, 0.337843283247709433936},
    {-0.153499994271178983245, 0.173863605131373492311, -0.972732850565595865318},
    {-0.337843283247709433936, -0.656480601269874029241, -0.674459143403625779079},
    {-0.809980595541053012486, -0.579590929671123023699, 0.0894750752440276953104},
    {-0.674459143403625779079, 0.337843283247709433936, 0.656480601269874029241},
    {-0.173863605131373492311, -0.972732850565595865318, 0.153499994271178983245},
    {-0.579590929671123023699, -0.0894750752440276953104, 0.809980595541053012486},
    {-0.674459143403625779079, -0.337843283247709433936, -0.656480601269874029241},
    {0.298273707161970086239, 0.263338680375401187622, -0.917434212918832457635},
    {0.76393421864765347439, -0.393141920894472841619, -0.511706888379082926247},
    {0.263338680375401187622, -0.917434212918832457635, 0.298273707161970086239},
    {-0.153499994271178983245, -0.173863605131373492311, 0.972732850565595865318},
    {0.809980595541053012486, -0.579590929671123023699, -0.0894750752440276953104},
    {0.298273707161970086239, -0.263338680375401187622, 0.917434212918832457635},
    {-0.263338680375401187622, -0.917434212918832457635, -0.298273707161970086239},
    {-0.579590929671123023699, 0.0894750752440276953104, -0.809980595541053012486},
    {0.809980595541053012486, 0.579590929671123023699, 0.0894750752440276953104},
    {0.674459143403625779079, -0.337843283247709433936, 0.656480601269874029241},
    {0.173863605131373492311, 0.972732850565595865318, 0.153499994271178983245},
    {0.579590929671123023699, 0.0894750752440276953104, 0.809980595541053012486},
    {0.674459143403625779079, 0.337843283247709433936, -0.656480601269874029241},
    {0.76393421864765347439, 0.393141920894472841619, 0.511706888379082926247},
    {0.511706888379082926247, -0.76393421864765347439, -0.393141920894472841619},
    {-0.656480601269874029241, -0.674459143403625779079, -0.337843283247709433936},
    {-0.173863605131373492311, 0.972732850565595865318, -0.153499994271178983245},
    {0.153499994271178983245, 0.173863605131373492311, 0.972732850565595865318},
    {-0.809980595541053012486, 0.579590929671123023699, -0.0894750752440276953104},
    {-0.298273707161970086239, 0.263338680375401187622, 0.917434212918832457635},
    {0.263338680375401187622, 0.917434212918832457635, -0.298273707161970086239},
    {0.579590929671123023699, -0.0894750752440276953104, -0.809980595541053012486},
    {0.173863605131373492311, -0.972732850565595865318, -0.153499994271178983245},
    {-0.917434212918832457635, 0.298273707161970086239, 0.263338680375401187622},
    {0.393141920894472841619, 0.511706888379082926247, 0.76393421864765347439},
    {-0.76393421864765347439, -0.393141920894472841619, 0.511706888379082926247},
    {-0.511706888379082926247, 0.76393421864765347439, -0.393141920894472841619},
    {0.656480601269874029241, 0.674459143403625779079, -0.337843283247709433936},
    {-0.393141920894472841619, -0.511706888379082926247, 0.76393421864765347439},
    {0.0894750752440276953104, 0.809980595541053012486, 0.579590929671123023699},
    {0.337843283247709433936, -0.656480601269874029241, 0.674459143403625779079},
    {-0.972732850565595865318, -0.153499994271178983245, 0.173863605131373492311},
    {0.917434212918832457635, -0.298273707161970086239, 0.263338680375401187622},
    {-0.337843283247709433936, 0.656480601269874029241, 0.674459143403625779079},
    {0.972732850565595865318, 0.153499994271178983245, 0.173863605131373492311},
    {-0.0894750752440276953104, -0.809980595541053012486, 0.579590929671123023699},
};

}  // namespace

const std::vector<std::string>& archimedean_names() {
  static const std::vector<std::string> names = {
      "truncated tetrahedron", "cuboctahedron",
      "truncated cube",        "truncated octahedron",
      "rhombicuboctahedron",   "truncated cuboctahedron",
      "snub cube",             "icosidodecahedron",
      "truncated dodecahedron", "truncated icosahedron",
      "rhombicosidodecahedron", "truncated icosidodecahedron",
      "snub dodecahedron"};
  return names;
}

VertexSet archimedean(const std::string& name) {
  const double phi = detail::golden();
  const double r2 = std::sqrt(2.0);
  Rows rows;
  if (name == "truncated tetrahedron") {
    rows = expand({3, 1, 1}, PermKind::kAll, SignRule::kEvenMinus);
  } else if (name == "cuboctahedron") {
    rows = all_perms({1, 1, 0});
  } else if (name == "truncated cube") {
    rows = all_perms({r2 - 1, 1, 1});
  } else if (name == "truncated octahedron") {
    rows = all_perms({0, 1, 2});
  } else if (name == "rhombicuboctahedron") {
    rows = all_perms({1, 1, 1 + r2});
  } else if (name == "truncated cuboctahedron") {
    rows = all_perms({1, 1 + r2, 1 + 2 * r2});
  } else if (name == "snub cube") {
    // Tribonacci constant.
    const double t = (1.0 + std::cbrt(19.0 + 3.0 * std::sqrt(33.0)) +
                      std::cbrt(19.0 - 3.0 * std::sqrt(33.0))) /
                     3.0;
    rows = expand({1, 1 / t, t}, PermKind::kEven, SignRule::kEvenPlus);
    append_unique(rows,
                  expand({1, 1 / t, t}, PermKind::kOdd, SignRule::kOddPlus));
  } else if (name == "icosidodecahedron") {
    rows = all_perms({0, 0, phi});
    append_unique(rows, even_perms({0.5, phi / 2, phi * phi / 2}));
  } else if (name == "truncated dodecahedron") {
    rows = even_perms({0, 1 / phi, 2 + phi});
    append_unique(rows, even_perms({1 / phi, phi, 2 * phi}));
    append_unique(rows, even_perms({phi, 2, phi + 1}));
  } else if (name == "truncated icosahedron") {
    rows = even_perms({0, 1, 3 * phi});
    append_unique(rows, even_perms({1, 2 + phi, 2 * phi}));
    append_unique(rows, even_perms({phi, 2, 2 * phi + 1}));
  } else if (name == "rhombicosidodecahedron") {
    rows = even_perms({1, 1, 2 * phi + 1});
    append_unique(rows, even_perms({phi * phi, phi, 2 * phi}));
    append_unique(rows, even_perms({2 + phi, 0, phi * phi}));
  } else if (name == "truncated icosidodecahedron") {
    rows = even_perms({1 / phi, 1 / phi, 3 + phi});
    append_unique(rows, even_perms({2 / phi, phi, 1 + 2 * phi}));
    append_unique(rows, even_perms({1 / phi, phi * phi, 3 * phi - 1}));
    append_unique(rows, even_perms({2 * phi - 1, 2, 2 + phi}));
    append_unique(rows, even_perms({phi, 3, 2 * phi}));
  } else if (name == "snub dodecahedron") {
    for (const auto& r : kSnubDodecahedron) rows.push_back({r[0], r[1], r[2]});
  } else {
    throw ValidationError("archimedean: unknown name '" + name + "'");
  }
  Eigen::MatrixXd a = to_matrix(rows, row_norm(rows.front()));
  if (name == "snub dodecahedron") a.rowwise().normalize();
  return make_vertex_set(name, a);
}

}  // namespace platobell
