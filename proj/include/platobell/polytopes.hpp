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

#include <string>
#include <vector>

#include "platobell/vertex_set.hpp"

namespace platobell {

VertexSet regular_polygon(int n);
VertexSet simplex(int d);
VertexSet cross_polytope(int d);
VertexSet hypercube(int d);

/** tetrahedron, octahedron, cube, icosahedron, dodecahedron. */
VertexSet solid3d(const std::string& name);

/**
 * pentachoron, hexadecachoron, tesseract, octaplex, tetraplex, dodecaplex.
 *
 * The tetraplex lists the 60 rows of its usual halved form first and their
 * antipodes after, so HalvePolicy::kFirstListed recovers exactly that half.
 */
VertexSet solid4d(const std::string& name);

/** The 13 Archimedean solids, by lower-case name with spaces. */
VertexSet archimedean(const std::string& name);
const std::vector<std::string>& archimedean_names();

/**
 * Any shipped body by name. Parametric families take a dimension or vertex
 * count: "polygon", "simplex", "cross", "hypercube".
 */
VertexSet polytope_by_name(const std::string& name, int param = 0);

/** Names accepted by polytope_by_name without a parameter. */
const std::vector<std::string>& named_polytopes();

}  // namespace platobell
