#pragma once

#include "flex/plane_graph.hpp"

namespace flex::named {

// Small plane graphs used in examples, tests and the CLI.
PlaneGraph single_vertex();
PlaneGraph path(int n);
PlaneGraph cycle(int n);
PlaneGraph star(int leaves);
PlaneGraph k4();
PlaneGraph diamond();  // K4 minus an edge
PlaneGraph octahedron();
PlaneGraph icosahedron();
PlaneGraph dodecahedron();
PlaneGraph triangular_prism();
PlaneGraph cube();
PlaneGraph hopper();  // two triangles sharing vertex 0
PlaneGraph house();   // triangle 0 1 2 on the square 0 1 3 4

}  // namespace flex::named
