#pragma once

// Canonical small complexes and actions used by the CLI examples, the test
// corpus and the benchmarks.
//
// Octahedron vertex labels: 0 = +x, 1 = -x, 2 = +y, 3 = -y, 4 = +z, 5 = -z.

#include "autfn/complex.hpp"
#include "autfn/perm.hpp"

namespace autfn {

// Boundary of the octahedron: a 6-vertex 2-sphere.
Complex octahedron();
// Coherent orientation of the octahedron (outward normals).
std::map<Simplex, int> octahedron_orientation();

// Bipyramid over an m-gon (m >= 3): vertices 0..m-1 equatorial,
// m = top apex, m+1 = bottom apex. A 2-sphere.
Complex bipyramid(int m);

// Boundary of the m-gon (m >= 3): an m-vertex circle.
Complex polygon(int m);

// The m x k grid torus (m, k >= 3), vertex (i, j) = i*k + j, each grid
// square split along the (i, j) -> (i+1, j+1) diagonal.
Complex torus_grid(int m, int k);

// --- actions ----------------------------------------------------------------

// Reflection negating one axis of the octahedron: axis 0 swaps +-x, etc.
Perm octahedron_reflection(int axis);
// The antipodal map.
Perm octahedron_antipodal();
// Rotation by pi about the given axis (the product of the other two
// reflections); orientation-preserving.
Perm octahedron_rotation(int axis);

// Rotation i -> i+shift (mod m) of the equator, apexes fixed.
Perm bipyramid_rotation(int m, int shift);
// Reflection i -> -i (mod m) of the equator, apexes fixed.
Perm bipyramid_reflection(int m);

Perm polygon_rotation(int m, int shift);
Perm polygon_reflection(int m);

// Translation (i, j) -> (i+di, j+dj) on the grid torus.
Perm torus_shift(int m, int k, int di, int dj);
// Point inversion (i, j) -> (-i, -j).
Perm torus_point_inversion(int m, int k);

}  // namespace autfn
