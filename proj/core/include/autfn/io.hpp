#pragma once

// Text formats.
//
// Complex file:            Action file:          Orientation file:
//   dim 2                    4 5 0 1 2 3           +1 0 2 4
//   vertices 6               1 0 2 3 5 4           -1 0 2 5
//   0 2 4                                          ...
//   0 2 5
//   ...
//
// A complex file declares the manifold dimension, the vertex count, then
// one maximal simplex per line (vertex indices, 0-based); faces are closed
// automatically. An action file has one generator per line, a permutation
// of the vertex set in one-line notation. An orientation file has one line
// per top simplex: a sign followed by the vertices in a positively oriented
// order. Blank lines and lines starting with '#' are ignored throughout.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "autfn/complex.hpp"
#include "autfn/perm.hpp"

namespace autfn {

Complex parse_complex(std::string_view text);
std::vector<Perm> parse_action(std::string_view text, int vertex_count);
// Signs normalized to the ascending vertex order of each simplex.
std::map<Simplex, int> parse_orientation(std::string_view text);

Complex load_complex(const std::string& path);
std::vector<Perm> load_action(const std::string& path, int vertex_count);
void load_orientation(Complex& c, const std::string& path);

}  // namespace autfn
