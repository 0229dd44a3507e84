#include "autfn/shapes.hpp"

#include "autfn/errors.hpp"

namespace autfn {

Complex octahedron() {
    std::vector<Simplex> tris;
    for (int x = 0; x <= 1; ++x)
        for (int y = 2; y <= 3; ++y)
            for (int z = 4; z <= 5; ++z) tris.push_back({x, y, z});
    return Complex::from_maximal(6, std::move(tris), 2);
}

std::map<Simplex, int> octahedron_orientation() {
    // Sign of det[coord(a); coord(b); coord(c)] for the sorted triangle
    // (a, b, c): outward orientation of the unit octahedron.
    auto coord = [](int v, int axis) -> int {
        if (v / 2 != axis) return 0;
        return v % 2 == 0 ? 1 : -1;
    };
    std::map<Simplex, int> signs;
    for (int x = 0; x <= 1; ++x)
        for (int y = 2; y <= 3; ++y)
            for (int z = 4; z <= 5; ++z) {
                Simplex s = {x, y, z};
                long long det = 0;
                // 3x3 determinant over the axis coordinates.
                int m[3][3];
                for (int row = 0; row < 3; ++row)
                    for (int axis = 0; axis < 3; ++axis) m[row][axis] = coord(s[static_cast<std::size_t>(row)], axis);
                det = static_cast<long long>(m[0][0]) * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      static_cast<long long>(m[0][1]) * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      static_cast<long long>(m[0][2]) * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
                signs[s] = det > 0 ? 1 : -1;
            }
    return signs;
}

Complex bipyramid(int m) {
    if (m < 3) throw InputError("bipyramid: need m >= 3");
    std::vector<Simplex> tris;
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        tris.push_back({i, j, m});
        tris.push_back({i, j, m + 1});
    }
    return Complex::from_maximal(m + 2, std::move(tris), 2);
}

Complex polygon(int m) {
    if (m < 3) throw InputError("polygon: need m >= 3");
    std::vector<Simplex> edges;
    for (int i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
    return Complex::from_maximal(m, std::move(edges), 1);
}

Complex torus_grid(int m, int k) {
    if (m < 3 || k < 3) throw InputError("torus_grid: need m, k >= 3");
    auto vertex = [&](int i, int j) { return ((i % m + m) % m) * k + ((j % k + k) % k); };
    std::vector<Simplex> tris;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) {
            tris.push_back({vertex(i, j), vertex(i + 1, j), vertex(i + 1, j + 1)});
            tris.push_back({vertex(i, j), vertex(i, j + 1), vertex(i + 1, j + 1)});
        }
    return Complex::from_maximal(m * k, std::move(tris), 2);
}

// ---------------------------------------------------------------------------

Perm octahedron_reflection(int axis) {
    if (axis < 0 || axis > 2) throw InputError("octahedron_reflection: axis must be 0..2");
    Perm p = perm_identity(6);
    std::swap(p[static_cast<std::size_t>(2 * axis)], p[static_cast<std::size_t>(2 * axis + 1)]);
    return p;
}

Perm octahedron_antipodal() {
    return {1, 0, 3, 2, 5, 4};
}

Perm octahedron_rotation(int axis) {
    if (axis < 0 || axis > 2) throw InputError("octahedron_rotation: axis must be 0..2");
    Perm p(6);
    for (int a = 0; a < 3; ++a) {
        if (a == axis) {
            p[static_cast<std::size_t>(2 * a)] = 2 * a;
            p[static_cast<std::size_t>(2 * a + 1)] = 2 * a + 1;
        } else {
            p[static_cast<std::size_t>(2 * a)] = 2 * a + 1;
            p[static_cast<std::size_t>(2 * a + 1)] = 2 * a;
        }
    }
    return p;
}

Perm bipyramid_rotation(int m, int shift) {
    Perm p(static_cast<std::size_t>(m) + 2);
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = ((i + shift) % m + m) % m;
    p[static_cast<std::size_t>(m)] = m;
    p[static_cast<std::size_t>(m) + 1] = m + 1;
    return p;
}

Perm bipyramid_reflection(int m) {
    Perm p(static_cast<std::size_t>(m) + 2);
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = (m - i) % m;
    p[static_cast<std::size_t>(m)] = m;
    p[static_cast<std::size_t>(m) + 1] = m + 1;
    return p;
}

Perm polygon_rotation(int m, int shift) {
    Perm p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = ((i + shift) % m + m) % m;
    return p;
}

Perm polygon_reflection(int m) {
    Perm p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = (m - i) % m;
    return p;
}

Perm torus_shift(int m, int k, int di, int dj) {
    Perm p(static_cast<std::size_t>(m) * static_cast<std::size_t>(k));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j)
            p[static_cast<std::size_t>(i * k + j)] =
                ((i + di) % m + m) % m * k + ((j + dj) % k + k) % k;
    return p;
}

Perm torus_point_inversion(int m, int k) {
    Perm p(static_cast<std::size_t>(m) * static_cast<std::size_t>(k));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j)
            p[static_cast<std::size_t>(i * k + j)] =
                ((-i) % m + m) % m * k + ((-j) % k + k) % k;
    return p;
}

}  // namespace autfn
