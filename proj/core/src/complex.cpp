#include "autfn/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "autfn/errors.hpp"

namespace autfn {

namespace {

struct SimplexLess {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

void check_simplex(const Simplex& s, int vertex_count) {
    if (s.empty()) throw InputError("complex: empty simplex");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= vertex_count)
            throw InputError("complex: vertex index " + std::to_string(s[i]) +
                             " out of range [0, " + std::to_string(vertex_count) + ")");
        if (i > 0 && s[i - 1] >= s[i])
            throw InputError("complex: simplex vertices must be strictly increasing");
    }
}

}  // namespace

Complex Complex::from_maximal(int vertex_count, std::vector<Simplex> maximal,
                              int declared_dim) {
    if (vertex_count < 0) throw InputError("complex: negative vertex count");
    std::set<Simplex, SimplexLess> closed;
    for (Simplex s : maximal) {
        std::sort(s.begin(), s.end());
        check_simplex(s, vertex_count);
        // All non-empty subsets.
        std::size_t k = s.size();
        if (k > 20) throw InputError("complex: simplex dimension too large");
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            Simplex face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) face.push_back(s[b]);
            closed.insert(std::move(face));
        }
    }
    Complex c;
    c.vertex_count_ = vertex_count;
    c.declared_dim_ = declared_dim;
    c.simplices_.assign(closed.begin(), closed.end());
    for (std::size_t i = 0; i < c.simplices_.size(); ++i)
        c.index_.emplace(c.simplices_[i], i);
    return c;
}

Complex Complex::from_simplices(int vertex_count, std::vector<Simplex> simplices,
                                int declared_dim) {
    if (vertex_count < 0) throw InputError("complex: negative vertex count");
    std::set<Simplex, SimplexLess> sorted;
    for (Simplex s : simplices) {
        check_simplex(s, vertex_count);
        sorted.insert(std::move(s));
    }
    // Validate face closure: removing one vertex must stay inside.
    for (const Simplex& s : sorted) {
        if (s.size() == 1) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            if (!sorted.contains(face))
                throw InputError("complex: simplex set is not face-closed");
        }
    }
    Complex c;
    c.vertex_count_ = vertex_count;
    c.declared_dim_ = declared_dim;
    c.simplices_.assign(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < c.simplices_.size(); ++i)
        c.index_.emplace(c.simplices_[i], i);
    return c;
}

int Complex::dim() const {
    if (simplices_.empty()) return -1;
    return static_cast<int>(simplices_.back().size()) - 1;
}

bool Complex::contains(const Simplex& sorted) const { return index_.contains(sorted); }

std::optional<std::size_t> Complex::index_of(const Simplex& sorted) const {
    auto it = index_.find(sorted);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

long long Complex::chi() const {
    long long total = 0;
    for (const Simplex& s : simplices_) total += s.size() % 2 == 1 ? 1 : -1;
    return total;
}

std::vector<std::size_t> Complex::face_vector() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(dim() + 1), 0);
    for (const Simplex& s : simplices_) ++counts[s.size() - 1];
    return counts;
}

std::vector<std::size_t> Complex::top_indices() const {
    std::vector<std::size_t> out;
    std::size_t top_size = static_cast<std::size_t>(dim()) + 1;
    for (std::size_t i = 0; i < simplices_.size(); ++i)
        if (simplices_[i].size() == top_size) out.push_back(i);
    return out;
}

std::vector<Simplex> Complex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (const Simplex& s : simplices_) {
        bool maximal = true;
        // s is maximal iff no extension by one vertex is a simplex.
        for (int v = 0; v < vertex_count_ && maximal; ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            Simplex bigger = s;
            bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), v), v);
            if (index_.contains(bigger)) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

bool Complex::is_closed_pseudo_manifold() const {
    if (simplices_.empty()) return false;
    int d = dim();
    if (d < 1) return false;
    std::size_t top_size = static_cast<std::size_t>(d) + 1;

    // Purity: every simplex is a face of some top simplex. Mark top-down.
    std::set<Simplex, SimplexLess> covered;
    for (const Simplex& s : simplices_) {
        if (s.size() != top_size) continue;
        std::size_t k = s.size();
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            Simplex face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) face.push_back(s[b]);
            covered.insert(std::move(face));
        }
    }
    if (covered.size() != simplices_.size()) return false;

    // Every codim-1 simplex lies in exactly two tops.
    std::map<Simplex, int> facet_count;
    for (const Simplex& s : simplices_) {
        if (s.size() != top_size) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex facet;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) facet.push_back(s[i]);
            ++facet_count[facet];
        }
    }
    for (const auto& [facet, count] : facet_count)
        if (count != 2) return false;
    return true;
}

void Complex::set_orientation(std::map<Simplex, int> sign_of_top) {
    std::vector<std::size_t> tops = top_indices();
    if (sign_of_top.size() != tops.size())
        throw InputError("orientation: expected one sign per top simplex (" +
                         std::to_string(tops.size()) + " tops, got " +
                         std::to_string(sign_of_top.size()) + ")");
    std::vector<std::int8_t> signs(simplices_.size(), 0);
    for (const auto& [simplex, sign] : sign_of_top) {
        if (sign != 1 && sign != -1)
            throw InputError("orientation: signs must be +1 or -1");
        auto idx = index_of(simplex);
        if (!idx || simplices_[*idx].size() != static_cast<std::size_t>(dim()) + 1)
            throw InputError("orientation: not a top simplex of the complex");
        signs[*idx] = static_cast<std::int8_t>(sign);
    }
    orientation_ = std::move(signs);
}

int Complex::orientation_of(std::size_t top_simplex_index) const {
    if (orientation_.empty()) throw InputError("orientation: none set");
    if (top_simplex_index >= simplices_.size() ||
        orientation_[top_simplex_index] == 0)
        throw InputError("orientation: not a top simplex");
    return orientation_[top_simplex_index];
}

bool Complex::orientation_coherent() const {
    if (!has_orientation()) return false;
    std::size_t top_size = static_cast<std::size_t>(dim()) + 1;
    // facet -> accumulated induced signs
    std::map<Simplex, std::vector<int>> induced;
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
        const Simplex& s = simplices_[i];
        if (s.size() != top_size) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex facet;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != drop) facet.push_back(s[k]);
            int sign = (drop % 2 == 0 ? 1 : -1) * orientation_[i];
            induced[std::move(facet)].push_back(sign);
        }
    }
    for (const auto& [facet, signs] : induced) {
        if (signs.size() != 2) return false;
        if (signs[0] + signs[1] != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

Subdivision barycentric_subdivision(const Complex& parent) {
    const auto& simplices = parent.simplices();
    std::size_t n = simplices.size();

    Subdivision out;
    out.vertex_for_simplex.resize(n);
    std::iota(out.vertex_for_simplex.begin(), out.vertex_for_simplex.end(), 0);

    // Maximal chains: one per ordering of the vertices of a maximal simplex,
    // taking prefixes as the chain.
    std::vector<Simplex> flags;
    for (const Simplex& m : parent.maximal_simplices()) {
        Simplex perm = m;
        std::sort(perm.begin(), perm.end());
        do {
            Simplex chain;
            Simplex prefix;
            for (int v : perm) {
                prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(static_cast<int>(*parent.index_of(prefix)));
            }
            std::sort(chain.begin(), chain.end());
            flags.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.complex = Complex::from_maximal(static_cast<int>(n), std::move(flags),
                                        parent.declared_dim());
    return out;
}

Components components_of(const Complex& c) {
    std::vector<int> parent(static_cast<std::size_t>(c.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<bool> present(static_cast<std::size_t>(c.vertex_count()), false);

    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };

    for (const Simplex& s : c.simplices()) {
        for (int v : s) present[static_cast<std::size_t>(v)] = true;
        for (std::size_t i = 1; i < s.size(); ++i) unite(s[0], s[i]);
    }

    Components out;
    out.component_of_vertex.assign(static_cast<std::size_t>(c.vertex_count()), -1);
    std::map<int, int> id_of_root;
    for (int v = 0; v < c.vertex_count(); ++v) {
        if (!present[static_cast<std::size_t>(v)]) continue;
        int root = find(v);
        auto it = id_of_root.emplace(root, static_cast<int>(id_of_root.size())).first;
        out.component_of_vertex[static_cast<std::size_t>(v)] = it->second;
    }
    out.dims.assign(id_of_root.size(), 0);
    for (const Simplex& s : c.simplices()) {
        int comp = out.component_of_vertex[static_cast<std::size_t>(s[0])];
        out.dims[static_cast<std::size_t>(comp)] =
            std::max(out.dims[static_cast<std::size_t>(comp)],
                     static_cast<int>(s.size()) - 1);
    }
    return out;
}

}  // namespace autfn
