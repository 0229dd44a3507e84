#pragma once

// Finite abstract simplicial complexes. Simplices are sorted vertex index
// sequences, the simplex set is closed under taking faces, and the global
// order (dimension, then lexicographic) is the deterministic iteration
// order everywhere.
//
// The `declared_dim` is caller metadata saying "this complex triangulates a
// closed manifold of that dimension"; it is validated only up to the
// pseudo-manifold check (every codimension-1 simplex lies in exactly two
// top simplices).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace autfn {

using Simplex = std::vector<int>;  // sorted, distinct vertex indices

class Complex {
public:
    Complex() = default;

    // Face-closes the given maximal simplices.
    static Complex from_maximal(int vertex_count, std::vector<Simplex> maximal,
                                int declared_dim = -1);
    // Requires `simplices` to be already face-closed (validated).
    static Complex from_simplices(int vertex_count, std::vector<Simplex> simplices,
                                  int declared_dim = -1);

    int vertex_count() const { return vertex_count_; }
    int declared_dim() const { return declared_dim_; }
    void set_declared_dim(int d) { declared_dim_ = d; }

    // Maximal simplex dimension (-1 for the empty complex).
    int dim() const;

    const std::vector<Simplex>& simplices() const { return simplices_; }
    std::size_t simplex_count() const { return simplices_.size(); }

    bool contains(const Simplex& sorted) const;
    std::optional<std::size_t> index_of(const Simplex& sorted) const;

    // Euler characteristic from face counts.
    long long chi() const;
    // Number of simplices per dimension.
    std::vector<std::size_t> face_vector() const;

    // Simplices of maximal dimension, as indices into simplices().
    std::vector<std::size_t> top_indices() const;
    // Simplices not properly contained in another simplex.
    std::vector<Simplex> maximal_simplices() const;

    // Every codimension-1 simplex lies in exactly two top simplices and
    // every simplex is a face of a top simplex.
    bool is_closed_pseudo_manifold() const;

    // --- orientation ------------------------------------------------------
    // An orientation assigns +-1 to every top simplex, read relative to the
    // ascending vertex order.
    bool has_orientation() const { return !orientation_.empty(); }
    void set_orientation(std::map<Simplex, int> sign_of_top);
    int orientation_of(std::size_t top_simplex_index) const;
    // Adjacent top simplices induce opposite signs on shared facets.
    bool orientation_coherent() const;

private:
    int vertex_count_ = 0;
    int declared_dim_ = -1;
    std::vector<Simplex> simplices_;                 // (dim, lex) sorted
    std::map<Simplex, std::size_t> index_;
    std::vector<std::int8_t> orientation_;           // aligned with simplices_
};

// Barycentric subdivision. The new vertex set is indexed by the parent's
// simplices, in the parent's simplex order.
struct Subdivision {
    Complex complex;
    // vertex_for_simplex[i] is the new vertex created at the barycenter of
    // parent.simplices()[i]; with this indexing it is simply i.
    std::vector<int> vertex_for_simplex;
};

Subdivision barycentric_subdivision(const Complex& parent);

// Connected components of a face-closed simplex set inside a complex:
// component ids per vertex (-1 for vertices not in the set) and the maximal
// simplex dimension per component.
struct Components {
    std::vector<int> component_of_vertex;
    std::vector<int> dims;        // per component
    int count() const { return static_cast<int>(dims.size()); }
};

Components components_of(const Complex& c);

}  // namespace autfn
