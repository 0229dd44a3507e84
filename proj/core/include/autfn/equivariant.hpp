#pragma once

// Finite group actions on simplicial complexes by vertex permutations, and
// the fixed-set / stratification / quotient computations built on them.
//
// An action is regular when every group element fixing a simplex setwise
// fixes it vertexwise; barycentric subdivision enforces this (twice always
// suffices). On a regular action the vertexwise stabilizer of a simplex is
// the point stabilizer of its interior, so stabilizer strata are unions of
// open simplices and their compact-support Euler characteristics are plain
// alternating sums.

#include <cstdint>
#include <span>
#include <vector>

#include "autfn/complex.hpp"
#include "autfn/perm.hpp"

namespace autfn {

struct EquivariantComplex {
    Complex complex;
    PermGroup group;
    bool regular = false;
};

// Validates that every generator is a permutation of the vertex set mapping
// simplices to simplices, closes the group, and computes the regular flag.
EquivariantComplex make_equivariant(Complex complex, std::vector<Perm> generators,
                                    std::size_t cap = 1'000'000);

// Barycentric subdivision with the induced action. chi is unchanged;
// applying this twice always yields a regular action. Orientation data does
// not survive subdivision.
EquivariantComplex subdivide(const EquivariantComplex& e);

// Subdivides until regular (at most max_rounds). rounds_used reports how
// many subdivisions happened.
EquivariantComplex regularize(EquivariantComplex e, int max_rounds = 2,
                              int* rounds_used = nullptr);

// --- fixed subcomplexes ----------------------------------------------------

struct FixedSubcomplex {
    Complex complex;           // simplices fixed vertexwise by the subgroup
    Components components;     // components with their dimensions
};

// Requires a regular action. The subgroup is any subset of the acting
// group; pass group.elements() for the full fixed set.
FixedSubcomplex fixed_subcomplex(const EquivariantComplex& e,
                                 std::span<const Perm> subgroup);

// --- stabilizer strata (chi(X_i) = p^{n-i} a_i) ------------------------------

struct StrataReport {
    std::uint32_t p = 2;
    int n = 0;              // group order = p^n
    long long total_chi = 0;
    struct Row {
        int i = 0;              // stabilizer order = p^i
        long long chi_c = 0;    // alternating sum over the open simplices
        long long p_power = 1;  // p^{n-i}
        long long a = 0;        // chi_c / p^{n-i}
    };
    std::vector<Row> rows;  // i = 0..n
};

// Requires a regular action of a group of order p^n. Throws Falsification
// if a stratum violates the p^{n-i} divisibility or the strata do not add
// up to chi.
StrataReport strata_chi(const EquivariantComplex& e, std::uint32_t p);

// --- free quotients ----------------------------------------------------------

struct QuotientReport {
    long long chi_total = 0;
    long long chi_quotient = 0;
    std::size_t group_order = 0;
    int subdivisions_used = 0;  // internal rounds to make the orbit complex simplicial
};

// Requires a regular action that is free on vertices. Internally subdivides
// until the orbit complex is honestly simplicial, then compares chi values;
// for prime group order the identity chi(X) = |G| chi(X/G) is asserted.
QuotientReport free_quotient_chi(const EquivariantComplex& e);

// --- fixed/complement splitting ----------------------------------------------

struct FixedSplit {
    long long chi_total = 0;
    long long chi_complement = 0;  // compact-support chi of X - F
    long long chi_fixed = 0;       // chi of the fixed subcomplex F
};

// Requires a regular action of a cyclic group of prime order (the trivial
// group is allowed and fixes everything). Asserts
// chi(X) = chi_c(X - F) + chi(F) exactly.
FixedSplit fixed_split_chi(const EquivariantComplex& e);

// --- the dimension identity at a fixed point ---------------------------------

struct BorelReport {
    int basepoint = -1;
    int manifold_dim = 0;  // declared dimension n
    int fixed_dim = 0;     // r = dim of the basepoint component of Fix(G)
    struct Term {
        std::vector<std::size_t> subgroup;  // element indices into group.elements()
        int fixed_dim = 0;                  // n(H)
    };
    std::vector<Term> terms;  // one per index-p subgroup H
    bool identity_holds = false;  // n - r == sum_H (n(H) - r)
};

// Requires: regular action of an elementary abelian p-group on a declared
// closed pseudo-manifold, basepoint a vertex fixed by the whole group.
BorelReport borel_check(const EquivariantComplex& e, int basepoint);

// Vertices fixed by every group element.
std::vector<int> fixed_vertices(const EquivariantComplex& e);

// --- rank bound check ---------------------------------------------------------

struct RankCheckReport {
    std::uint32_t p = 2;
    int k = 0;   // rank of the elementary abelian group
    int r = 0;   // declared manifold dimension
    int r0 = 0;  // dim Fix(G); meaningful only when !fixed_empty
    bool fixed_empty = false;
    bool orientation_preserving = false;  // mode actually used (p = 2 only)
    long long bound = 0;  // k must be <= bound when asserted
    bool inequality_holds = false;
    bool asserted = false;  // false when Fix(G) is empty (hypothesis fails)
};

// Auto-detects p and the orientation-preserving mode (from orientation data
// on the input complex, when present), regularizes internally, and checks
// the applicable rank inequality. The action must be effective and the
// complex a declared closed pseudo-manifold.
RankCheckReport effective_rank_bound_check(const EquivariantComplex& e);

// True iff g maps every oriented top simplex to a consistently
// positively-oriented image. Requires coherent orientation data.
bool orientation_preserving(const Complex& c, const Perm& g);

}  // namespace autfn
