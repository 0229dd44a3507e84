#include "autfn/equivariant.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "autfn/errors.hpp"

namespace autfn {

namespace {

Simplex image_simplex(const Simplex& s, const Perm& g) {
    Simplex out;
    out.reserve(s.size());
    for (int v : s) out.push_back(g[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

bool fixes_vertexwise(const Simplex& s, const Perm& g) {
    for (int v : s)
        if (g[static_cast<std::size_t>(v)] != v) return false;
    return true;
}

bool action_is_regular(const Complex& c, const PermGroup& g) {
    for (const Perm& p : g.elements()) {
        if (perm_is_identity(p)) continue;
        for (const Simplex& s : c.simplices())
            if (image_simplex(s, p) == s && !fixes_vertexwise(s, p)) return false;
    }
    return true;
}

void require_regular(const EquivariantComplex& e, const char* who) {
    if (!e.regular)
        throw InputError(std::string(who) +
                         ": action is not regular; subdivide first");
}

long long int_pow(std::uint32_t base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Sign of the permutation sorting g(s) when s is ascending.
int image_sort_sign(const Simplex& s, const Perm& g) {
    std::vector<int> image;
    image.reserve(s.size());
    for (int v : s) image.push_back(g[static_cast<std::size_t>(v)]);
    int sign = 1;
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j)
            if (image[i] > image[j]) sign = -sign;
    return sign;
}

}  // namespace

EquivariantComplex make_equivariant(Complex complex, std::vector<Perm> generators,
                                    std::size_t cap) {
    for (const Perm& g : generators)
        if (!perm_valid(g, complex.vertex_count()))
            throw InputError("equivariant: generator is not a permutation of the vertex set");
    PermGroup group = PermGroup::closure(complex.vertex_count(), std::move(generators), cap);
    for (const Perm& g : group.elements())
        for (const Simplex& s : complex.simplices())
            if (!complex.contains(image_simplex(s, g)))
                throw InputError("equivariant: group element does not preserve the complex");
    bool regular = action_is_regular(complex, group);
    return {std::move(complex), std::move(group), regular};
}

EquivariantComplex subdivide(const EquivariantComplex& e) {
    Subdivision sd = barycentric_subdivision(e.complex);
    std::vector<Perm> induced;
    induced.reserve(e.group.generators().size());
    for (const Perm& g : e.group.generators()) {
        Perm h(sd.complex.vertex_count());
        for (std::size_t i = 0; i < e.complex.simplices().size(); ++i) {
            Simplex image = image_simplex(e.complex.simplices()[i], g);
            h[i] = static_cast<int>(*e.complex.index_of(image));
        }
        induced.push_back(std::move(h));
    }
    if (induced.empty()) induced.push_back(perm_identity(sd.complex.vertex_count()));
    return make_equivariant(std::move(sd.complex), std::move(induced));
}

EquivariantComplex regularize(EquivariantComplex e, int max_rounds, int* rounds_used) {
    int rounds = 0;
    while (!e.regular && rounds < max_rounds) {
        e = subdivide(e);
        ++rounds;
    }
    if (rounds_used) *rounds_used = rounds;
    if (!e.regular)
        throw Falsification("regularize: action still not regular after " +
                            std::to_string(max_rounds) + " barycentric subdivisions");
    return e;
}

// ---------------------------------------------------------------------------

FixedSubcomplex fixed_subcomplex(const EquivariantComplex& e,
                                 std::span<const Perm> subgroup) {
    require_regular(e, "fixed_subcomplex");
    std::vector<bool> fixed(static_cast<std::size_t>(e.complex.vertex_count()), true);
    for (const Perm& g : subgroup)
        for (int v = 0; v < e.complex.vertex_count(); ++v)
            if (g[static_cast<std::size_t>(v)] != v) fixed[static_cast<std::size_t>(v)] = false;

    std::vector<Simplex> kept;
    for (const Simplex& s : e.complex.simplices()) {
        bool all_fixed = true;
        for (int v : s)
            if (!fixed[static_cast<std::size_t>(v)]) {
                all_fixed = false;
                break;
            }
        if (all_fixed) kept.push_back(s);
    }
    FixedSubcomplex out;
    out.complex = Complex::from_simplices(e.complex.vertex_count(), std::move(kept),
                                          e.complex.declared_dim());
    out.components = components_of(out.complex);
    return out;
}

std::vector<int> fixed_vertices(const EquivariantComplex& e) {
    std::vector<int> out;
    for (int v = 0; v < e.complex.vertex_count(); ++v) {
        bool fixed = true;
        for (const Perm& g : e.group.elements())
            if (g[static_cast<std::size_t>(v)] != v) {
                fixed = false;
                break;
            }
        // Only vertices of the complex count.
        if (fixed && e.complex.contains({v})) out.push_back(v);
    }
    return out;
}

StrataReport strata_chi(const EquivariantComplex& e, std::uint32_t p) {
    require_regular(e, "strata_chi");
    if (p < 2) throw InputError("strata_chi: p must be prime");
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InputError("strata_chi: p must be prime");
    auto n = e.group.p_group_exponent(p);
    if (!n)
        throw InputError("strata_chi: group order " + std::to_string(e.group.order()) +
                         " is not a power of " + std::to_string(p));

    StrataReport report;
    report.p = p;
    report.n = *n;
    report.total_chi = e.complex.chi();
    report.rows.resize(static_cast<std::size_t>(*n) + 1);
    for (int i = 0; i <= *n; ++i) {
        report.rows[static_cast<std::size_t>(i)].i = i;
        report.rows[static_cast<std::size_t>(i)].p_power = int_pow(p, *n - i);
    }

    for (const Simplex& s : e.complex.simplices()) {
        std::size_t stab = 0;
        for (const Perm& g : e.group.elements())
            if (fixes_vertexwise(s, g)) ++stab;
        int i = 0;
        std::size_t q = stab;
        while (q % p == 0) {
            q /= p;
            ++i;
        }
        if (q != 1)
            throw Falsification("strata_chi: stabilizer order " + std::to_string(stab) +
                                " is not a power of " + std::to_string(p));
        report.rows[static_cast<std::size_t>(i)].chi_c += s.size() % 2 == 1 ? 1 : -1;
    }

    long long sum = 0;
    for (auto& row : report.rows) {
        if (row.chi_c % row.p_power != 0)
            throw Falsification("strata_chi: chi_c(X_" + std::to_string(row.i) + ") = " +
                                std::to_string(row.chi_c) + " is not divisible by " +
                                std::to_string(row.p_power));
        row.a = row.chi_c / row.p_power;
        sum += row.chi_c;
    }
    if (sum != report.total_chi)
        throw Falsification("strata_chi: strata sum " + std::to_string(sum) +
                            " differs from chi " + std::to_string(report.total_chi));
    return report;
}

// ---------------------------------------------------------------------------

QuotientReport free_quotient_chi(const EquivariantComplex& input) {
    EquivariantComplex e = input;
    int rounds = 0;
    e = regularize(std::move(e), 2, &rounds);

    // Freeness on vertices; after regularization this is honest freeness.
    for (const Perm& g : e.group.elements()) {
        if (perm_is_identity(g)) continue;
        for (const Simplex& s : e.complex.simplices())
            if (s.size() == 1 && g[static_cast<std::size_t>(s[0])] == s[0])
                throw InputError("free_quotient_chi: action is not free (vertex " +
                                 std::to_string(s[0]) + " is fixed)");
    }

    QuotientReport report;
    report.chi_total = e.complex.chi();
    report.group_order = e.group.order();

    for (int extra = 0;; ++extra) {
        if (extra > 3)
            throw Falsification("free_quotient_chi: orbit complex not simplicial after 3 subdivisions");

        // Vertex orbits, labelled by their minimal representative.
        std::vector<int> orbit_min(static_cast<std::size_t>(e.complex.vertex_count()));
        for (int v = 0; v < e.complex.vertex_count(); ++v) {
            int m = v;
            for (const Perm& g : e.group.elements())
                m = std::min(m, g[static_cast<std::size_t>(v)]);
            orbit_min[static_cast<std::size_t>(v)] = m;
        }
        std::map<int, int> rep_id;
        for (int v = 0; v < e.complex.vertex_count(); ++v)
            if (orbit_min[static_cast<std::size_t>(v)] == v)
                rep_id.emplace(v, static_cast<int>(rep_id.size()));

        bool valid = true;
        std::set<Simplex> quotient;
        std::map<std::size_t, std::size_t> dim_counts;
        for (const Simplex& s : e.complex.simplices()) {
            Simplex q;
            q.reserve(s.size());
            for (int v : s) q.push_back(rep_id.at(orbit_min[static_cast<std::size_t>(v)]));
            std::sort(q.begin(), q.end());
            if (std::adjacent_find(q.begin(), q.end()) != q.end()) {
                valid = false;  // two vertices of one simplex in the same orbit
                break;
            }
            quotient.insert(std::move(q));
            ++dim_counts[s.size()];
        }
        if (valid) {
            // Distinct orbits must stay distinct: with a free action every
            // simplex orbit has |G| members, so counts must divide exactly.
            std::map<std::size_t, std::size_t> q_counts;
            for (const Simplex& q : quotient) ++q_counts[q.size()];
            for (const auto& [size, count] : dim_counts)
                if (q_counts[size] * e.group.order() != count) {
                    valid = false;
                    break;
                }
        }
        if (!valid) {
            e = subdivide(e);
            ++rounds;
            continue;
        }

        Complex qc = Complex::from_simplices(
            static_cast<int>(rep_id.size()),
            std::vector<Simplex>(quotient.begin(), quotient.end()));
        report.chi_quotient = qc.chi();
        report.subdivisions_used = rounds;
        break;
    }

    if (report.chi_total !=
        static_cast<long long>(report.group_order) * report.chi_quotient)
        throw Falsification("free_quotient_chi: chi(X) = " + std::to_string(report.chi_total) +
                            " but |G| * chi(X/G) = " +
                            std::to_string(static_cast<long long>(report.group_order) *
                                           report.chi_quotient));
    return report;
}

// ---------------------------------------------------------------------------

FixedSplit fixed_split_chi(const EquivariantComplex& e) {
    require_regular(e, "fixed_split_chi");
    std::size_t n = e.group.order();
    bool prime = n >= 2;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) prime = false;
    if (n != 1 && !prime)
        throw InputError("fixed_split_chi: group must be cyclic of prime order (or trivial), got order " +
                         std::to_string(n));

    FixedSplit out;
    out.chi_total = e.complex.chi();

    FixedSubcomplex fixed = fixed_subcomplex(e, e.group.elements());
    out.chi_fixed = fixed.complex.chi();

    // Compact-support chi of the open complement, summed simplex by simplex.
    for (const Simplex& s : e.complex.simplices())
        if (!fixed.complex.contains(s)) out.chi_complement += s.size() % 2 == 1 ? 1 : -1;

    if (out.chi_total != out.chi_complement + out.chi_fixed)
        throw Falsification("fixed_split_chi: chi(X) != chi_c(X-F) + chi(F)");
    return out;
}

// ---------------------------------------------------------------------------

BorelReport borel_check(const EquivariantComplex& e, int basepoint) {
    require_regular(e, "borel_check");
    if (e.complex.declared_dim() < 0)
        throw InputError("borel_check: complex has no declared manifold dimension");
    if (!e.complex.is_closed_pseudo_manifold())
        throw InputError("borel_check: complex fails the closed pseudo-manifold check");
    if (components_of(e.complex).count() != 1)
        throw InputError("borel_check: complex must be connected");
    if (basepoint < 0 || basepoint >= e.complex.vertex_count() ||
        !e.complex.contains({basepoint}))
        throw InputError("borel_check: basepoint is not a vertex of the complex");
    for (const Perm& g : e.group.elements())
        if (g[static_cast<std::size_t>(basepoint)] != basepoint)
            throw InputError("borel_check: basepoint is not fixed by the whole group");

    // The group must be elementary abelian; find its prime.
    std::size_t order = e.group.order();
    if (order < 2)
        throw InputError("borel_check: group must be a nontrivial elementary p-group");
    std::uint32_t p = 2;
    while (order % p != 0) ++p;
    if (!e.group.elementary_abelian_rank(p))
        throw InputError("borel_check: group is not elementary abelian");

    BorelReport report;
    report.basepoint = basepoint;
    report.manifold_dim = e.complex.declared_dim();

    auto dim_at_basepoint = [&](std::span<const Perm> subgroup) {
        FixedSubcomplex f = fixed_subcomplex(e, subgroup);
        int comp = f.components.component_of_vertex[static_cast<std::size_t>(basepoint)];
        if (comp < 0)
            throw Falsification("borel_check: basepoint missing from its own fixed set");
        return f.components.dims[static_cast<std::size_t>(comp)];
    };

    report.fixed_dim = dim_at_basepoint(e.group.elements());

    long long sum = 0;
    for (const auto& subgroup_indices : e.group.index_p_subgroups(p)) {
        std::vector<Perm> subgroup;
        subgroup.reserve(subgroup_indices.size());
        for (std::size_t idx : subgroup_indices) subgroup.push_back(e.group.elements()[idx]);
        BorelReport::Term term;
        term.subgroup = subgroup_indices;
        term.fixed_dim = dim_at_basepoint(subgroup);
        sum += term.fixed_dim - report.fixed_dim;
        report.terms.push_back(std::move(term));
    }
    report.identity_holds =
        static_cast<long long>(report.manifold_dim - report.fixed_dim) == sum;
    return report;
}

// ---------------------------------------------------------------------------

bool orientation_preserving(const Complex& c, const Perm& g) {
    if (!c.has_orientation()) throw InputError("orientation_preserving: no orientation set");
    int verdict = 0;
    for (std::size_t t : c.top_indices()) {
        const Simplex& s = c.simplices()[t];
        Simplex image = image_simplex(s, g);
        auto image_idx = c.index_of(image);
        if (!image_idx)
            throw InputError("orientation_preserving: element does not preserve the complex");
        int lhs = c.orientation_of(*image_idx) * image_sort_sign(s, g);
        int rhs = c.orientation_of(t);
        int this_one = lhs == rhs ? 1 : -1;
        if (verdict == 0) verdict = this_one;
        if (verdict != this_one)
            throw InputError("orientation_preserving: mixed behaviour across top simplices "
                             "(orientation not coherent or complex disconnected)");
    }
    return verdict >= 0;
}

RankCheckReport effective_rank_bound_check(const EquivariantComplex& input) {
    const Complex& c = input.complex;
    if (c.declared_dim() < 1)
        throw InputError("rank_check: complex has no declared manifold dimension");
    if (!c.is_closed_pseudo_manifold())
        throw InputError("rank_check: complex fails the closed pseudo-manifold check");
    // The rank inequalities presuppose a connected manifold.
    if (components_of(c).count() != 1)
        throw InputError("rank_check: complex must be connected");
    if (input.group.order() < 2)
        throw InputError("rank_check: group must be nontrivial");

    // Prime and rank.
    std::size_t order = input.group.order();
    std::uint32_t p = 2;
    while (order % p != 0) ++p;
    auto rank = input.group.elementary_abelian_rank(p);
    if (!rank)
        throw InputError("rank_check: group is not an elementary abelian p-group");

    RankCheckReport report;
    report.p = p;
    report.k = *rank;
    report.r = c.declared_dim();

    // Effectiveness: every non-identity element must move a vertex of the
    // complex (unused vertex indices do not count).
    for (const Perm& g : input.group.elements()) {
        if (perm_is_identity(g)) continue;
        bool moves = false;
        for (int v = 0; v < c.vertex_count() && !moves; ++v)
            if (c.contains({v}) && g[static_cast<std::size_t>(v)] != v) moves = true;
        if (!moves)
            throw InputError("rank_check: action is not effective");
    }

    // Orientation-preserving mode is read off the input complex, where the
    // orientation data lives; the homeomorphisms do not change under
    // subdivision.
    if (c.has_orientation()) {
        if (!c.orientation_coherent())
            throw InputError("rank_check: orientation data is not coherent");
        bool all_preserve = true;
        for (const Perm& g : input.group.elements())
            if (!orientation_preserving(c, g)) {
                all_preserve = false;
                break;
            }
        report.orientation_preserving = all_preserve && p == 2;
    }

    EquivariantComplex e = regularize(input);

    FixedSubcomplex fixed = fixed_subcomplex(e, e.group.elements());
    if (fixed.components.count() == 0) {
        report.fixed_empty = true;
        report.asserted = false;
        report.inequality_holds = false;
        return report;
    }
    int r0 = 0;
    for (int d : fixed.components.dims) r0 = std::max(r0, d);
    report.r0 = r0;
    report.asserted = true;
    if (p != 2) {
        report.bound = (report.r - r0) / 2;
        report.inequality_holds = 2 * report.k <= report.r - r0;
    } else if (report.orientation_preserving) {
        report.bound = report.r - 1 - r0;
        report.inequality_holds = report.k <= report.bound;
    } else {
        report.bound = report.r - r0;
        report.inequality_holds = report.k <= report.bound;
    }
    return report;
}

}  // namespace autfn
