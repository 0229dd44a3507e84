#pragma once

// Small permutation groups acting on vertex sets, enumerated by
// breadth-first closure. Only the handful of structural queries the
// equivariant machinery needs: p-group detection, elementary abelian
// structure, and the subgroups of index p.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace autfn {

// A permutation of {0, ..., n-1} in one-line notation: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
bool perm_is_identity(const Perm& p);
// (a * b)(x) = a(b(x)); b is applied first.
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
int perm_order(const Perm& p);
// Validates that p is a bijection on {0, ..., n-1}.
bool perm_valid(const Perm& p, int n);

class PermGroup {
public:
    // Breadth-first closure of the generators (identity included).
    static PermGroup closure(int degree, std::vector<Perm> generators,
                             std::size_t cap = 1'000'000);

    int degree() const { return degree_; }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }

    bool contains(const Perm& p) const;
    std::optional<std::size_t> index_of(const Perm& p) const;

    // order() == p^k; returns k.
    std::optional<int> p_group_exponent(std::uint32_t p) const;
    // Abelian with every non-identity element of order p; returns the rank.
    std::optional<int> elementary_abelian_rank(std::uint32_t p) const;

    // The subgroups of index p of an elementary abelian p-group, each as a
    // list of element indices into elements() (identity included),
    // deterministically ordered. For the cyclic group of order p this is
    // just the trivial subgroup.
    std::vector<std::vector<std::size_t>> index_p_subgroups(std::uint32_t p) const;

private:
    int degree_ = 0;
    std::vector<Perm> elements_;
    std::vector<Perm> generators_;
    std::map<Perm, std::size_t> index_;
};

}  // namespace autfn
