#include "autfn/perm.hpp"

#include <algorithm>

#include "autfn/errors.hpp"

namespace autfn {

Perm perm_identity(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

bool perm_is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw InputError("perm_compose: degree mismatch");
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

Perm perm_inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return out;
}

int perm_order(const Perm& p) {
    Perm q = p;
    int k = 1;
    while (!perm_is_identity(q)) {
        q = perm_compose(p, q);
        ++k;
        if (k > 1'000'000) throw InputError("perm_order: runaway");
    }
    return k;
}

bool perm_valid(const Perm& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

PermGroup PermGroup::closure(int degree, std::vector<Perm> generators, std::size_t cap) {
    for (const Perm& g : generators)
        if (!perm_valid(g, degree))
            throw InputError("PermGroup: generator is not a permutation of the stated degree");

    PermGroup group;
    group.degree_ = degree;
    group.generators_ = std::move(generators);

    auto push = [&](const Perm& p) {
        if (group.index_.contains(p)) return;
        if (group.elements_.size() >= cap)
            throw CapExceeded("PermGroup: more than " + std::to_string(cap) + " elements");
        group.index_.emplace(p, group.elements_.size());
        group.elements_.push_back(p);
    };

    push(perm_identity(degree));
    for (std::size_t next = 0; next < group.elements_.size(); ++next) {
        const Perm current = group.elements_[next];
        for (const Perm& g : group.generators_) push(perm_compose(current, g));
    }
    return group;
}

bool PermGroup::contains(const Perm& p) const { return index_.contains(p); }

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> PermGroup::p_group_exponent(std::uint32_t p) const {
    if (p < 2) throw InputError("p_group_exponent: p must be >= 2");
    std::size_t n = order();
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return n == 1 ? std::optional<int>(k) : std::nullopt;
}

std::optional<int> PermGroup::elementary_abelian_rank(std::uint32_t p) const {
    auto exponent = p_group_exponent(p);
    if (!exponent) return std::nullopt;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const Perm& a = elements_[i];
        if (!perm_is_identity(a) && perm_order(a) != static_cast<int>(p))
            return std::nullopt;
        for (std::size_t j = i + 1; j < elements_.size(); ++j)
            if (perm_compose(a, elements_[j]) != perm_compose(elements_[j], a))
                return std::nullopt;
    }
    return exponent;
}

std::vector<std::vector<std::size_t>> PermGroup::index_p_subgroups(std::uint32_t p) const {
    auto rank = elementary_abelian_rank(p);
    if (!rank)
        throw InputError("index_p_subgroups: group is not elementary abelian of exponent p");
    int k = *rank;

    // Greedy basis in element-table order.
    std::vector<Perm> basis;
    {
        std::map<Perm, bool> span;
        span[perm_identity(degree_)] = true;
        for (const Perm& e : elements_) {
            if (span.contains(e)) continue;
            basis.push_back(e);
            // Extend the span by the new basis vector.
            std::vector<Perm> old;
            old.reserve(span.size());
            for (const auto& [q, _] : span) old.push_back(q);
            for (const Perm& q : old) {
                Perm power = q;
                for (std::uint32_t c = 1; c < p; ++c) {
                    power = perm_compose(power, e);
                    span[power] = true;
                }
            }
            if (static_cast<int>(basis.size()) == k) break;
        }
    }
    if (static_cast<int>(basis.size()) != k)
        throw InputError("index_p_subgroups: basis extraction failed");

    // Coordinates of every element with respect to the basis.
    std::map<Perm, std::vector<std::uint32_t>> coords;
    {
        std::vector<std::uint32_t> tuple(static_cast<std::size_t>(k), 0);
        while (true) {
            Perm prod = perm_identity(degree_);
            for (int b = 0; b < k; ++b)
                for (std::uint32_t c = 0; c < tuple[static_cast<std::size_t>(b)]; ++c)
                    prod = perm_compose(prod, basis[static_cast<std::size_t>(b)]);
            coords[prod] = tuple;
            int pos = k - 1;
            while (pos >= 0) {
                if (++tuple[static_cast<std::size_t>(pos)] < p) break;
                tuple[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    if (coords.size() != order())
        throw InputError("index_p_subgroups: coordinate map is not a bijection");

    // Index-p subgroups = kernels of the nonzero functionals, normalized so
    // the first nonzero coefficient is 1, enumerated in lexicographic order.
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::uint32_t> lambda(static_cast<std::size_t>(k), 0);
    while (true) {
        int pos = k - 1;
        while (pos >= 0) {
            if (++lambda[static_cast<std::size_t>(pos)] < p) break;
            lambda[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        // Keep only normalized functionals (first nonzero coefficient 1).
        std::uint32_t first = 0;
        for (std::uint32_t c : lambda)
            if (c) {
                first = c;
                break;
            }
        if (first != 1) continue;
        std::vector<std::size_t> subgroup;
        for (std::size_t e = 0; e < elements_.size(); ++e) {
            const auto& tuple = coords.at(elements_[e]);
            std::uint32_t dot = 0;
            for (int b = 0; b < k; ++b)
                dot = (dot + lambda[static_cast<std::size_t>(b)] *
                                 tuple[static_cast<std::size_t>(b)]) %
                      p;
            if (dot == 0) subgroup.push_back(e);
        }
        std::sort(subgroup.begin(), subgroup.end());
        out.push_back(std::move(subgroup));
    }
    return out;
}

}  // namespace autfn
