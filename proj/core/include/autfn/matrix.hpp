#pragma once

// Exact integer matrices and their reductions mod q: the linear side of the
// automorphism group, reached through abelianization. All arithmetic is
// overflow-checked 64-bit; anything larger aborts rather than wrapping.
//
// Text literal: row-major, rows separated by ';', entries by ',', e.g.
// `[0,1;-1,-1]`.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "autfn/automorphism.hpp"

namespace autfn {

class IntegerMatrix {
public:
    explicit IntegerMatrix(int n);  // zero matrix

    static IntegerMatrix identity(int n);
    // I + c*E_ij (1-based i, j; i != j).
    static IntegerMatrix elementary(int n, int i, int j, std::int64_t c);

    int size() const { return n_; }
    std::int64_t operator()(int r, int c) const { return e_[idx(r, c)]; }
    std::int64_t& operator()(int r, int c) { return e_[idx(r, c)]; }

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t idx(int r, int c) const;
    int n_;
    std::vector<std::int64_t> e_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.
std::int64_t det(const IntegerMatrix& m);

// Column i is the exponent-sum vector of f(a_i), so the map is
// multiplicative: abelianize(compose(f, g)) = abelianize(f) * abelianize(g).
IntegerMatrix abelianize(const Automorphism& f);

IntegerMatrix parse_matrix(std::string_view text);
std::string to_string(const IntegerMatrix& m);

// ---------------------------------------------------------------------------

class ModMatrix {
public:
    ModMatrix(int n, std::uint32_t modulus);  // zero matrix

    static ModMatrix identity(int n, std::uint32_t modulus);

    int size() const { return n_; }
    std::uint32_t modulus() const { return q_; }
    std::uint32_t operator()(int r, int c) const { return e_[idx(r, c)]; }
    void set(int r, int c, std::int64_t value);  // reduces into 0..q-1

    bool is_identity() const;
    std::string key() const;

    bool operator==(const ModMatrix&) const = default;

private:
    std::size_t idx(int r, int c) const;
    int n_;
    std::uint32_t q_;
    std::vector<std::uint32_t> e_;
};

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);

// Entrywise reduction; a ring homomorphism, so it commutes with products.
ModMatrix mod_reduce(const IntegerMatrix& m, std::uint32_t q);

std::string to_string(const ModMatrix& m);

// Closure of matrices mod q under multiplication, breadth-first, identity
// first, deterministic order.
struct ModGroupTable {
    std::uint32_t modulus = 0;
    std::vector<ModMatrix> elements;
    std::vector<ModMatrix> generators;
    bool generators_commute = false;
    bool generators_involutions = false;

    std::size_t order() const { return elements.size(); }
    bool contains(const ModMatrix& m) const;

    std::unordered_map<std::string, std::size_t> index;
};

ModGroupTable closure_mod(std::span<const ModMatrix> gens,
                          std::size_t cap = kDefaultEnumerationCap);

// Every element commutes with every element and every non-identity element
// has order exactly p.
bool is_elementary_abelian(const ModGroupTable& table, std::uint32_t p);

// True iff distinct elements of <gens> stay distinct under
// mod_reduce(abelianize(.), q).
bool restriction_injective(std::span<const Automorphism> gens, std::uint32_t q,
                           std::size_t cap = kDefaultEnumerationCap);

}  // namespace autfn
