#pragma once

// Automorphisms of the free group F_n, carried as basis images together with
// a certified inverse. The named finite-order elements (inversions e_i,
// transpositions (ij), rotations R_i, Nielsen maps) are constructed with
// their exact inverses attached; composition maintains the certificate.
//
// Generic inversion of an arbitrary images-tuple is deliberately not
// offered: every element this library needs has an explicit inverse.

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "autfn/word.hpp"

namespace autfn {

class Automorphism {
public:
    // Certifies at construction that the two image tuples are mutually
    // inverse substitutions; throws InputError otherwise.
    Automorphism(std::vector<Word> images, std::vector<Word> inverse_images);

    static Automorphism identity(int rank);

    int rank() const { return rank_; }
    std::span<const Word> images() const { return images_; }
    std::span<const Word> inverse_images() const { return inverse_images_; }

    // Image of the basis word a_i (1-based).
    const Word& image_of(int i) const;

    Word apply(const Word& w) const;
    Word apply_inverse(const Word& w) const;

    Automorphism inverse() const;
    bool is_identity() const;

    // Equality is pointwise equality of images.
    bool operator==(const Automorphism& other) const {
        return rank_ == other.rank_ && images_ == other.images_;
    }

    // Canonical byte key of the images tuple; used for hashing/enumeration.
    std::string key() const;

private:
    struct Trusted {};
    Automorphism(Trusted, std::vector<Word> images, std::vector<Word> inverse_images);

    friend Automorphism compose(const Automorphism&, const Automorphism&);

    int rank_;
    std::vector<Word> images_;
    std::vector<Word> inverse_images_;
};

// f after g: compose(f, g)(a_i) = f(g(a_i)). g is applied first.
Automorphism compose(const Automorphism& f, const Automorphism& g);

// ---------------------------------------------------------------------------
// Named generators

enum class GeneratorKind {
    Inversion,      // e_i : a_i -> a_i^-1
    Transposition,  // (ij) : a_i <-> a_j
    Rotation,       // R_i : a_{2i-1} -> a_{2i}^-1, a_{2i} -> a_{2i}^-1 a_{2i-1}
    Nielsen,        // lambda_{ij} : a_i -> a_i a_j
};

struct NamedGenerator {
    GeneratorKind kind;
    int i = 0;
    int j = 0;  // used by Transposition and Nielsen
};

Automorphism make_named(const NamedGenerator& g, int rank);

Automorphism inversion(int i, int rank);
Automorphism transposition(int i, int j, int rank);
Automorphism rotation(int i, int rank);       // requires rank >= 2i
Automorphism nielsen(int i, int j, int rank);

// delta = e_1 e_2 ... e_n, the product of all inversions.
Automorphism delta(int rank);

// ---------------------------------------------------------------------------
// Orders and enumeration

// Least k <= cap with f^k = id, or nullopt if the cap is exceeded.
std::optional<int> order(const Automorphism& f, int cap);

// Default element cap for subgroup enumeration.
inline constexpr std::size_t kDefaultEnumerationCap = 10'000;

// A finite subgroup enumerated by breadth-first closure: the identity first,
// then products in discovery order (depth, then generator index). Closed
// under composition and inversion by construction.
class GroupTable {
public:
    int rank() const { return rank_; }
    const std::vector<Automorphism>& elements() const { return elements_; }
    const std::vector<Automorphism>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }

    bool contains(const Automorphism& f) const;
    std::optional<std::size_t> index_of(const Automorphism& f) const;

private:
    friend GroupTable closure(std::span<const Automorphism>, std::size_t);

    int rank_ = 0;
    std::vector<Automorphism> elements_;
    std::vector<Automorphism> generators_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Breadth-first closure of the generated subgroup. Throws CapExceeded if
// more than cap elements are discovered (the subgroup may be infinite).
GroupTable closure(std::span<const Automorphism> gens,
                   std::size_t cap = kDefaultEnumerationCap);

// True iff the abelianized matrix has determinant +1, i.e. f lies in the
// index-two special subgroup. Defined in matrix.cpp.
bool is_special(const Automorphism& f);

}  // namespace autfn
