#include "autfn/automorphism.hpp"

#include <cstring>

#include "autfn/errors.hpp"

namespace autfn {

namespace {

std::vector<Word> basis_images(int rank) {
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i) out.push_back(Word::generator(rank, i));
    return out;
}

void check_images_shape(const std::vector<Word>& images, int rank, const char* who) {
    if (static_cast<int>(images.size()) != rank)
        throw InputError(std::string(who) + ": expected " + std::to_string(rank) +
                         " images, got " + std::to_string(images.size()));
    for (const Word& w : images)
        if (w.rank() != rank)
            throw InputError(std::string(who) + ": image rank mismatch");
}

void append_i32(std::string& out, std::int32_t v) {
    char buf[sizeof v];
    std::memcpy(buf, &v, sizeof v);
    out.append(buf, sizeof v);
}

}  // namespace

Automorphism::Automorphism(std::vector<Word> images, std::vector<Word> inverse_images)
    : rank_(static_cast<int>(images.size())),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {
    check_images_shape(images_, rank_, "Automorphism");
    check_images_shape(inverse_images_, rank_, "Automorphism");
    for (int i = 1; i <= rank_; ++i) {
        Word a = Word::generator(rank_, i);
        if (apply(apply_inverse(a)) != a || apply_inverse(apply(a)) != a)
            throw InputError("Automorphism: inverse certificate fails on a" +
                             std::to_string(i));
    }
}

Automorphism::Automorphism(Trusted, std::vector<Word> images,
                           std::vector<Word> inverse_images)
    : rank_(static_cast<int>(images.size())),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {}

Automorphism Automorphism::identity(int rank) {
    if (rank < 0) throw InputError("identity: rank must be >= 0");
    auto b = basis_images(rank);
    return Automorphism(Trusted{}, b, b);
}

const Word& Automorphism::image_of(int i) const {
    if (i < 1 || i > rank_) throw InputError("image_of: index out of range");
    return images_[static_cast<std::size_t>(i) - 1];
}

Word Automorphism::apply(const Word& w) const {
    if (w.rank() != rank_) throw InputError("apply: rank mismatch");
    return apply_map(w, images_);
}

Word Automorphism::apply_inverse(const Word& w) const {
    if (w.rank() != rank_) throw InputError("apply_inverse: rank mismatch");
    return apply_map(w, inverse_images_);
}

Automorphism Automorphism::inverse() const {
    return Automorphism(Trusted{}, inverse_images_, images_);
}

bool Automorphism::is_identity() const {
    for (int i = 1; i <= rank_; ++i) {
        const Word& im = images_[static_cast<std::size_t>(i) - 1];
        if (im.length() != 1 || im.letters()[0].code() != i) return false;
    }
    return true;
}

std::string Automorphism::key() const {
    std::string out;
    append_i32(out, rank_);
    for (const Word& w : images_) {
        append_i32(out, static_cast<std::int32_t>(w.length()));
        for (Letter l : w.letters()) append_i32(out, l.code());
    }
    return out;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    if (f.rank() != g.rank()) throw InputError("compose: rank mismatch");
    std::vector<Word> images;
    std::vector<Word> inverse_images;
    images.reserve(static_cast<std::size_t>(f.rank()));
    inverse_images.reserve(static_cast<std::size_t>(f.rank()));
    for (const Word& w : g.images()) images.push_back(apply_map(w, f.images()));
    for (const Word& w : f.inverse_images())
        inverse_images.push_back(apply_map(w, g.inverse_images()));
    return Automorphism(Automorphism::Trusted{}, std::move(images),
                        std::move(inverse_images));
}

// ---------------------------------------------------------------------------

Automorphism make_named(const NamedGenerator& g, int rank) {
    switch (g.kind) {
        case GeneratorKind::Inversion: return inversion(g.i, rank);
        case GeneratorKind::Transposition: return transposition(g.i, g.j, rank);
        case GeneratorKind::Rotation: return rotation(g.i, rank);
        case GeneratorKind::Nielsen: return nielsen(g.i, g.j, rank);
    }
    throw InputError("make_named: unknown generator kind");
}

Automorphism inversion(int i, int rank) {
    if (i < 1 || i > rank) throw InputError("inversion: index out of range");
    auto images = basis_images(rank);
    images[static_cast<std::size_t>(i) - 1] = Word::generator(rank, i, -1);
    auto inv = images;
    return Automorphism(std::move(images), std::move(inv));
}

Automorphism transposition(int i, int j, int rank) {
    if (i < 1 || i > rank || j < 1 || j > rank)
        throw InputError("transposition: index out of range");
    if (i == j) throw InputError("transposition: indices must differ");
    auto images = basis_images(rank);
    images[static_cast<std::size_t>(i) - 1] = Word::generator(rank, j);
    images[static_cast<std::size_t>(j) - 1] = Word::generator(rank, i);
    auto inv = images;
    return Automorphism(std::move(images), std::move(inv));
}

Automorphism rotation(int i, int rank) {
    if (i < 1) throw InputError("rotation: index must be >= 1");
    if (2 * i > rank)
        throw InputError("rotation: R_" + std::to_string(i) + " needs rank >= " +
                         std::to_string(2 * i));
    int lo = 2 * i - 1, hi = 2 * i;
    auto images = basis_images(rank);
    images[static_cast<std::size_t>(lo) - 1] = Word::generator(rank, hi, -1);
    images[static_cast<std::size_t>(hi) - 1] =
        reduce_concat(Word::generator(rank, hi, -1), Word::generator(rank, lo));
    // R_i has order three, so the inverse is the square.
    std::vector<Word> inv;
    inv.reserve(static_cast<std::size_t>(rank));
    for (int k = 1; k <= rank; ++k)
        inv.push_back(apply_map(apply_map(Word::generator(rank, k), images), images));
    return Automorphism(std::move(images), std::move(inv));
}

Automorphism nielsen(int i, int j, int rank) {
    if (i < 1 || i > rank || j < 1 || j > rank)
        throw InputError("nielsen: index out of range");
    if (i == j) throw InputError("nielsen: indices must differ");
    auto images = basis_images(rank);
    images[static_cast<std::size_t>(i) - 1] =
        reduce_concat(Word::generator(rank, i), Word::generator(rank, j));
    auto inv = basis_images(rank);
    inv[static_cast<std::size_t>(i) - 1] =
        reduce_concat(Word::generator(rank, i), Word::generator(rank, j, -1));
    return Automorphism(std::move(images), std::move(inv));
}

Automorphism delta(int rank) {
    if (rank < 1) throw InputError("delta: rank must be >= 1");
    std::vector<Word> images;
    images.reserve(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i, -1));
    auto inv = images;
    return Automorphism(std::move(images), std::move(inv));
}

// ---------------------------------------------------------------------------

std::optional<int> order(const Automorphism& f, int cap) {
    if (cap < 1) throw InputError("order: cap must be >= 1");
    Automorphism g = f;
    for (int k = 1; k <= cap; ++k) {
        if (g.is_identity()) return k;
        if (k == cap) break;
        g = compose(f, g);
    }
    return std::nullopt;
}

bool GroupTable::contains(const Automorphism& f) const {
    return index_.find(f.key()) != index_.end();
}

std::optional<std::size_t> GroupTable::index_of(const Automorphism& f) const {
    auto it = index_.find(f.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

GroupTable closure(std::span<const Automorphism> gens, std::size_t cap) {
    if (gens.empty()) throw InputError("closure: need at least one generator");
    int rank = gens[0].rank();
    for (const Automorphism& g : gens)
        if (g.rank() != rank) throw InputError("closure: rank mismatch among generators");

    GroupTable table;
    table.rank_ = rank;
    table.generators_.assign(gens.begin(), gens.end());

    auto push = [&](const Automorphism& f) -> bool {
        std::string k = f.key();
        if (table.index_.contains(k)) return false;
        if (table.elements_.size() >= cap)
            throw CapExceeded("closure: more than " + std::to_string(cap) + " elements");
        table.index_.emplace(std::move(k), table.elements_.size());
        table.elements_.push_back(f);
        return true;
    };

    push(Automorphism::identity(rank));
    for (std::size_t next = 0; next < table.elements_.size(); ++next) {
        // Copy: push may reallocate elements_.
        const Automorphism current = table.elements_[next];
        for (const Automorphism& g : table.generators_) push(compose(current, g));
    }
    return table;
}

}  // namespace autfn
