#pragma once

// Reduced words in the free group F_n on a basis a_1, ..., a_n.
//
// Words are stored fully reduced at all times (no adjacent pair a_i a_i^-1),
// so equality is plain sequence equality. The rank n travels on the word
// itself; mixing ranks is a checked error, not undefined behaviour.
//
// Text syntax: `a3` is a_3, `A3` is a_3^-1, juxtaposition is the product,
// e.g. `a1A2a1`. The empty word prints as the empty string.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autfn {

// A single signed generator occurrence. index() is 1-based.
class Letter {
public:
    Letter(int index, int sign);

    int index() const { return code_ < 0 ? -code_ : code_; }
    int sign() const { return code_ < 0 ? -1 : +1; }

    // Signed code: +i for a_i, -i for a_i^-1.
    std::int32_t code() const { return code_; }
    static Letter from_code(std::int32_t code);

    Letter inverse() const { return from_code(-code_); }

    bool operator==(const Letter&) const = default;

private:
    explicit Letter(std::int32_t code) : code_(code) {}
    std::int32_t code_;
};

class Word {
public:
    Word() = default;  // empty word of rank 0
    explicit Word(int rank);
    Word(int rank, std::vector<Letter> letters);  // reduces eagerly

    // The word a_index^sign of the given rank.
    static Word generator(int rank, int index, int sign = +1);

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    bool operator==(const Word&) const = default;

private:
    int rank_ = 0;
    std::vector<Letter> letters_;
};

// Any intermediate word longer than this aborts with WordLengthExceeded.
inline constexpr std::size_t kWordLengthGuard = 1'000'000;

// Reduced product w1 * w2. Ranks must agree.
Word reduce_concat(const Word& w1, const Word& w2);

inline Word operator*(const Word& w1, const Word& w2) { return reduce_concat(w1, w2); }

Word invert(const Word& w);

// Homomorphic substitution: letter a_i (resp. a_i^-1) is replaced by
// images[i-1] (resp. its inverse), fully reduced. images.size() must equal
// w.rank(); all images must share one rank, which becomes the result rank.
Word apply_map(const Word& w, std::span<const Word> images);

Word parse_word(std::string_view text, int rank);
std::string to_string(const Word& w);

}  // namespace autfn
