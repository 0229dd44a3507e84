#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "autfn/errors.hpp"
#include "autfn/word.hpp"

using namespace autfn;

namespace {

Word W(int rank, const std::string& text) { return parse_word(text, rank); }

// Raw (unreduced) letter sequences for the confluence oracle.
std::vector<Letter> random_raw(std::mt19937& rng, int rank, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> idx_dist(1, rank);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::vector<Letter> out;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i)
        out.emplace_back(idx_dist(rng), sign_dist(rng) ? 1 : -1);
    return out;
}

// Oracle: cancel adjacent inverse pairs in a randomized order until none
// remain. Any order must give the same normal form as the stack reducer.
std::vector<Letter> cancel_random_order(std::vector<Letter> letters, std::mt19937& rng) {
    while (true) {
        std::vector<std::size_t> cancellable;
        for (std::size_t i = 0; i + 1 < letters.size(); ++i)
            if (letters[i].code() == -letters[i + 1].code()) cancellable.push_back(i);
        if (cancellable.empty()) return letters;
        std::uniform_int_distribution<std::size_t> pick(0, cancellable.size() - 1);
        std::size_t at = cancellable[pick(rng)];
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(at),
                      letters.begin() + static_cast<std::ptrdiff_t>(at) + 2);
    }
}

Word random_word(std::mt19937& rng, int rank, int max_len) {
    return Word(rank, random_raw(rng, rank, max_len));
}

}  // namespace

TEST_CASE("reduce_concat cancels and keeps the identity") {
    CHECK(reduce_concat(W(2, "a1"), W(2, "A1")) == W(2, ""));
    CHECK(reduce_concat(W(3, "a1a2"), W(3, "A2a3")) == W(3, "a1a3"));
    CHECK(reduce_concat(W(3, ""), W(3, "a1A2")) == W(3, "a1A2"));
    CHECK(reduce_concat(W(3, "a1A2"), W(3, "")) == W(3, "a1A2"));
}

TEST_CASE("reduce_concat rejects mixed ranks") {
    CHECK_THROWS_AS(reduce_concat(W(2, "a1"), W(3, "a1")), InputError);
}

TEST_CASE("invert examples") {
    CHECK(invert(W(2, "a1a2")) == W(2, "A2A1"));
    CHECK(invert(W(2, "")) == W(2, ""));
    CHECK(invert(W(1, "A1")) == W(1, "a1"));
}

TEST_CASE("apply_map substitutes homomorphically") {
    // Rotation images in rank 2: a1 -> a2^-1, a2 -> a2^-1 a1.
    std::vector<Word> rot = {W(2, "A2"), W(2, "A2a1")};
    CHECK(apply_map(W(2, "a1"), rot) == W(2, "A2"));
    CHECK(apply_map(W(2, "a1a2"), rot) == W(2, "A2A2a1"));

    std::vector<Word> inv1 = {W(2, "A1"), W(2, "a2")};
    CHECK(apply_map(W(2, "a1a1"), inv1) == W(2, "A1A1"));

    std::vector<Word> identity = {W(2, "a1"), W(2, "a2")};
    CHECK(apply_map(W(2, "a1A2a1"), identity) == W(2, "a1A2a1"));
}

TEST_CASE("apply_map validates the image count") {
    CHECK_THROWS_AS(apply_map(W(2, "a1"), std::vector<Word>{W(2, "a1")}), InputError);
    CHECK_THROWS_AS(apply_map(W(2, "a1"), std::vector<Word>{W(2, "a1"), W(3, "a1")}),
                    InputError);
}

TEST_CASE("words are stored reduced and constructors validate") {
    CHECK(Word(2, {Letter(1, 1), Letter(1, -1)}).empty());
    CHECK_THROWS_AS(Word(2, {Letter(3, 1)}), InputError);
    CHECK_THROWS_AS(Letter(0, 1), InputError);
    CHECK_THROWS_AS(Letter(1, 2), InputError);
}

TEST_CASE("parse/print round-trips exactly") {
    CHECK(to_string(W(3, "a1A2a1")) == "a1A2a1");
    CHECK(to_string(W(3, "")) == "");
    CHECK(to_string(W(12, "a10A11")) == "a10A11");
    CHECK_THROWS_AS(parse_word("a4", 3), ParseError);
    CHECK_THROWS_AS(parse_word("b1", 3), ParseError);
    CHECK_THROWS_AS(parse_word("a", 3), ParseError);

    std::mt19937 rng(2024);
    for (int i = 0; i < 500; ++i) {
        Word w = random_word(rng, 6, 32);
        CHECK(parse_word(to_string(w), 6) == w);
    }
}

TEST_CASE("parse errors carry byte offsets") {
    try {
        parse_word("a1x2", 3);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.byte_offset() == 2);
    }
}

TEST_CASE("concatenation is associative with the empty word as identity") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        Word u = random_word(rng, 5, 24);
        Word v = random_word(rng, 5, 24);
        Word w = random_word(rng, 5, 24);
        CHECK(reduce_concat(reduce_concat(u, v), w) ==
              reduce_concat(u, reduce_concat(v, w)));
        CHECK(reduce_concat(Word(5), u) == u);
        CHECK(reduce_concat(u, Word(5)) == u);
    }
}

TEST_CASE("inversion is involutive and produces inverses") {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        Word w = random_word(rng, 5, 24);
        CHECK(invert(invert(w)) == w);
        CHECK(reduce_concat(w, invert(w)).empty());
        CHECK(reduce_concat(invert(w), w).empty());
    }
}

TEST_CASE("apply_map distributes over products") {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        Word u = random_word(rng, 4, 16);
        Word v = random_word(rng, 4, 16);
        std::vector<Word> images;
        for (int k = 0; k < 4; ++k) images.push_back(random_word(rng, 4, 6));
        CHECK(apply_map(reduce_concat(u, v), images) ==
              reduce_concat(apply_map(u, images), apply_map(v, images)));
    }
}

TEST_CASE("reduction is confluent: randomized cancellation orders agree") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 1000; ++i) {
        std::vector<Letter> raw = random_raw(rng, 6, 64);
        Word reduced(6, raw);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Letter> other = cancel_random_order(raw, rng);
            CHECK(other == reduced.letters());
        }
    }
}

TEST_CASE("word length guard aborts runaway substitution") {
    std::vector<Letter> many(600'000, Letter(1, 1));
    Word w(1, many);
    std::vector<Word> doubling = {W(1, "a1a1")};
    CHECK_THROWS_AS(apply_map(w, doubling), WordLengthExceeded);
}
