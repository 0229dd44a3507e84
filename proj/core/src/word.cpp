#include "autfn/word.hpp"

#include <cctype>

#include "autfn/errors.hpp"

namespace autfn {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back().code() == -l.code()) {
        out.pop_back();
    } else {
        out.push_back(l);
        if (out.size() > kWordLengthGuard)
            throw WordLengthExceeded("word length guard exceeded (" +
                                     std::to_string(kWordLengthGuard) + " letters)");
    }
}

void check_rank(const Word& w, int rank, const char* who) {
    if (w.rank() != rank)
        throw InputError(std::string(who) + ": rank mismatch (" +
                         std::to_string(w.rank()) + " vs " + std::to_string(rank) + ")");
}

}  // namespace

Letter::Letter(int index, int sign) {
    if (index < 1) throw InputError("letter index must be >= 1");
    if (sign != 1 && sign != -1) throw InputError("letter sign must be +1 or -1");
    code_ = sign > 0 ? index : -index;
}

Letter Letter::from_code(std::int32_t code) {
    if (code == 0) throw InputError("letter code must be nonzero");
    return Letter(code);
}

Word::Word(int rank) : rank_(rank) {
    if (rank < 0) throw InputError("word rank must be >= 0");
}

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank) {
    if (rank < 0) throw InputError("word rank must be >= 0");
    letters_.reserve(letters.size());
    for (Letter l : letters) {
        if (l.index() > rank)
            throw InputError("letter index " + std::to_string(l.index()) +
                             " exceeds rank " + std::to_string(rank));
        push_reduced(letters_, l);
    }
}

Word Word::generator(int rank, int index, int sign) {
    return Word(rank, {Letter(index, sign)});
}

Word reduce_concat(const Word& w1, const Word& w2) {
    check_rank(w2, w1.rank(), "reduce_concat");
    std::vector<Letter> out = w1.letters();
    out.reserve(out.size() + w2.length());
    for (Letter l : w2.letters()) push_reduced(out, l);
    return Word(w1.rank(), std::move(out));
}

Word invert(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.push_back(it->inverse());
    return Word(w.rank(), std::move(out));
}

Word apply_map(const Word& w, std::span<const Word> images) {
    if (static_cast<int>(images.size()) != w.rank())
        throw InputError("apply_map: expected " + std::to_string(w.rank()) +
                         " images, got " + std::to_string(images.size()));
    int out_rank = images.empty() ? 0 : images[0].rank();
    for (const Word& im : images) check_rank(im, out_rank, "apply_map");

    std::vector<Letter> out;
    for (Letter l : w.letters()) {
        const Word& im = images[static_cast<std::size_t>(l.index()) - 1];
        if (l.sign() > 0) {
            for (Letter m : im.letters()) push_reduced(out, m);
        } else {
            for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it)
                push_reduced(out, it->inverse());
        }
    }
    return Word(out_rank, std::move(out));
}

Word parse_word(std::string_view text, int rank) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int sign;
        if (c == 'a') {
            sign = +1;
        } else if (c == 'A') {
            sign = -1;
        } else {
            throw ParseError("word: expected 'a' or 'A' at byte " + std::to_string(i), i);
        }
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("word: expected generator index at byte " + std::to_string(i), i);
        long index = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            index = index * 10 + (text[i] - '0');
            if (index > rank)
                throw ParseError("word: generator index exceeds rank " + std::to_string(rank), i);
            ++i;
        }
        if (index < 1)
            throw ParseError("word: generator index must be >= 1", i);
        letters.emplace_back(static_cast<int>(index), sign);
    }
    return Word(rank, std::move(letters));
}

std::string to_string(const Word& w) {
    std::string out;
    for (Letter l : w.letters()) {
        out += l.sign() > 0 ? 'a' : 'A';
        out += std::to_string(l.index());
    }
    return out;
}

}  // namespace autfn
