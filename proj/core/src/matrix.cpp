#include "autfn/matrix.hpp"

#include <cctype>

#include "autfn/errors.hpp"

namespace autfn {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
    return r;
}

void check_size(int n, const char* who) {
    if (n < 1) throw InputError(std::string(who) + ": size must be >= 1");
}

}  // namespace

IntegerMatrix::IntegerMatrix(int n) : n_(n) {
    check_size(n, "IntegerMatrix");
    e_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

std::size_t IntegerMatrix::idx(int r, int c) const {
    if (r < 0 || r >= n_ || c < 0 || c >= n_)
        throw InputError("IntegerMatrix: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(c);
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::elementary(int n, int i, int j, std::int64_t c) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw InputError("elementary: index out of range");
    if (i == j) throw InputError("elementary: indices must differ");
    IntegerMatrix m = identity(n);
    m(i - 1, j - 1) = c;
    return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.size() != b.size()) throw InputError("matrix product: size mismatch");
    int n = a.size();
    IntegerMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < n; ++k) s = checked_add(s, checked_mul(a(i, k), b(k, j)));
            out(i, j) = s;
        }
    return out;
}

std::int64_t det(const IntegerMatrix& m) {
    int n = m.size();
    std::vector<std::int64_t> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);

    auto at = [&](int i, int j) -> std::int64_t& {
        return a[static_cast<std::size_t>(i) * n + j];
    };

    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                std::int64_t num = checked_sub(checked_mul(at(i, j), at(k, k)),
                                               checked_mul(at(i, k), at(k, j)));
                // Bareiss: the division is exact.
                at(i, j) = num / prev;
            }
        prev = at(k, k);
    }
    return checked_mul(sign, at(n - 1, n - 1));
}

IntegerMatrix abelianize(const Automorphism& f) {
    int n = f.rank();
    check_size(n, "abelianize");
    IntegerMatrix m(n);
    for (int col = 1; col <= n; ++col) {
        for (Letter l : f.image_of(col).letters()) {
            auto& entry = m(l.index() - 1, col - 1);
            entry = checked_add(entry, l.sign());
        }
    }
    return m;
}

bool is_special(const Automorphism& f) { return det(abelianize(f)) == 1; }

IntegerMatrix parse_matrix(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw ParseError(std::string("matrix: expected '") + c + "' at byte " +
                                 std::to_string(i),
                             i);
        ++i;
    };
    auto parse_int = [&]() -> std::int64_t {
        skip_ws();
        std::size_t start = i;
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("matrix: expected integer at byte " + std::to_string(start),
                             start);
        std::int64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = checked_add(checked_mul(v, 10), text[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    };

    expect('[');
    std::vector<std::vector<std::int64_t>> rows;
    while (true) {
        std::vector<std::int64_t> row;
        row.push_back(parse_int());
        skip_ws();
        while (i < text.size() && text[i] == ',') {
            ++i;
            row.push_back(parse_int());
            skip_ws();
        }
        rows.push_back(std::move(row));
        skip_ws();
        if (i < text.size() && text[i] == ';') {
            ++i;
            continue;
        }
        break;
    }
    expect(']');
    skip_ws();
    if (i != text.size())
        throw ParseError("matrix: trailing input at byte " + std::to_string(i), i);

    std::size_t n = rows.size();
    for (const auto& row : rows)
        if (row.size() != n)
            throw ParseError("matrix: must be square (row of length " +
                                 std::to_string(row.size()) + " in a " +
                                 std::to_string(n) + "-row matrix)",
                             0);
    IntegerMatrix m(static_cast<int>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    return m;
}

std::string to_string(const IntegerMatrix& m) {
    std::string out = "[";
    for (int r = 0; r < m.size(); ++r) {
        if (r) out += ';';
        for (int c = 0; c < m.size(); ++c) {
            if (c) out += ',';
            out += std::to_string(m(r, c));
        }
    }
    out += ']';
    return out;
}

// ---------------------------------------------------------------------------

ModMatrix::ModMatrix(int n, std::uint32_t modulus) : n_(n), q_(modulus) {
    check_size(n, "ModMatrix");
    if (modulus < 2) throw InputError("ModMatrix: modulus must be >= 2");
    e_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

std::size_t ModMatrix::idx(int r, int c) const {
    if (r < 0 || r >= n_ || c < 0 || c >= n_)
        throw InputError("ModMatrix: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(c);
}

ModMatrix ModMatrix::identity(int n, std::uint32_t modulus) {
    ModMatrix m(n, modulus);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void ModMatrix::set(int r, int c, std::int64_t value) {
    std::int64_t q = static_cast<std::int64_t>(q_);
    std::int64_t v = value % q;
    if (v < 0) v += q;
    e_[idx(r, c)] = static_cast<std::uint32_t>(v);
}

bool ModMatrix::is_identity() const { return *this == identity(n_, q_); }

std::string ModMatrix::key() const {
    std::string out = std::to_string(n_) + "/" + std::to_string(q_) + ":";
    for (std::uint32_t v : e_) {
        out += std::to_string(v);
        out += ',';
    }
    return out;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
    if (a.size() != b.size() || a.modulus() != b.modulus())
        throw InputError("mod matrix product: shape/modulus mismatch");
    int n = a.size();
    ModMatrix out(n, a.modulus());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::uint64_t s = 0;
            for (int k = 0; k < n; ++k)
                s += static_cast<std::uint64_t>(a(i, k)) * b(k, j) % a.modulus();
            out.set(i, j, static_cast<std::int64_t>(s % a.modulus()));
        }
    return out;
}

ModMatrix mod_reduce(const IntegerMatrix& m, std::uint32_t q) {
    if (q < 2) throw InputError("mod_reduce: modulus must be >= 2");
    ModMatrix out(m.size(), q);
    for (int r = 0; r < m.size(); ++r)
        for (int c = 0; c < m.size(); ++c) out.set(r, c, m(r, c));
    return out;
}

std::string to_string(const ModMatrix& m) {
    std::string out = "[";
    for (int r = 0; r < m.size(); ++r) {
        if (r) out += ';';
        for (int c = 0; c < m.size(); ++c) {
            if (c) out += ',';
            out += std::to_string(m(r, c));
        }
    }
    out += "] mod ";
    out += std::to_string(m.modulus());
    return out;
}

bool ModGroupTable::contains(const ModMatrix& m) const {
    return index.find(m.key()) != index.end();
}

ModGroupTable closure_mod(std::span<const ModMatrix> gens, std::size_t cap) {
    if (gens.empty()) throw InputError("closure_mod: need at least one generator");
    int n = gens[0].size();
    std::uint32_t q = gens[0].modulus();
    for (const ModMatrix& g : gens)
        if (g.size() != n || g.modulus() != q)
            throw InputError("closure_mod: shape/modulus mismatch among generators");

    ModGroupTable table;
    table.modulus = q;
    table.generators.assign(gens.begin(), gens.end());

    table.generators_commute = true;
    table.generators_involutions = true;
    for (std::size_t i = 0; i < table.generators.size(); ++i) {
        const ModMatrix& a = table.generators[i];
        if (!(a * a).is_identity() || a.is_identity())
            table.generators_involutions = false;
        for (std::size_t j = i + 1; j < table.generators.size(); ++j)
            if (a * table.generators[j] != table.generators[j] * a)
                table.generators_commute = false;
    }

    auto push = [&](const ModMatrix& m) {
        std::string k = m.key();
        if (table.index.contains(k)) return;
        if (table.elements.size() >= cap)
            throw CapExceeded("closure_mod: more than " + std::to_string(cap) +
                              " elements");
        table.index.emplace(std::move(k), table.elements.size());
        table.elements.push_back(m);
    };

    push(ModMatrix::identity(n, q));
    for (std::size_t next = 0; next < table.elements.size(); ++next) {
        const ModMatrix current = table.elements[next];
        for (const ModMatrix& g : table.generators) push(current * g);
    }
    return table;
}

bool is_elementary_abelian(const ModGroupTable& table, std::uint32_t p) {
    const auto& els = table.elements;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (!els[i].is_identity()) {
            ModMatrix power = els[i];
            for (std::uint32_t k = 1; k < p; ++k) power = power * els[i];
            if (!power.is_identity()) return false;  // order divides p, hence equals p
        }
        for (std::size_t j = i + 1; j < els.size(); ++j)
            if (els[i] * els[j] != els[j] * els[i]) return false;
    }
    return true;
}

bool restriction_injective(std::span<const Automorphism> gens, std::uint32_t q,
                           std::size_t cap) {
    GroupTable table = closure(gens, cap);
    std::unordered_map<std::string, bool> seen;
    for (const Automorphism& f : table.elements()) {
        std::string k = mod_reduce(abelianize(f), q).key();
        if (!seen.emplace(std::move(k), true).second) return false;
    }
    return true;
}

}  // namespace autfn
