#include "autfn/manifold.hpp"

#include <cctype>

#include "autfn/errors.hpp"

namespace autfn {

namespace {

ManifoldExprPtr node(ManifoldExpr e) {
    return std::make_shared<const ManifoldExpr>(std::move(e));
}

}  // namespace

ManifoldExprPtr ManifoldExpr::sphere(long long r) {
    if (r < 0) throw InputError("S(r): dimension must be >= 0");
    return node({.kind = Kind::Sphere, .arg = r});
}

ManifoldExprPtr ManifoldExpr::surface(long long genus) {
    if (genus < 0) throw InputError("Sigma(g): genus must be >= 0");
    return node({.kind = Kind::Surface, .arg = genus});
}

ManifoldExprPtr ManifoldExpr::cross_surface(long long crosscaps) {
    if (crosscaps < 1) throw InputError("N(g): cross-cap count must be >= 1");
    return node({.kind = Kind::CrossSurface, .arg = crosscaps});
}

ManifoldExprPtr ManifoldExpr::torus(long long r) {
    if (r < 1) throw InputError("T(r): dimension must be >= 1");
    return node({.kind = Kind::Torus, .arg = r});
}

ManifoldExprPtr ManifoldExpr::raw_descriptor(const ChiDescriptor& d) {
    if (d.dim < 0) throw InputError("chi(...): dimension must be >= 0");
    return node({.kind = Kind::Raw, .raw = d});
}

ManifoldExprPtr ManifoldExpr::product(ManifoldExprPtr a, ManifoldExprPtr b) {
    return node({.kind = Kind::Product, .lhs = std::move(a), .rhs = std::move(b)});
}

ManifoldExprPtr ManifoldExpr::connected_sum(ManifoldExprPtr a, ManifoldExprPtr b) {
    return node({.kind = Kind::ConnectedSum, .lhs = std::move(a), .rhs = std::move(b)});
}

ManifoldExprPtr ManifoldExpr::disjoint(ManifoldExprPtr a, ManifoldExprPtr b) {
    return node({.kind = Kind::Disjoint, .lhs = std::move(a), .rhs = std::move(b)});
}

ManifoldExprPtr ManifoldExpr::double_cover(ManifoldExprPtr a) {
    return node({.kind = Kind::DoubleCover, .lhs = std::move(a)});
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar in the header.

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ManifoldExprPtr parse() {
        ManifoldExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("manifold: trailing input at byte " + std::to_string(pos_),
                             pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_char(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept_char(char c) {
        if (!peek_char(c)) return false;
        ++pos_;
        return true;
    }

    void expect_char(char c) {
        if (!accept_char(c))
            throw ParseError(std::string("manifold: expected '") + c + "' at byte " +
                                 std::to_string(pos_),
                             pos_);
    }

    std::string read_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError("manifold: expected a name at byte " + std::to_string(start),
                             start);
        return std::string(text_.substr(start, pos_ - start));
    }

    long long read_int() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("manifold: expected an integer at byte " +
                                 std::to_string(start),
                             start);
        long long v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000)
                throw ParseError("manifold: integer too large at byte " +
                                     std::to_string(start),
                                 start);
            ++pos_;
        }
        return neg ? -v : v;
    }

    ManifoldExprPtr parse_expr() {
        ManifoldExprPtr e = parse_term();
        while (accept_char('+')) e = ManifoldExpr::disjoint(e, parse_term());
        return e;
    }

    ManifoldExprPtr parse_term() {
        ManifoldExprPtr e = parse_csum();
        while (accept_char('*')) e = ManifoldExpr::product(e, parse_csum());
        return e;
    }

    ManifoldExprPtr parse_csum() {
        ManifoldExprPtr e = parse_unary();
        while (accept_char('#')) e = ManifoldExpr::connected_sum(e, parse_unary());
        return e;
    }

    ManifoldExprPtr parse_unary() {
        skip_ws();
        if (accept_char('(')) {
            ManifoldExprPtr e = parse_expr();
            expect_char(')');
            return e;
        }
        std::size_t name_at = pos_;
        std::string name = read_name();
        auto wrap = [&](auto make) {
            expect_char('(');
            long long v = read_int();
            expect_char(')');
            try {
                return make(v);
            } catch (const InputError& err) {
                throw ParseError(std::string("manifold: ") + err.what() + " at byte " +
                                     std::to_string(name_at),
                                 name_at);
            }
        };
        if (name == "S") return wrap(ManifoldExpr::sphere);
        if (name == "Sigma") return wrap(ManifoldExpr::surface);
        if (name == "N") return wrap(ManifoldExpr::cross_surface);
        if (name == "T") return wrap(ManifoldExpr::torus);
        if (name == "dc") {
            expect_char('(');
            ManifoldExprPtr e = parse_expr();
            expect_char(')');
            return ManifoldExpr::double_cover(e);
        }
        if (name == "chi") {
            expect_char('(');
            long long r = read_int();
            expect_char(',');
            long long c = read_int();
            expect_char(',');
            std::size_t flag_at = pos_;
            std::string flag = read_name();
            if (flag != "o" && flag != "n")
                throw ParseError("manifold: orientability flag must be 'o' or 'n' at byte " +
                                     std::to_string(flag_at),
                                 flag_at);
            expect_char(')');
            if (r < 0)
                throw ParseError("manifold: chi(...) dimension must be >= 0 at byte " +
                                     std::to_string(name_at),
                                 name_at);
            return ManifoldExpr::raw_descriptor(
                {.dim = static_cast<int>(r), .chi = c, .orientable = flag == "o",
                 .connected = true});
        }
        throw ParseError("manifold: unknown atom '" + name + "' at byte " +
                             std::to_string(name_at),
                         name_at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

int precedence(ManifoldExpr::Kind k) {
    switch (k) {
        case ManifoldExpr::Kind::Disjoint: return 0;
        case ManifoldExpr::Kind::Product: return 1;
        case ManifoldExpr::Kind::ConnectedSum: return 2;
        default: return 3;
    }
}

void print(const ManifoldExprPtr& e, int min_prec, std::string& out) {
    int prec = precedence(e->kind);
    bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (e->kind) {
        case ManifoldExpr::Kind::Sphere:
            out += "S(" + std::to_string(e->arg) + ")";
            break;
        case ManifoldExpr::Kind::Surface:
            out += "Sigma(" + std::to_string(e->arg) + ")";
            break;
        case ManifoldExpr::Kind::CrossSurface:
            out += "N(" + std::to_string(e->arg) + ")";
            break;
        case ManifoldExpr::Kind::Torus:
            out += "T(" + std::to_string(e->arg) + ")";
            break;
        case ManifoldExpr::Kind::Raw:
            out += "chi(" + std::to_string(e->raw.dim) + "," + std::to_string(e->raw.chi) +
                   "," + (e->raw.orientable ? "o" : "n") + ")";
            break;
        case ManifoldExpr::Kind::DoubleCover:
            out += "dc(";
            print(e->lhs, 0, out);
            out += ')';
            break;
        case ManifoldExpr::Kind::Disjoint:
        case ManifoldExpr::Kind::Product:
        case ManifoldExpr::Kind::ConnectedSum: {
            char op = e->kind == ManifoldExpr::Kind::Disjoint  ? '+'
                      : e->kind == ManifoldExpr::Kind::Product ? '*'
                                                               : '#';
            print(e->lhs, prec, out);
            out += op;
            print(e->rhs, prec + 1, out);
            break;
        }
    }
    if (parens) out += ')';
}

}  // namespace

ManifoldExprPtr parse_manifold(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const ManifoldExprPtr& e) {
    std::string out;
    print(e, 0, out);
    return out;
}

bool expr_equal(const ManifoldExprPtr& a, const ManifoldExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ManifoldExpr::Kind::Sphere:
        case ManifoldExpr::Kind::Surface:
        case ManifoldExpr::Kind::CrossSurface:
        case ManifoldExpr::Kind::Torus:
            return a->arg == b->arg;
        case ManifoldExpr::Kind::Raw:
            return a->raw == b->raw;
        case ManifoldExpr::Kind::DoubleCover:
            return expr_equal(a->lhs, b->lhs);
        default:
            return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

// ---------------------------------------------------------------------------

ChiDescriptor double_cover(const ChiDescriptor& d) {
    if (d.orientable)
        throw InputError("double_cover: input is already orientable");
    return {.dim = d.dim, .chi = 2 * d.chi, .orientable = true, .connected = true};
}

ChiDescriptor evaluate(const ManifoldExprPtr& e) {
    switch (e->kind) {
        case ManifoldExpr::Kind::Sphere: {
            int r = static_cast<int>(e->arg);
            // S(0) is a two-point space, hence disconnected.
            return {.dim = r, .chi = r % 2 == 0 ? 2 : 0, .orientable = true,
                    .connected = r >= 1};
        }
        case ManifoldExpr::Kind::Surface:
            return {.dim = 2, .chi = 2 - 2 * e->arg, .orientable = true, .connected = true};
        case ManifoldExpr::Kind::CrossSurface:
            return {.dim = 2, .chi = 2 - e->arg, .orientable = false, .connected = true};
        case ManifoldExpr::Kind::Torus:
            return {.dim = static_cast<int>(e->arg), .chi = 0, .orientable = true,
                    .connected = true};
        case ManifoldExpr::Kind::Raw:
            return e->raw;
        case ManifoldExpr::Kind::Product: {
            ChiDescriptor a = evaluate(e->lhs), b = evaluate(e->rhs);
            return {.dim = a.dim + b.dim, .chi = a.chi * b.chi,
                    .orientable = a.orientable && b.orientable,
                    .connected = a.connected && b.connected};
        }
        case ManifoldExpr::Kind::ConnectedSum: {
            ChiDescriptor a = evaluate(e->lhs), b = evaluate(e->rhs);
            if (a.dim != b.dim)
                throw InputError("connected sum: dimension mismatch (" +
                                 std::to_string(a.dim) + " vs " + std::to_string(b.dim) +
                                 ")");
            if (!a.connected || !b.connected)
                throw InputError("connected sum: operands must be connected");
            long long sphere_chi = a.dim % 2 == 0 ? 2 : 0;
            return {.dim = a.dim, .chi = a.chi + b.chi - sphere_chi,
                    .orientable = a.orientable && b.orientable, .connected = true};
        }
        case ManifoldExpr::Kind::Disjoint: {
            ChiDescriptor a = evaluate(e->lhs), b = evaluate(e->rhs);
            if (a.dim != b.dim)
                throw InputError("disjoint union: dimension mismatch (" +
                                 std::to_string(a.dim) + " vs " + std::to_string(b.dim) +
                                 ")");
            return {.dim = a.dim, .chi = a.chi + b.chi,
                    .orientable = a.orientable && b.orientable, .connected = false};
        }
        case ManifoldExpr::Kind::DoubleCover: {
            ChiDescriptor a = evaluate(e->lhs);
            if (!a.connected)
                throw InputError("double_cover: operand must be connected");
            return double_cover(a);
        }
    }
    throw InputError("evaluate: malformed expression");
}

}  // namespace autfn
