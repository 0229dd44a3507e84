#pragma once

// A small closed-manifold description language with an exact Euler
// characteristic evaluator.
//
// Atoms:
//   S(r)        r-sphere                     chi = 1 + (-1)^r
//   Sigma(g)    orientable surface, genus g  chi = 2 - 2g
//   N(g)        non-orientable surface,      chi = 2 - g     (g cross-caps, g >= 1)
//   T(r)        r-torus (r >= 1)             chi = 0
//   chi(r,c,f)  raw descriptor: dimension r, chi c, f = o (orientable) or n
//
// Operators, loosest to tightest:   +   *   #   dc(...)
//   A + B   disjoint union   (equal dimensions; result disconnected)
//   A * B   product          (dimensions add, chi multiplies)
//   A # B   connected sum    (equal dimensions, connected operands)
//   dc(A)   orientable double cover of a non-orientable A (chi doubles)
//
// Grammar:
//   expr  := term  | expr '+' term
//   term  := csum  | term '*' csum
//   csum  := unary | csum '#' unary
//   unary := atom  | 'dc' '(' expr ')' | '(' expr ')'
// Whitespace is insignificant. Note S(0) is the two-point sphere and is
// therefore marked disconnected.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace autfn {

struct ChiDescriptor {
    int dim = 0;
    long long chi = 0;
    bool orientable = true;
    bool connected = true;

    bool operator==(const ChiDescriptor&) const = default;
};

class ManifoldExpr;
using ManifoldExprPtr = std::shared_ptr<const ManifoldExpr>;

class ManifoldExpr {
public:
    enum class Kind {
        Sphere,        // arg = r
        Surface,       // arg = genus
        CrossSurface,  // arg = cross-caps
        Torus,         // arg = r
        Raw,           // raw descriptor in `raw`
        Product,
        ConnectedSum,
        Disjoint,
        DoubleCover,
    };

    Kind kind;
    long long arg = 0;
    ChiDescriptor raw;  // Raw only
    ManifoldExprPtr lhs;
    ManifoldExprPtr rhs;  // binary nodes only

    static ManifoldExprPtr sphere(long long r);
    static ManifoldExprPtr surface(long long genus);
    static ManifoldExprPtr cross_surface(long long crosscaps);
    static ManifoldExprPtr torus(long long r);
    static ManifoldExprPtr raw_descriptor(const ChiDescriptor& d);
    static ManifoldExprPtr product(ManifoldExprPtr a, ManifoldExprPtr b);
    static ManifoldExprPtr connected_sum(ManifoldExprPtr a, ManifoldExprPtr b);
    static ManifoldExprPtr disjoint(ManifoldExprPtr a, ManifoldExprPtr b);
    static ManifoldExprPtr double_cover(ManifoldExprPtr a);
};

ManifoldExprPtr parse_manifold(std::string_view text);
std::string to_string(const ManifoldExprPtr& e);

// Structural equality of trees.
bool expr_equal(const ManifoldExprPtr& a, const ManifoldExprPtr& b);

ChiDescriptor evaluate(const ManifoldExprPtr& e);

// Orientable double cover of a non-orientable descriptor.
ChiDescriptor double_cover(const ChiDescriptor& d);

}  // namespace autfn
