#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "autfn/errors.hpp"
#include "autfn/perm.hpp"
#include "autfn/shapes.hpp"

using namespace autfn;

TEST_CASE("permutation basics") {
    Perm id = perm_identity(4);
    CHECK(perm_is_identity(id));
    CHECK(perm_order(id) == 1);

    Perm cycle = {1, 2, 3, 0};
    CHECK(perm_order(cycle) == 4);
    CHECK(perm_compose(cycle, perm_inverse(cycle)) == id);
    // compose applies the right factor first
    Perm swap01 = {1, 0, 2, 3};
    Perm swap12 = {0, 2, 1, 3};
    CHECK(perm_compose(swap01, swap12) == Perm{1, 2, 0, 3});

    CHECK(perm_valid({2, 0, 1}, 3));
    CHECK_FALSE(perm_valid({0, 0, 1}, 3));
    CHECK_FALSE(perm_valid({0, 1}, 3));
    CHECK_FALSE(perm_valid({0, 1, 3}, 3));
}

TEST_CASE("closure enumerates small groups with the identity first") {
    PermGroup klein = PermGroup::closure(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    CHECK(klein.order() == 4);
    CHECK(perm_is_identity(klein.elements()[0]));
    CHECK(klein.contains({3, 2, 1, 0}));
    CHECK(klein.p_group_exponent(2) == 2);
    CHECK(klein.elementary_abelian_rank(2) == 2);

    PermGroup s3 = PermGroup::closure(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.p_group_exponent(2).has_value());
    CHECK_FALSE(s3.elementary_abelian_rank(2).has_value());
    CHECK_FALSE(s3.elementary_abelian_rank(3).has_value());

    PermGroup z4 = PermGroup::closure(4, {{1, 2, 3, 0}});
    CHECK(z4.order() == 4);
    CHECK(z4.p_group_exponent(2) == 2);
    CHECK_FALSE(z4.elementary_abelian_rank(2).has_value());  // not elementary

    CHECK_THROWS_AS(PermGroup::closure(4, {{1, 2, 3, 0}}, 3), CapExceeded);
}

TEST_CASE("index-p subgroup enumeration") {
    // Z/5: the only index-5 subgroup is trivial.
    PermGroup z5 = PermGroup::closure(5, {{1, 2, 3, 4, 0}});
    auto z5_subs = z5.index_p_subgroups(5);
    REQUIRE(z5_subs.size() == 1);
    CHECK(z5_subs[0] == std::vector<std::size_t>{0});

    // (Z/2)^2 acting on the octahedron: three subgroups of order two.
    PermGroup klein = PermGroup::closure(
        6, {octahedron_reflection(0), octahedron_reflection(1)});
    auto klein_subs = klein.index_p_subgroups(2);
    REQUIRE(klein_subs.size() == 3);
    std::set<std::vector<std::size_t>> distinct(klein_subs.begin(), klein_subs.end());
    CHECK(distinct.size() == 3);
    for (const auto& sub : klein_subs) {
        CHECK(sub.size() == 2);
        CHECK(sub[0] == 0);  // identity is element zero
    }

    // (Z/2)^3: seven hyperplanes of order four.
    PermGroup signs = PermGroup::closure(
        6, {octahedron_reflection(0), octahedron_reflection(1),
            octahedron_reflection(2)});
    auto sign_subs = signs.index_p_subgroups(2);
    REQUIRE(sign_subs.size() == 7);
    std::set<std::vector<std::size_t>> sign_distinct(sign_subs.begin(), sign_subs.end());
    CHECK(sign_distinct.size() == 7);
    for (const auto& sub : sign_subs) CHECK(sub.size() == 4);

    // (Z/3)^2 on the grid torus: four subgroups of order three.
    PermGroup torus = PermGroup::closure(
        9, {torus_shift(3, 3, 1, 0), torus_shift(3, 3, 0, 1)});
    REQUIRE(torus.order() == 9);
    auto torus_subs = torus.index_p_subgroups(3);
    REQUIRE(torus_subs.size() == 4);
    for (const auto& sub : torus_subs) CHECK(sub.size() == 3);

    CHECK_THROWS_AS(PermGroup::closure(3, {{1, 0, 2}, {1, 2, 0}}).index_p_subgroups(2),
                    InputError);
}

TEST_CASE("subgroup enumeration is deterministic") {
    auto run = [] {
        PermGroup signs = PermGroup::closure(
            6, {octahedron_reflection(0), octahedron_reflection(1),
                octahedron_reflection(2)});
        return signs.index_p_subgroups(2);
    };
    CHECK(run() == run());
}
