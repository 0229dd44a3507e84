#pragma once

// Structural audit of the named finite subgroups of Aut(F_n): the inversion
// subgroup N, the signed-permutation subgroup W_n, their special parts SN
// and SW_n, the rotation subgroup T, and the central element delta.
// Everything is verified by explicit enumeration; expected sizes come from
// the closed forms |N| = 2^n, |W_n| = 2^n n!, |T| = 3^floor(n/2).

#include <optional>
#include <string>
#include <vector>

#include "autfn/automorphism.hpp"

namespace autfn {

struct AuditCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct AuditReport {
    int rank = 0;
    std::vector<AuditCheck> checks;

    bool all_pass() const;
};

// Generator families.
std::vector<Automorphism> inversion_generators(int n);          // e_1..e_n
std::vector<Automorphism> signed_permutation_generators(int n); // e's + adjacent (i,i+1)
std::vector<Automorphism> rotation_generators(int n);           // R_1..R_floor(n/2)

// Enumerated subgroups. cap = 0 means "sized from the expected order".
GroupTable subgroup_N(int n, std::size_t cap = 0);
GroupTable subgroup_W(int n, std::size_t cap = 0);
GroupTable subgroup_T(int n, std::size_t cap = 0);

// Elements of the table lying in the special (determinant +1) part.
std::vector<Automorphism> special_part(const GroupTable& table);

// Full audit for 3 <= n <= 6. cap_override, when set, replaces the internal
// per-subgroup enumeration caps.
AuditReport audit_torsion(int n, std::optional<std::size_t> cap_override = std::nullopt);

}  // namespace autfn
