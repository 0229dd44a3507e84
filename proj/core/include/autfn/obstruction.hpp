#pragma once

// Divisibility obstructions: upper bounds on the p-rank of the
// homeomorphism group of a closed manifold descriptor, and the
// forced-triviality verdicts they imply for actions of the special
// automorphism group (equivalently SL_n(Z), whose actions lift).
//
// All arithmetic is exact; a zero Euler characteristic makes every
// divisibility constraint vacuous and is reported as Unbounded.

#include <cstdint>
#include <optional>
#include <vector>

#include "autfn/manifold.hpp"

namespace autfn {

enum class BoundMode {
    General,
    OrientationPreserving,  // p = 2 on an orientable descriptor only
};

struct RankBound {
    std::uint32_t p = 2;
    BoundMode mode = BoundMode::General;
    int dim = 0;
    long long chi = 0;
    bool unbounded = false;  // chi == 0
    long long bound = 0;     // meaningful when !unbounded
};

// Largest k with p^k dividing chi, or nullopt when chi == 0.
std::optional<int> padic_valuation(long long chi, std::uint32_t p);

// Upper bound for the p-rank of the (orientation-preserving) homeomorphism
// group:
//   p odd:                 floor(r/2) + v_p(chi)
//   p = 2, general:        r       + v_2(chi)
//   p = 2, or.-preserving: r - 1   + v_2(chi)   (requires r >= 1, orientable)
RankBound rank_bound(const ChiDescriptor& d, std::uint32_t p, BoundMode mode);

// Which hypothesis produced a forced-trivial verdict.
enum class VerdictRule {
    None,            // no rule fired
    OrientableMod6,  // n > r+1, orientable, chi != 0 mod 6
    GeneralMod3,     // n > r+1, non-orientable, chi != 0 mod 3
    OddRankMod12,    // n = 2k+1, orientable, chi != 0 mod 12, 2k > r
    OddRankMod2,     // n = 2k+1, orientable, chi != 0 mod 2,  2k >= r
};

const char* rule_name(VerdictRule r);

struct VerdictOptions {
    // Enables the odd-rank refinements (OddRankMod12 / OddRankMod2).
    bool odd_rank_rules = true;
};

struct Verdict {
    int n = 0;
    ChiDescriptor input;
    // Present for non-orientable inputs: the orientable double cover the
    // lifting step works through.
    std::optional<ChiDescriptor> lifted;
    bool forced_trivial = false;
    VerdictRule rule = VerdictRule::None;
};

// Verdict for actions of the rank-n special automorphism group (and of
// SL_n(Z)) on a connected descriptor. Requires n >= 3. NoConclusion means
// the theorems are silent, never that an action exists.
Verdict saut_verdict(const ChiDescriptor& d, int n, VerdictOptions opts = {});

std::vector<Verdict> verdict_table(const ChiDescriptor& d, int n_from, int n_to,
                                   VerdictOptions opts = {});

}  // namespace autfn
