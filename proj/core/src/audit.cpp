#include "autfn/audit.hpp"

#include <unordered_set>

#include "autfn/errors.hpp"
#include "autfn/matrix.hpp"

namespace autfn {

namespace {

std::size_t pow_sz(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::size_t factorial(int n) {
    std::size_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::size_t>(i);
    return r;
}

std::size_t sized_cap(std::size_t expected, std::size_t override_cap) {
    return override_cap ? override_cap : 2 * expected + 16;
}

}  // namespace

bool AuditReport::all_pass() const {
    for (const AuditCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<Automorphism> inversion_generators(int n) {
    std::vector<Automorphism> out;
    for (int i = 1; i <= n; ++i) out.push_back(inversion(i, n));
    return out;
}

std::vector<Automorphism> signed_permutation_generators(int n) {
    std::vector<Automorphism> out = inversion_generators(n);
    for (int i = 1; i < n; ++i) out.push_back(transposition(i, i + 1, n));
    return out;
}

std::vector<Automorphism> rotation_generators(int n) {
    std::vector<Automorphism> out;
    for (int i = 1; 2 * i <= n; ++i) out.push_back(rotation(i, n));
    return out;
}

GroupTable subgroup_N(int n, std::size_t cap) {
    return closure(inversion_generators(n), sized_cap(pow_sz(2, n), cap));
}

GroupTable subgroup_W(int n, std::size_t cap) {
    return closure(signed_permutation_generators(n),
                   sized_cap(pow_sz(2, n) * factorial(n), cap));
}

GroupTable subgroup_T(int n, std::size_t cap) {
    return closure(rotation_generators(n), sized_cap(pow_sz(3, n / 2), cap));
}

std::vector<Automorphism> special_part(const GroupTable& table) {
    std::vector<Automorphism> out;
    for (const Automorphism& f : table.elements())
        if (is_special(f)) out.push_back(f);
    return out;
}

AuditReport audit_torsion(int n, std::optional<std::size_t> cap_override) {
    if (n < 3 || n > 6)
        throw InputError("audit_torsion: rank must be between 3 and 6, got " +
                         std::to_string(n));
    std::size_t cap = cap_override.value_or(0);

    AuditReport report;
    report.rank = n;
    auto add = [&](std::string name, std::string expected, std::string actual) {
        report.checks.push_back(
            {std::move(name), expected, actual, expected == actual});
    };
    auto add_count = [&](std::string name, std::size_t expected, std::size_t actual) {
        add(std::move(name), std::to_string(expected), std::to_string(actual));
    };
    auto add_bool = [&](std::string name, bool expected, bool actual) {
        add(std::move(name), expected ? "true" : "false", actual ? "true" : "false");
    };

    // (a) orders and commutation of the named torsion generators.
    for (int i = 1; i <= n; ++i)
        add_count("order(e" + std::to_string(i) + ")", 2,
                  static_cast<std::size_t>(order(inversion(i, n), 8).value_or(0)));
    int m = n / 2;
    std::vector<Automorphism> rots = rotation_generators(n);
    for (int i = 1; i <= m; ++i)
        add_count("order(R" + std::to_string(i) + ")", 3,
                  static_cast<std::size_t>(order(rots[i - 1], 8).value_or(0)));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            add_bool("commute(R" + std::to_string(i + 1) + ",R" + std::to_string(j + 1) + ")",
                     true, compose(rots[i], rots[j]) == compose(rots[j], rots[i]));

    // (b) |T| = 3^m.
    GroupTable t_table = subgroup_T(n, cap);
    add_count("|T|", pow_sz(3, m), t_table.order());

    // (c) |N| = 2^n and its special part.
    GroupTable n_table = subgroup_N(n, cap);
    add_count("|N|", pow_sz(2, n), n_table.order());
    std::vector<Automorphism> sn = special_part(n_table);
    add_count("|SN|", pow_sz(2, n - 1), sn.size());

    // (d) |W_n| and |SW_n|.
    GroupTable w_table = subgroup_W(n, cap);
    add_count("|W|", pow_sz(2, n) * factorial(n), w_table.order());
    std::vector<Automorphism> sw = special_part(w_table);
    add_count("|SW|", pow_sz(2, n - 1) * factorial(n), sw.size());

    // (e) delta is central in W_n.
    Automorphism d = delta(n);
    bool central = true;
    for (const Automorphism& w : w_table.elements())
        if (compose(d, w) != compose(w, d)) {
            central = false;
            break;
        }
    add_bool("delta-central-in-W", true, central);

    // (f) delta is special precisely for even rank.
    add_bool("delta-special", n % 2 == 0, is_special(d));

    // (g) normality inside SW_n.
    std::unordered_set<std::string> sn_keys;
    for (const Automorphism& f : sn) sn_keys.insert(f.key());
    bool sn_normal = true;
    for (const Automorphism& s : sw) {
        for (const Automorphism& t : sn)
            if (!sn_keys.contains(compose(compose(s, t), s.inverse()).key())) {
                sn_normal = false;
                break;
            }
        if (!sn_normal) break;
    }
    add_bool("SN-normal-in-SW", true, sn_normal);

    if (n % 2 == 0) {
        bool delta_normal = true;
        std::string id_key = Automorphism::identity(n).key();
        std::string d_key = d.key();
        for (const Automorphism& s : sw) {
            std::string k = compose(compose(s, d), s.inverse()).key();
            if (k != id_key && k != d_key) {
                delta_normal = false;
                break;
            }
        }
        add_bool("<delta>-normal-in-SW", true, delta_normal);
    }

    // (h) faithfulness sanity: within SN and T, only the identity fixes the
    // whole basis.
    auto only_identity_trivial = [&](const std::vector<Automorphism>& els) {
        std::size_t trivial = 0;
        for (const Automorphism& f : els)
            if (f.is_identity()) ++trivial;
        return trivial == 1;
    };
    add_bool("faithful-SN", true, only_identity_trivial(sn));
    add_bool("faithful-T", true,
             only_identity_trivial(t_table.elements()));

    return report;
}

}  // namespace autfn
