#pragma once

#include "unitsum/bigint.hpp"
#include "unitsum/cubic_field.hpp"
#include "unitsum/intpoly.hpp"

#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace unitsum {

// ---------------------------------------------------------------------------
// Degree-d construction realizing many values as sums of two units
// ---------------------------------------------------------------------------

/// The construction M_d = prod_{i=1..d} (x - 2^i) - 1 over Z[x]/(M_d):
/// each u_i = alpha - 2^i is a unit (the product of all of them is 1), and
/// (2^j - alpha) + (alpha - 2^i) = 2^j - 2^i realizes every such difference
/// as a sum of two units.
struct MdReport {
    int d = 0;
    IntPoly modulus;
    bool units_verified = false;                      // u_i * (prod of others) == 1 mod M
    bool evaluations_verified = false;                // M(2^i) == -1 for all i
    std::vector<std::tuple<int, int, BigInt>> values; // (i, j, 2^j - 2^i) for i < j
};

inline MdReport md_construction(int d) {
    if (d < 2 || d > 12) throw std::invalid_argument("md_construction: d must be in [2, 12]");
    MdReport rep;
    rep.d = d;

    std::vector<BigInt> pts(d);
    for (int i = 0; i < d; i++) pts[i] = BigInt(1) << (i + 1); // 2^1 .. 2^d

    IntPoly prod = IntPoly::constant(1);
    for (const auto& p : pts) prod = prod * IntPoly{-p, 1};
    rep.modulus = prod - IntPoly::constant(1);

    rep.evaluations_verified = true;
    for (const auto& p : pts)
        if (rep.modulus.eval(p) != -1) rep.evaluations_verified = false;

    // u_i = x - 2^i; its inverse mod M is the product of the other factors,
    // since the product of all factors is M + 1 == 1 mod M
    rep.units_verified = true;
    for (int i = 0; i < d; i++) {
        IntPoly inv = IntPoly::constant(1);
        for (int k = 0; k < d; k++)
            if (k != i) inv = (inv * IntPoly{-pts[k], 1}).mod_monic(rep.modulus);
        IntPoly check = (IntPoly{-pts[i], 1} * inv).mod_monic(rep.modulus);
        if (check != IntPoly::constant(1)) rep.units_verified = false;
    }

    for (int i = 0; i < d; i++)
        for (int j = i + 1; j < d; j++)
            rep.values.push_back({i + 1, j + 1, pts[j] - pts[i]});
    return rep;
}

/// Growth bound on the field degree required to realize every value up to a
/// target: d * 24^(324 (2d + 2)) + 2.
inline BigInt theoretical_bound(int d) {
    if (d < 1) throw std::invalid_argument("theoretical_bound: d must be >= 1");
    unsigned exp = 324u * (2u * static_cast<unsigned>(d) + 2u);
    return BigInt(d) * boost::multiprecision::pow(BigInt(24), exp) + 2;
}

// ---------------------------------------------------------------------------
// Parametrized identity family over the fields of x^3 + (l-1)x^2 - lx - 1
// ---------------------------------------------------------------------------

/// One checked identity eps + delta = n.
struct FamilyIdentity {
    FieldElement eps;
    FieldElement delta;
    BigInt n;
    bool sum_ok = false;
    bool units_ok = false;

    bool verifies() const { return sum_ok && units_ok; }
};

/// The four published unit-sum identities over the field of
/// x^3 + (l-1)x^2 - lx - 1, realizing n = l, l+1, l+2, l+3.  The fourth as
/// printed has a sign typo in delta's rho^2 term; both the printed version and
/// the sign-corrected variant are checked.
struct EnnolaReport {
    FieldPtr field;
    BigInt l;
    std::vector<FamilyIdentity> identities;       // n = l, l+1, l+2, then the printed fourth
    std::optional<FamilyIdentity> fourth_variant; // the sign-corrected fourth (n = l+3)
    bool printed_fourth_verifies = false;
    bool variant_fourth_verifies = false;

    int verified_count() const {
        int c = 0;
        for (const auto& id : identities) c += id.verifies() ? 1 : 0;
        return c;
    }
};

namespace detail {

inline FamilyIdentity check_identity(const FieldPtr& K, FieldElement eps, FieldElement delta,
                                     BigInt n) {
    FamilyIdentity id{std::move(eps), std::move(delta), std::move(n)};
    id.sum_ok = (id.eps + id.delta == FieldElement::rational(K, BigRational(id.n)));
    id.units_ok = id.eps.is_unit() && id.delta.is_unit();
    return id;
}

} // namespace detail

inline EnnolaReport ennola_solutions(const BigInt& l) {
    if (l < 3) throw std::invalid_argument("ennola_solutions: l must be >= 3");
    EnnolaReport rep;
    rep.l = l;
    rep.field = make_field(IntPoly::cubic(l - 1, -l, -1));
    const FieldPtr& K = rep.field;
    FieldElement rho = FieldElement::omega(K);
    FieldElement rho2 = rho * rho;
    FieldElement one = FieldElement::one(K);
    auto rat = [&](const BigInt& v) { return FieldElement::rational(K, BigRational(v)); };

    rep.identities.push_back(detail::check_identity(K, -rho, rho + rat(l), l));
    rep.identities.push_back(detail::check_identity(K, one - rho, rho + rat(l), l + 1));
    FieldElement lrho = rho * BigRational(l);
    rep.identities.push_back(
        detail::check_identity(K, lrho + rho2, rat(l + 2) - lrho - rho2, l + 2));
    // fourth as printed: delta carries +rho^2
    rep.identities.push_back(
        detail::check_identity(K, one + lrho + rho2, rat(l + 2) - lrho + rho2, l + 3));
    rep.printed_fourth_verifies = rep.identities.back().verifies();
    // sign-corrected variant: delta carries -rho^2
    rep.fourth_variant =
        detail::check_identity(K, one + lrho + rho2, rat(l + 2) - lrho - rho2, l + 3);
    rep.variant_fourth_verifies = rep.fourth_variant->verifies();
    return rep;
}

} // namespace unitsum
