#pragma once

#include "unitsum/bigint.hpp"
#include "unitsum/intpoly.hpp"

#include <string>
#include <tuple>
#include <vector>

// Embedded reference data for the known classification of unit-sum solutions
// over cyclic and complex cubic fields.  Everything here is re-derived by the
// classifier pipeline and diffed against these transcriptions by the tests.

namespace unitsum::reference {

/// One sporadic solution class: eps + delta = n with both coordinates given in
/// the power basis {1, w, w^2} of the field presented by `defining`.
struct SporadicRow {
    IntPoly defining;
    BigInt e0, e1, e2; // eps
    BigInt d0, d1, d2; // delta
    BigInt n;
    BigInt field_disc; // stated discriminant of the field
};

/// The standard presentations the sporadic solutions live in.
inline IntPoly simplest_cubic_poly(const BigInt& a) {
    return IntPoly::cubic(-a, -(a + 3), -1); // x^3 - a x^2 - (a+3) x - 1
}

inline IntPoly la_family_poly(const BigInt& a) {
    return IntPoly::cubic(-a, 0, -1); // x^3 - a x^2 - 1
}

/// All 17 sporadic solution classes over cyclic cubic fields, up to
/// equivalence.  They all live in the three fields K_{-1}, K_0, K_1.
inline const std::vector<SporadicRow>& cyclic_sporadic_rows() {
    static const std::vector<SporadicRow> rows = [] {
        IntPoly km1 = simplest_cubic_poly(-1); // x^3 + x^2 - 2x - 1
        IntPoly k0 = simplest_cubic_poly(0);   // x^3 - 3x - 1
        IntPoly k1 = simplest_cubic_poly(1);   // x^3 - x^2 - 4x - 1
        return std::vector<SporadicRow>{
            {km1, 0, 1, 0, /**/ 1, -1, 0, /**/ 1, 49},
            {km1, 0, 0, 1, /**/ 1, 0, -1, /**/ 1, 49},
            {km1, 0, -1, 1, /**/ 1, 1, -1, /**/ 1, 49},
            {km1, 0, -1, 0, /**/ 2, 1, 0, /**/ 2, 49},
            {km1, 1, 1, 0, /**/ 1, -1, 0, /**/ 2, 49},
            {km1, -6, 1, 3, /**/ 8, -1, -3, /**/ 2, 49},
            {km1, 0, 0, 1, /**/ 3, 0, -1, /**/ 3, 49},
            {km1, 0, -5, 4, /**/ 3, 5, -4, /**/ 3, 49},
            {km1, 0, 2, 1, /**/ 4, -2, -1, /**/ 4, 49},
            {km1, 0, -1, 1, /**/ 5, 1, -1, /**/ 5, 49},
            {km1, 0, 9, 5, /**/ 19, -9, -5, /**/ 19, 49},
            {km1, 0, -5, 4, /**/ 22, 5, -4, /**/ 22, 49},
            {k0, 0, 1, 0, /**/ 2, -1, 0, /**/ 2, 81},
            {k0, 0, 0, 1, /**/ 3, 0, -1, /**/ 3, 81},
            {k1, 0, 0, 1, /**/ 2, 0, -1, /**/ 2, 169},
            {k1, -2, 0, 1, /**/ 7, 0, -1, /**/ 5, 169},
            {k1, 0, 0, 1, /**/ 7, 0, -1, /**/ 7, 169},
        };
    }();
    return rows;
}

/// All 14 sporadic solution classes over complex cubic fields, up to
/// equivalence.  They live in L_{-1}, L_1, and the field of x^3 - x^2 - x - 1.
inline const std::vector<SporadicRow>& complex_sporadic_rows() {
    static const std::vector<SporadicRow> rows = [] {
        IntPoly lm1 = la_family_poly(-1);            // x^3 + x^2 - 1
        IntPoly l1 = la_family_poly(1);              // x^3 - x^2 - 1
        IntPoly tribo = IntPoly::cubic(-1, -1, -1);  // x^3 - x^2 - x - 1
        return std::vector<SporadicRow>{
            {lm1, 0, 1, 0, /**/ 1, -1, 0, /**/ 1, -23},
            {lm1, 0, 0, 1, /**/ 1, 0, -1, /**/ 1, -23},
            {lm1, 0, 1, 1, /**/ 1, -1, -1, /**/ 1, -23},
            {lm1, 0, -1, -1, /**/ 1, 1, 1, /**/ 1, -23},
            {lm1, 2, 2, 1, /**/ -1, -2, -1, /**/ 1, -23},
            {lm1, 1, 1, 0, /**/ 1, -1, 0, /**/ 2, -23},
            {lm1, 1, 1, 1, /**/ 1, -1, -1, /**/ 2, -23},
            {lm1, 1, 2, 1, /**/ 2, -2, -1, /**/ 3, -23},
            {lm1, 2, 2, 1, /**/ 2, -2, -1, /**/ 4, -23},
            {l1, 0, 0, -1, /**/ 1, 0, 1, /**/ 1, -31},
            {l1, 0, -1, 1, /**/ 1, 1, -1, /**/ 1, -31},
            {l1, 0, 0, 1, /**/ 2, 0, -1, /**/ 2, -31},
            {l1, 1, 0, 1, /**/ 2, 0, -1, /**/ 3, -31},
            {tribo, 0, 1, 0, /**/ 2, -1, 0, /**/ 2, -44},
        };
    }();
    return rows;
}

/// Candidate row for the n in {1, 2} branch: (n, a, minimal polynomial of eps,
/// label of the field it generates).
struct SmallNRow {
    BigInt n, a;
    IntPoly f_eps;
    std::string field;
};

/// The published (n, a, f_eps, K) table for cyclic fields, n^3+an^2+bn != 0.
inline const std::vector<SmallNRow>& cyclic_small_n_rows() {
    static const std::vector<SmallNRow> rows{
        {1, -5, IntPoly::cubic(2, -1, -1), "K_-1"},
        {1, 2, IntPoly::cubic(-5, 6, -1), "K_-1"},
        {2, -10, IntPoly::cubic(4, -11, -1), "K_-1"},
        {2, -6, IntPoly::cubic(0, -3, -1), "K_0"},
        {2, -4, IntPoly::cubic(-2, -1, 1), "K_-1"},
        {2, -2, IntPoly::cubic(-4, 3, 1), "K_-1"},
        {2, 0, IntPoly::cubic(-6, 9, -1), "K_0"},
        {2, 4, IntPoly::cubic(-10, 17, -1), "K_-1"},
    };
    return rows;
}

/// The published complex analogue, with the field discriminant in place of a
/// field label.
struct SmallNComplexRow {
    BigInt n, a;
    IntPoly f_eps;
    BigInt field_disc;
};

inline const std::vector<SmallNComplexRow>& complex_small_n_rows() {
    static const std::vector<SmallNComplexRow> rows{
        {1, -4, IntPoly::cubic(1, 0, -1), -23},
        {1, -3, IntPoly::cubic(0, 1, -1), -31},
        {1, -2, IntPoly::cubic(-1, 2, -1), -23},
        {1, -1, IntPoly::cubic(-2, 3, -1), -23},
        {1, 0, IntPoly::cubic(-3, 4, -1), -31},
        {1, 1, IntPoly::cubic(-4, 5, -1), -23},
        {2, -5, IntPoly::cubic(-1, -1, -1), -44},
        {2, -4, IntPoly::cubic(-2, 1, -1), -23},
        {2, -2, IntPoly::cubic(-4, 5, -1), -23},
        {2, -1, IntPoly::cubic(-5, 7, -1), -44},
    };
    return rows;
}

/// Candidate row for the n^3+an^2+bn = 0 branch: ((U, V), f_eps, n, field).
struct UvRow {
    BigInt U, V;
    IntPoly f_eps;
    BigInt n;
    std::string field;
};

inline const std::vector<UvRow>& cyclic_uv_rows() {
    static const std::vector<UvRow> rows{
        {1, -3, IntPoly::cubic(1, -2, -1), 1, "K_-1"},
        {1, 4, IntPoly::cubic(-6, 5, -1), 1, "K_-1"},
        {2, 1, IntPoly::cubic(-5, 6, -1), 2, "K_-1"},
        {2, 5, IntPoly::cubic(-9, 14, -1), 2, "K_1"},
        {3, -22, IntPoly::cubic(16, -57, -1), 3, "K_-1"},
        {3, -1, IntPoly::cubic(-5, 6, -1), 3, "K_-1"},
        {3, 0, IntPoly::cubic(-6, 9, -1), 3, "K_0"},
        {4, -5, IntPoly::cubic(-3, -4, -1), 4, "K_-1"},
        {5, -7, IntPoly::cubic(-3, -10, -1), 5, "K_1"},
        {5, -4, IntPoly::cubic(-6, 5, -1), 5, "K_-1"},
        {7, -5, IntPoly::cubic(-9, 14, -1), 7, "K_1"},
        {19, 3, IntPoly::cubic(-41, 418, -1), 19, "K_-1"},
        {22, -3, IntPoly::cubic(-41, 418, -1), 22, "K_-1"},
    };
    return rows;
}

struct UvComplexRow {
    BigInt U, V;
    IntPoly f_eps;
    BigInt n;
    BigInt field_disc;
};

inline const std::vector<UvComplexRow>& complex_uv_rows() {
    static const std::vector<UvComplexRow> rows{
        {1, -2, IntPoly::cubic(0, -1, -1), 1, -23},
        {1, 0, IntPoly::cubic(-2, 1, -1), 1, -23},
        {1, 1, IntPoly::cubic(-3, 2, -1), 1, -23},
        {1, 2, IntPoly::cubic(-4, 3, -1), 1, -31},
        {1, 3, IntPoly::cubic(-5, 4, -1), 1, -23},
        {2, -3, IntPoly::cubic(-1, -2, -1), 2, -31},
        {2, -1, IntPoly::cubic(-3, 2, -1), 2, -23},
        {3, -4, IntPoly::cubic(-2, -3, -1), 3, -23},
        {3, -2, IntPoly::cubic(-4, 3, -1), 3, -31},
        {4, -3, IntPoly::cubic(-5, 4, -1), 4, -23},
    };
    return rows;
}

/// The 13 known (U, V) pairs with U > 0 admitting a W in the norm-form
/// equation U^3 - WU^2V - (W+3)UV^2 - V^3 = W^2 + 3W + 9.
inline const std::vector<std::pair<BigInt, BigInt>>& cyclic_uv_pairs() {
    static const std::vector<std::pair<BigInt, BigInt>> pairs{
        {1, -3}, {1, 4}, {2, 1}, {2, 5}, {3, -22}, {3, -1}, {3, 0},
        {4, -5}, {5, -7}, {5, -4}, {7, -5}, {19, 3}, {22, -3},
    };
    return pairs;
}

/// The 10 known (U, V) pairs with U > 0, V != -U making the general-branch
/// discriminant negative (the diagonal V = -U always does).
inline const std::vector<std::pair<BigInt, BigInt>>& complex_uv_pairs() {
    static const std::vector<std::pair<BigInt, BigInt>> pairs{
        {1, -2}, {1, 0}, {1, 1}, {1, 2}, {1, 3},
        {2, -3}, {2, -1}, {3, -4}, {3, -2}, {4, -3},
    };
    return pairs;
}

/// Known coincidences K_a = K_b among the simplest cubic fields (each list is
/// one isomorphism class, restricted to a >= -1).
inline const std::vector<std::vector<BigInt>>& simplest_cubic_aliases() {
    static const std::vector<std::vector<BigInt>> aliases{
        {-1, 5, 12, 1259},
        {0, 3, 54},
        {1, 66},
        {2, 2389},
    };
    return aliases;
}

/// Known coincidence among the L_a family.
inline const std::vector<std::vector<BigInt>>& la_aliases() {
    static const std::vector<std::vector<BigInt>> aliases{
        {1, 67},
    };
    return aliases;
}

/// The published unit-sum value sets for the named fields.
inline const std::vector<std::pair<std::string, std::vector<BigInt>>>& known_nk_sets() {
    static const std::vector<std::pair<std::string, std::vector<BigInt>>> sets{
        {"K_-1", {1, 2, 3, 4, 5, 19, 22}},
        {"K_0", {1, 2, 3}},
        {"K_1", {1, 2, 5, 7}},
        {"L_-1", {1, 2, 3, 4}},
        {"L_1", {1, 2, 3, 67}},
    };
    return sets;
}

} // namespace unitsum::reference
