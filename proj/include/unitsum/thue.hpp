#pragma once

#include "unitsum/bigint.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace unitsum {

/// c30 x^3 + c21 x^2 y + c12 x y^2 + c03 y^3.
struct BinaryCubicForm {
    BigInt c30, c21, c12, c03;

    BigInt eval(const BigInt& x, const BigInt& y) const {
        return ((c30 * x + c21 * y) * x + c12 * y * y) * x + c03 * y * y * y;
    }
};

struct ThueHit {
    BigInt x;
    BigInt y;
    BigInt value;
    bool primitive;
};

namespace detail {

// Monic cubic q(t) = t^3 + c2 t^2 + c1 t + c0 with helpers for exact integer
// root extraction against shifted targets.
struct MonicCubic {
    BigInt c2, c1, c0;

    BigInt eval(const BigInt& t) const { return ((t + c2) * t + c1) * t + c0; }

    // breakpoints: floors of the critical points of q (roots of 3t^2+2c2 t+c1),
    // ascending; empty when q is strictly increasing
    std::vector<BigInt> critical_floors() const {
        BigInt disc = 4 * c2 * c2 - 12 * c1;
        if (disc <= 0) return {};
        BigInt s = isqrt(disc);
        // floor((-2 c2 - s)/6), floor((-2 c2 + s)/6)
        auto fdiv = [](const BigInt& a, const BigInt& b) {
            BigInt r = a / b;
            if ((a % b != 0) && ((a < 0) != (b < 0))) --r;
            return r;
        };
        BigInt lo = fdiv(-2 * c2 - s - 1, 6);
        BigInt hi = fdiv(-2 * c2 + s + 1, 6);
        if (lo == hi) return {lo};
        return {lo, hi};
    }
};

// ceil-ish cube-root bound: smallest power-of-two r with r^3 >= a, plus one.
inline BigInt cube_root_bound(const BigInt& a) {
    BigInt r = 1;
    while (r * r * r < a) r <<= 1;
    return r + 1;
}

// Largest t in [lo, hi] with q(t) <= target, assuming q increasing there and
// q(lo) <= target <= plus slack; standard integer bisection.
inline BigInt bisect_cubic(const MonicCubic& q, BigInt lo, BigInt hi, const BigInt& target,
                           bool increasing) {
    while (lo < hi) {
        BigInt mid = lo + (hi - lo + 1) / 2;
        BigInt v = q.eval(mid);
        bool below = increasing ? (v <= target) : (v >= target);
        if (below) lo = mid; else hi = mid - 1;
    }
    return lo;
}

// All integer roots of q(t) = target, exact.
inline void integer_cubic_roots(const MonicCubic& q, const BigInt& target,
                                const std::vector<BigInt>& crit,
                                std::vector<BigInt>& out) {
    out.clear();
    // Lagrange-style bound on |t| for q(t) = target
    BigInt m = std::max(BigInt(abs(q.c2)),
                        std::max(BigInt(isqrt(abs(q.c1)) + 1),
                                 cube_root_bound(abs(q.c0 - target))));
    BigInt B = 2 * m + 2;

    // monotone interval endpoints; the critical floors are approximate to
    // within one, so pad each by a unit on both sides
    std::vector<BigInt> pts{-B};
    for (const auto& c : crit)
        for (BigInt z = c - 1; z <= c + 2; ++z)
            if (z > -B && z < B) pts.push_back(z);
    pts.push_back(B);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    for (size_t i = 0; i + 1 < pts.size(); i++) {
        BigInt lo = pts[i], hi = pts[i + 1];
        BigInt vlo = q.eval(lo), vhi = q.eval(hi);
        if (vlo == target) { out.push_back(lo); }
        if ((vlo < target && vhi > target) || (vlo > target && vhi < target)) {
            BigInt t = bisect_cubic(q, lo, hi, target, vlo < target);
            if (q.eval(t) == target) out.push_back(t);
        }
        if (i + 2 == pts.size() && vhi == target) out.push_back(hi);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

} // namespace detail

/// Bounded exact enumeration of form(x, y) in `targets` over |y| <= y_bound.
/// Requires a unit leading x-coefficient so each y-slice is a monic cubic in x
/// (up to sign).  Results ordered by (y, x).
inline std::vector<ThueHit> thue_bounded(const BinaryCubicForm& form,
                                         std::vector<BigInt> targets, const BigInt& y_bound,
                                         bool require_primitive, bool require_y_positive) {
    if (form.c30 != 1 && form.c30 != -1)
        throw std::invalid_argument("thue_bounded: leading x-coefficient must be +-1");
    if (y_bound < 0) throw std::invalid_argument("thue_bounded: y_bound must be >= 0");
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    std::vector<ThueHit> hits;
    BigInt y_lo = require_y_positive ? BigInt(1) : BigInt(-y_bound);
    std::vector<BigInt> roots;
    for (BigInt y = y_lo; y <= y_bound; ++y) {
        // q(x) = sign * form(x, y) is monic in x
        bool flip = form.c30 == -1;
        detail::MonicCubic q{(flip ? -form.c21 : form.c21) * y,
                             (flip ? -form.c12 : form.c12) * y * y,
                             (flip ? -form.c03 : form.c03) * y * y * y};
        std::vector<BigInt> crit = q.critical_floors();

        // residue prefilter: admissible target residues modulo 16 and 9
        bool table16[16], table9[9];
        std::fill(std::begin(table16), std::end(table16), false);
        std::fill(std::begin(table9), std::end(table9), false);
        {
            long cy2 = static_cast<long>(q.c2 % 16), cy1 = static_cast<long>(q.c1 % 16),
                 cy0 = static_cast<long>(q.c0 % 16);
            for (long t = 0; t < 16; t++)
                table16[((((t + cy2) * t + cy1) * t + cy0) % 16 + 16) % 16] = true;
            long d2 = static_cast<long>(q.c2 % 9), d1 = static_cast<long>(q.c1 % 9),
                 d0 = static_cast<long>(q.c0 % 9);
            for (long t = 0; t < 9; t++)
                table9[((((t + d2) * t + d1) * t + d0) % 9 + 9) % 9] = true;
        }

        for (const auto& lam : targets) {
            BigInt target = flip ? -lam : lam;
            if (!table16[static_cast<long>(((target % 16) + 16) % 16)]) continue;
            if (!table9[static_cast<long>(((target % 9) + 9) % 9)]) continue;
            detail::integer_cubic_roots(q, target, crit, roots);
            for (const auto& x : roots) {
                if (require_y_positive && y <= 0) continue;
                BigInt g = gcd(abs(x), abs(y));
                bool prim = (g == 1);
                if (require_primitive && !prim) continue;
                hits.push_back({x, y, lam, prim});
            }
        }
    }
    std::sort(hits.begin(), hits.end(), [](const ThueHit& a, const ThueHit& b) {
        return std::tie(a.y, a.x, a.value) < std::tie(b.y, b.x, b.value);
    });
    return hits;
}

/// Integer triples (U, V, W) with U^3 - W U^2 V - (W+3) U V^2 - V^3 = W^2+3W+9
/// for |U|, |V| <= bound.  For fixed (U, V) the equation is the quadratic
///   W^2 + (3 + U^2 V + U V^2) W + (9 - U^3 + 3 U V^2 + V^3) = 0,
/// solved exactly by a discriminant square test, so no W bound is needed.
inline std::vector<std::tuple<BigInt, BigInt, BigInt>> uvw_search(const BigInt& bound) {
    if (bound < 1) throw std::invalid_argument("uvw_search: bound must be >= 1");
    std::vector<std::tuple<BigInt, BigInt, BigInt>> out;
    for (BigInt U = -bound; U <= bound; ++U) {
        for (BigInt V = -bound; V <= bound; ++V) {
            BigInt B = 3 + U * U * V + U * V * V;
            BigInt C = 9 - U * U * U + 3 * U * V * V + V * V * V;
            auto s = is_perfect_square(B * B - 4 * C);
            if (!s) continue;
            for (int pick = 0; pick < 2; pick++) {
                BigInt numer = -B + (pick == 0 ? *s : -*s);
                if (numer % 2 != 0) continue;
                BigInt W = numer / 2;
                // independent exact re-verification of the original equation
                BigInt lhs = U * U * U - W * U * U * V - (W + 3) * U * V * V - V * V * V;
                BigInt rhs = W * W + 3 * W + 9;
                if (lhs == rhs) out.push_back({U, V, W});
                if (*s == 0) break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace unitsum
