#pragma once

#include "unitsum/bigint.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace unitsum {

/// A solution of x^2 - D y^2 = sign, with sign in {+4, -4}.
struct PellSolution {
    BigInt x;
    BigInt y;
    int sign; // +4 or -4
};

namespace detail {

constexpr size_t kPellPeriodCap = 1'000'000;

/// Squarefree test by trial division; adequate for the input sizes in scope.
inline bool is_squarefree(const BigInt& d) {
    BigInt n = abs(d);
    if (n == 0) return false;
    for (BigInt p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

/// Scan convergents of the continued fraction of (P0 + sqrt(D))/Q0 with exact
/// integer recurrences, calling visit(p, q) for each convergent p/q.  Stops
/// when visit returns true; throws past the period cap.
template <typename Visit>
inline void scan_cf_convergents(const BigInt& D, BigInt P, BigInt Q, Visit visit) {
    BigInt r = isqrt(D);
    BigInt p_prev = 1, q_prev = 0;
    BigInt p_cur, q_cur;
    bool first = true;
    for (size_t step = 0; step < kPellPeriodCap; step++) {
        if (Q <= 0) throw std::logic_error("continued fraction: nonpositive Q");
        BigInt a = (P + r) / Q;
        if (first) {
            p_cur = a;
            q_cur = 1;
            first = false;
        } else {
            BigInt p_next = a * p_cur + p_prev;
            BigInt q_next = a * q_cur + q_prev;
            p_prev = p_cur; q_prev = q_cur;
            p_cur = p_next; q_cur = q_next;
        }
        if (visit(p_cur, q_cur)) return;
        P = a * Q - P;
        Q = (D - P * P) / Q;
        if (Q == 0) throw std::invalid_argument("continued fraction: D is a perfect square");
    }
    throw std::runtime_error("continued fraction: period cap exceeded");
}

} // namespace detail

/// Fundamental solution of x^2 - D y^2 = +-4 with x, y >= 1, via the continued
/// fraction of sqrt(D) (or of (1+sqrt(D))/2 when D = 1 mod 4, which captures
/// the half-integer units).  Existence is guaranteed for squarefree D >= 2.
inline PellSolution pell_pm4_fundamental(const BigInt& D) {
    if (D < 2) throw std::invalid_argument("pell_pm4_fundamental: D must be >= 2");
    if (!detail::is_squarefree(D)) throw std::invalid_argument("pell_pm4_fundamental: D must be squarefree");

    std::vector<PellSolution> candidates;
    // even route: x^2 - D y^2 = +-1 lifted to (2x, 2y)
    detail::scan_cf_convergents(D, 0, 1, [&](const BigInt& p, const BigInt& q) {
        BigInt v = p * p - D * q * q;
        if (v == 1 || v == -1) {
            candidates.push_back({2 * p, 2 * q, v == 1 ? 4 : -4});
            return true;
        }
        return false;
    });
    if (D % 4 == 1) {
        // half-integer route: convergents p/q of (1+sqrt(D))/2 give units
        // (p - q*alpha), i.e. x = 2p - q, y = q
        detail::scan_cf_convergents(D, 1, 2, [&](const BigInt& p, const BigInt& q) {
            BigInt x = 2 * p - q;
            BigInt v = x * x - D * q * q;
            if (v == 4 || v == -4) {
                candidates.push_back({abs(x), q, v == 4 ? 4 : -4});
                return true;
            }
            return false;
        });
    }
    PellSolution best = candidates.front();
    for (const auto& c : candidates)
        if (c.x < best.x) best = c;
    return best;
}

/// All n <= X in N_K for K = Q(sqrt(D)): traces of powers of the fundamental
/// +-4 unit, plus the ever-present 2 (from (x, y) = (2, 0)).
inline std::vector<BigInt> nk_real_quadratic(const BigInt& D, const BigInt& X) {
    if (X < 1) throw std::invalid_argument("nk_real_quadratic: X must be >= 1");
    PellSolution fund = pell_pm4_fundamental(D);
    std::set<BigInt> out;
    if (X >= 2) out.insert(2);
    // powers of eps = (x1 + y1 sqrt(D))/2: exact half-integer recurrences
    BigInt xk = fund.x, yk = fund.y;
    while (xk <= X) {
        if (xk >= 1) out.insert(xk);
        BigInt xn = (fund.x * xk + D * fund.y * yk) / 2;
        BigInt yn = (fund.x * yk + fund.y * xk) / 2;
        xk = xn;
        yk = yn;
    }
    return {out.begin(), out.end()};
}

enum class RankZeroKind { rationals, imaginary_quadratic };

/// N_K for the unit-rank-zero fields: the rationals and imaginary quadratics.
inline std::vector<BigInt> nk_rank_zero(RankZeroKind kind, const BigInt& D = 0) {
    if (kind == RankZeroKind::rationals) return {2};
    if (D >= 0) throw std::invalid_argument("nk_rank_zero: imaginary quadratic needs D < 0");
    if (!detail::is_squarefree(D)) throw std::invalid_argument("nk_rank_zero: D must be squarefree");
    if (D == -3) return {1, 2};
    return {2};
}

} // namespace unitsum
