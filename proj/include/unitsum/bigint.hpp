#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitsum {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    return BigRational(num, den);
}

inline BigInt num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRational& q) { return den(q) == 1; }

/// Floor of the real square root of a nonnegative integer.
inline BigInt isqrt(const BigInt& x) {
    if (x < 0) throw std::invalid_argument("isqrt: negative argument");
    return boost::multiprecision::sqrt(x);
}

/// r with r*r == x when x is a perfect square, empty otherwise.
inline std::optional<BigInt> is_perfect_square(const BigInt& x) {
    if (x < 0) return std::nullopt;
    BigInt r = isqrt(x);
    if (r * r == x) return r;
    return std::nullopt;
}

/// Exact integer k-th root when it exists (sign respected for odd k).
inline std::optional<BigInt> integer_root(const BigInt& x, unsigned k) {
    if (k == 0) throw std::invalid_argument("integer_root: k must be >= 1");
    if (k == 1) return x;
    bool neg = x < 0;
    if (neg && k % 2 == 0) return std::nullopt;
    BigInt a = abs(x);
    if (a <= 1) return neg ? BigInt(-a) : a;
    // binary search on magnitude
    BigInt lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, k) < a) hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, k) <= a) lo = mid; else hi = mid - 1;
    }
    if (boost::multiprecision::pow(lo, k) != a) return std::nullopt;
    return neg ? BigInt(-lo) : lo;
}

/// All positive and negative divisors of |x|, ascending by absolute value.
inline std::vector<BigInt> signed_divisors(const BigInt& x) {
    if (x == 0) throw std::invalid_argument("signed_divisors: x must be nonzero");
    BigInt a = abs(x);
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    std::vector<BigInt> out;
    out.reserve(2 * (small.size() + large.size()));
    for (const auto& d : small) { out.push_back(d); out.push_back(-d); }
    for (auto it = large.rbegin(); it != large.rend(); ++it) { out.push_back(*it); out.push_back(-*it); }
    return out;
}

using Factorization = std::map<BigInt, unsigned>;

/// Trial-division factorization; suitable for the small inputs in scope.
inline Factorization factorize(BigInt x) {
    if (x == 0) throw std::invalid_argument("factorize: x must be nonzero");
    Factorization f;
    x = abs(x);
    for (BigInt p = 2; p * p <= x; p += (p == 2 ? 1 : 2)) {
        while (x % p == 0) { f[p]++; x /= p; }
    }
    if (x > 1) f[x]++;
    return f;
}

inline Factorization merge_factorizations(const Factorization& a, const Factorization& b) {
    Factorization out = a;
    for (const auto& [p, e] : b) out[p] += e;
    return out;
}

inline Factorization pow_factorization(const Factorization& a, unsigned k) {
    Factorization out = a;
    for (auto& [p, e] : out) e *= k;
    return out;
}

/// All positive divisors of the integer described by f, ascending.
inline std::vector<BigInt> divisors_from_factorization(const Factorization& f) {
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : f) {
        std::vector<BigInt> next;
        next.reserve(out.size() * (e + 1));
        BigInt pk = 1;
        for (unsigned i = 0; i <= e; ++i) {
            for (const auto& d : out) next.push_back(d * pk);
            pk *= p;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All positive lambda such that lambda^2 divides the integer described by f.
inline std::vector<BigInt> square_divisor_roots(const Factorization& f) {
    Factorization half;
    for (const auto& [p, e] : f)
        if (e >= 2) half[p] = e / 2;
    return divisors_from_factorization(half);
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline std::string to_decimal(const BigRational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

} // namespace unitsum
