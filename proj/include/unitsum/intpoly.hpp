#pragma once

#include "unitsum/bigint.hpp"

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace unitsum {

/// Dense univariate polynomial with integer coefficients, lowest degree first.
/// The zero polynomial has an empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<BigInt> coeffs) : c_(coeffs) { trim(); }

    /// Monic cubic x^3 + a2 x^2 + a1 x + a0.
    static IntPoly cubic(const BigInt& a2, const BigInt& a1, const BigInt& a0) {
        return IntPoly{a0, a1, a2, 1};
    }

    static IntPoly constant(const BigInt& c) { return IntPoly{c}; }
    static IntPoly x() { return IntPoly{0, 1}; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const BigInt& operator[](size_t i) const {
        static const BigInt zero = 0;
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    BigRational eval(const BigRational& x) const {
        BigRational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRational(*it);
        return acc;
    }

    IntPoly operator-() const {
        std::vector<BigInt> out(c_);
        for (auto& v : out) v = -v;
        return IntPoly(std::move(out));
    }

    IntPoly operator+(const IntPoly& o) const {
        std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < c_.size(); i++) out[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); i++) out[i] += o.c_[i];
        return IntPoly(std::move(out));
    }

    IntPoly operator-(const IntPoly& o) const { return *this + (-o); }

    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return IntPoly();
        std::vector<BigInt> out(c_.size() + o.c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); i++)
            for (size_t j = 0; j < o.c_.size(); j++)
                out[i + j] += c_[i] * o.c_[j];
        return IntPoly(std::move(out));
    }

    IntPoly operator*(const BigInt& s) const {
        std::vector<BigInt> out(c_);
        for (auto& v : out) v *= s;
        return IntPoly(std::move(out));
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<BigInt> out(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); i++) out[i - 1] = c_[i] * BigInt(i);
        return IntPoly(std::move(out));
    }

    /// Remainder modulo a monic polynomial (exact integer division).
    IntPoly mod_monic(const IntPoly& m) const {
        if (!m.is_monic()) throw std::invalid_argument("mod_monic: modulus not monic");
        std::vector<BigInt> r(c_);
        int dm = m.degree();
        while (static_cast<int>(r.size()) - 1 >= dm) {
            BigInt lead = r.back();
            size_t shift = r.size() - 1 - dm;
            if (lead != 0)
                for (int i = 0; i <= dm; i++) r[shift + i] -= lead * m[i];
            r.pop_back();
        }
        return IntPoly(std::move(r));
    }

    /// Substitute x -> n - x (used via poly_reflect).
    IntPoly compose_n_minus_x(const BigInt& n) const {
        IntPoly lin{n, -1};
        IntPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * lin + IntPoly::constant(*it);
        return acc;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& a = (*this)[i];
            if (a == 0) continue;
            BigInt mag = abs(a);
            if (first) { if (a < 0) os << "-"; first = false; }
            else os << (a < 0 ? " - " : " + ");
            if (i == 0 || mag != 1) os << mag.str();
            if (i > 0) {
                if (mag != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

inline BigInt poly_eval(const IntPoly& p, const BigInt& x) { return p.eval(x); }

/// The monic cubic -p(n - x).  An involution for fixed n.
inline IntPoly poly_reflect(const IntPoly& p, const BigInt& n) {
    if (p.degree() != 3) throw std::invalid_argument("poly_reflect: degree must be 3");
    return -p.compose_n_minus_x(n);
}

/// Discriminant of a monic cubic x^3 + ax^2 + bx + c:
///   18abc - 4a^3 c + a^2 b^2 - 4b^3 - 27c^2
inline BigInt cubic_discriminant(const IntPoly& p) {
    if (p.degree() != 3 || !p.is_monic())
        throw std::invalid_argument("cubic_discriminant: not a monic cubic");
    const BigInt& a = p[2];
    const BigInt& b = p[1];
    const BigInt& c = p[0];
    return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
}

/// Cauchy-style bound: all real roots of p lie in (-B, B).
inline BigInt root_bound(const IntPoly& p) {
    if (p.degree() < 1) return 1;
    BigInt lead = abs(p.coeffs().back());
    BigInt m = 0;
    for (int i = 0; i < p.degree(); i++) m = std::max(m, BigInt(abs(p[i])));
    return 1 + m / lead + 1; // integer ceiling slack
}

namespace detail {

// Largest integer x in [lo, hi] with p(x) <= 0, given p increasing on [lo, hi]
// and p(lo) <= 0.  Returns lo-1 semantics never occur by precondition.
inline BigInt bisect_last_nonpositive(const IntPoly& p, BigInt lo, BigInt hi) {
    while (lo < hi) {
        BigInt mid = lo + (hi - lo + 1) / 2;
        if (p.eval(mid) <= 0) lo = mid; else hi = mid - 1;
    }
    return lo;
}

} // namespace detail

/// Floors of the distinct real roots of p, ascending.  Exact: uses recursive
/// critical-point isolation and integer bisection, no floating point.
inline std::vector<BigInt> real_root_floors(const IntPoly& p) {
    if (p.degree() <= 0) return {};
    if (p.degree() == 1) {
        // floor(-c0/c1)
        BigInt c1 = p[1], c0 = p[0];
        BigInt q = -c0 / c1;
        // adjust to a true floor
        while (c1 > 0 ? p.eval(q) > 0 : p.eval(q) < 0) --q;
        while (c1 > 0 ? p.eval(BigInt(q + 1)) <= 0 : p.eval(BigInt(q + 1)) >= 0) ++q;
        return {q};
    }
    BigInt B = root_bound(p);
    std::vector<BigInt> breaks = real_root_floors(p.derivative());
    // monotone interval endpoints: -B, critical floors (and +1), B
    std::vector<BigInt> pts{-B};
    for (const auto& b : breaks) {
        pts.push_back(b);
        pts.push_back(b + 1);
    }
    pts.push_back(B);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<BigInt> roots;
    auto push_root = [&](const BigInt& r) {
        if (roots.empty() || roots.back() != r) roots.push_back(r);
    };
    for (size_t i = 0; i + 1 < pts.size(); i++) {
        BigInt lo = pts[i], hi = pts[i + 1];
        BigInt flo = p.eval(lo), fhi = p.eval(hi);
        if (flo == 0) push_root(lo);
        if (flo < 0 && fhi > 0) {
            // increasing crossing; p is monotone on [lo, hi] between critical floors,
            // except possibly inside a unit interval containing a critical point --
            // a sign change still brackets exactly one root there.
            push_root(detail::bisect_last_nonpositive(p, lo, hi));
        } else if (flo > 0 && fhi < 0) {
            IntPoly q = -p;
            push_root(detail::bisect_last_nonpositive(q, lo, hi));
        }
        if (i + 2 == pts.size() && fhi == 0) push_root(hi);
    }
    return roots;
}

/// All integers z with p(z) < 0, ascending.  Requires a positive leading
/// coefficient so the negativity set is bounded.
inline std::vector<BigInt> negative_integer_window(const IntPoly& p) {
    if (p.degree() < 1 || p.degree() % 2 != 0 || p.coeffs().back() <= 0)
        throw std::invalid_argument("negative_integer_window: need even degree and positive leading coefficient");
    std::vector<BigInt> floors = real_root_floors(p);
    std::vector<BigInt> out;
    for (size_t i = 0; i + 1 < floors.size(); i++) {
        // candidate negativity interval between consecutive roots
        for (BigInt z = floors[i]; z <= floors[i + 1] + 1; ++z)
            if (p.eval(z) < 0) out.push_back(z);
    }
    // an isolated tangency contributes nothing; dedup overlap between intervals
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace unitsum
