#pragma once

#include "unitsum/bigint.hpp"
#include "unitsum/intpoly.hpp"

#include <array>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace unitsum {

enum class FieldClass { cyclic, complex_cubic, totally_real_noncyclic };

inline const char* to_string(FieldClass c) {
    switch (c) {
        case FieldClass::cyclic: return "cyclic";
        case FieldClass::complex_cubic: return "complex";
        case FieldClass::totally_real_noncyclic: return "totally_real_noncyclic";
    }
    return "?";
}

/// Monic rational cubic or linear polynomial (for minimal polynomials).
struct RatPoly {
    std::vector<BigRational> c; // lowest degree first, monic

    int degree() const { return static_cast<int>(c.size()) - 1; }

    bool is_integral() const {
        for (const auto& q : c)
            if (!is_integer(q)) return false;
        return true;
    }

    /// Conversion to IntPoly; requires integral coefficients.
    IntPoly to_int_poly() const {
        std::vector<BigInt> out;
        out.reserve(c.size());
        for (const auto& q : c) {
            if (!is_integer(q)) throw std::domain_error("RatPoly: non-integral coefficient");
            out.push_back(num(q));
        }
        return IntPoly(std::move(out));
    }

    bool operator==(const RatPoly& o) const { return c == o.c; }
};

class CubicField;
using FieldPtr = std::shared_ptr<const CubicField>;

/// A cubic number field presented by a monic irreducible integer cubic.
/// The distinguished root of the defining polynomial is written omega;
/// elements carry exact rational coordinates in the power basis {1, w, w^2}.
class CubicField : public std::enable_shared_from_this<CubicField> {
public:
    static FieldPtr make(const IntPoly& p) {
        if (p.degree() != 3 || !p.is_monic())
            throw std::invalid_argument("CubicField: defining polynomial must be a monic cubic");
        if (has_rational_root(p))
            throw std::invalid_argument("CubicField: defining polynomial is reducible");
        BigInt d = cubic_discriminant(p);
        if (d == 0)
            throw std::invalid_argument("CubicField: defining polynomial has repeated roots");
        FieldClass cls;
        if (d < 0) cls = FieldClass::complex_cubic;
        else if (is_perfect_square(d)) cls = FieldClass::cyclic;
        else cls = FieldClass::totally_real_noncyclic;
        return FieldPtr(new CubicField(p, d, cls));
    }

    const IntPoly& defining_poly() const { return poly_; }
    const BigInt& disc_poly() const { return disc_; }
    FieldClass classification() const { return class_; }

    bool same_field(const CubicField& o) const { return poly_ == o.poly_; }

private:
    CubicField(IntPoly p, BigInt d, FieldClass c)
        : poly_(std::move(p)), disc_(std::move(d)), class_(c) {}

    // Rational-root test, sufficient for cubic irreducibility.  Monic, so any
    // rational root is an integer dividing the constant term.
    static bool has_rational_root(const IntPoly& p) {
        if (p[0] == 0) return true;
        for (const auto& d : signed_divisors(p[0]))
            if (p.eval(d) == 0) return true;
        return false;
    }

    IntPoly poly_;
    BigInt disc_;
    FieldClass class_;
};

inline FieldPtr make_field(const IntPoly& p) { return CubicField::make(p); }

class FieldElement {
public:
    FieldElement(FieldPtr field, BigRational c0, BigRational c1, BigRational c2)
        : field_(std::move(field)), c_{std::move(c0), std::move(c1), std::move(c2)} {
        if (!field_) throw std::invalid_argument("FieldElement: null field");
    }

    static FieldElement zero(const FieldPtr& f) { return FieldElement(f, 0, 0, 0); }
    static FieldElement one(const FieldPtr& f) { return FieldElement(f, 1, 0, 0); }
    static FieldElement rational(const FieldPtr& f, const BigRational& q) {
        return FieldElement(f, q, 0, 0);
    }
    static FieldElement omega(const FieldPtr& f) { return FieldElement(f, 0, 1, 0); }

    const FieldPtr& field() const { return field_; }
    const BigRational& c0() const { return c_[0]; }
    const BigRational& c1() const { return c_[1]; }
    const BigRational& c2() const { return c_[2]; }

    bool is_rational() const { return c_[1] == 0 && c_[2] == 0; }

    bool operator==(const FieldElement& o) const {
        return field_->same_field(*o.field_) && c_ == o.c_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement operator-() const { return FieldElement(field_, -c_[0], -c_[1], -c_[2]); }

    FieldElement operator+(const FieldElement& o) const {
        check_same(o);
        return FieldElement(field_, c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]);
    }

    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }

    FieldElement operator*(const FieldElement& o) const {
        check_same(o);
        // multiply as polynomials in w, then reduce w^3 and w^4 by the
        // defining relation w^3 = -a2 w^2 - a1 w - a0
        const IntPoly& f = field_->defining_poly();
        BigRational a2(f[2]), a1(f[1]), a0(f[0]);
        std::array<BigRational, 5> t{};
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++)
                t[i + j] += c_[i] * o.c_[j];
        // w^4 = -a2 w^3 - a1 w^2 - a0 w
        t[3] += -a2 * t[4];
        t[2] += -a1 * t[4];
        t[1] += -a0 * t[4];
        t[2] += -a2 * t[3];
        t[1] += -a1 * t[3];
        t[0] += -a0 * t[3];
        return FieldElement(field_, t[0], t[1], t[2]);
    }

    FieldElement operator*(const BigRational& s) const {
        return FieldElement(field_, c_[0] * s, c_[1] * s, c_[2] * s);
    }

    /// Characteristic polynomial of multiplication by this element (monic cubic).
    RatPoly char_poly() const {
        // multiplication matrix columns: x*1, x*w, x*w^2 in the power basis
        FieldElement xw = *this * omega(field_);
        FieldElement xw2 = xw * omega(field_);
        const std::array<std::array<BigRational, 3>, 3> m = {{
            {c_[0], xw.c_[0], xw2.c_[0]},
            {c_[1], xw.c_[1], xw2.c_[1]},
            {c_[2], xw.c_[2], xw2.c_[2]},
        }};
        BigRational tr = m[0][0] + m[1][1] + m[2][2];
        BigRational minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) +
                             (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                             (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
        BigRational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        return RatPoly{{-det, minors, -tr, 1}};
    }

    /// Monic minimal polynomial over Q: degree 1 for rationals, else the
    /// characteristic polynomial (degree 2 is impossible in a cubic field).
    RatPoly min_poly() const {
        if (is_rational()) return RatPoly{{-c_[0], 1}};
        return char_poly();
    }

    BigRational norm() const {
        RatPoly cp = char_poly();
        return -cp.c[0];
    }

    BigRational trace() const {
        RatPoly cp = char_poly();
        return -cp.c[2];
    }

    /// Algebraic integer of norm +-1: monic integral minimal polynomial with
    /// constant term +-1.
    bool is_unit() const {
        RatPoly mp = min_poly();
        if (!mp.is_integral()) return false;
        BigInt c0i = num(mp.c[0]);
        return c0i == 1 || c0i == -1;
    }

    /// Multiplicative inverse via minimal-polynomial rearrangement.
    std::optional<FieldElement> inverse() const {
        if (is_rational()) {
            if (c_[0] == 0) return std::nullopt;
            return rational(field_, BigRational(1) / c_[0]);
        }
        RatPoly mp = min_poly(); // x^3 + p2 x^2 + p1 x + p0 = 0
        const BigRational& p2 = mp.c[2];
        const BigRational& p1 = mp.c[1];
        const BigRational& p0 = mp.c[0];
        if (p0 == 0) return std::nullopt;
        // x^-1 = -(x^2 + p2 x + p1) / p0
        FieldElement x2 = *this * *this;
        FieldElement numr = x2 + (*this * p2) + rational(field_, p1);
        return numr * (BigRational(-1) / p0);
    }

    /// Exact evaluation of an integer polynomial at this element.
    static FieldElement eval_poly(const IntPoly& p, const FieldElement& x) {
        FieldElement acc = zero(x.field());
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            acc = acc * x + rational(x.field(), BigRational(*it));
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(" << to_decimal(c_[0]) << ", " << to_decimal(c_[1]) << ", " << to_decimal(c_[2]) << ")";
        return os.str();
    }

private:
    void check_same(const FieldElement& o) const {
        if (!field_->same_field(*o.field_))
            throw std::invalid_argument("FieldElement: field mismatch");
    }

    FieldPtr field_;
    std::array<BigRational, 3> c_;
};

inline FieldElement elem_add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement elem_sub(const FieldElement& a, const FieldElement& b) { return a - b; }
inline FieldElement elem_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline RatPoly elem_minpoly(const FieldElement& x) { return x.min_poly(); }
inline BigRational norm(const FieldElement& x) { return x.norm(); }
inline BigRational trace(const FieldElement& x) { return x.trace(); }
inline bool is_unit(const FieldElement& x) { return x.is_unit(); }

} // namespace unitsum
