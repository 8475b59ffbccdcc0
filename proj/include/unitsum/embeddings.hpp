#pragma once

#include "unitsum/bigint.hpp"
#include "unitsum/cubic_field.hpp"
#include "unitsum/intpoly.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <vector>

namespace unitsum {

using Real = boost::multiprecision::mpfr_float; // variable precision

struct PrecisionConfig {
    unsigned start_bits = 128;
    unsigned cap_bits = 4096;
};

/// Thrown when the root-reconstruction precision schedule is exhausted.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Discriminant of a (not necessarily monic) cubic a x^3 + b x^2 + c x + d.
inline BigInt cubic_discriminant_general(const IntPoly& p) {
    if (p.degree() != 3) throw std::invalid_argument("cubic_discriminant_general: degree must be 3");
    const BigInt &a = p[3], &b = p[2], &c = p[1], &d = p[0];
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
}

namespace detail {

inline unsigned bits_to_digits(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 4;
}

struct PrecisionScope {
    unsigned saved;
    explicit PrecisionScope(unsigned bits) : saved(Real::default_precision()) {
        Real::default_precision(bits_to_digits(bits));
    }
    ~PrecisionScope() { Real::default_precision(saved); }
};

inline Real to_real(const BigInt& x) { return Real(x.str()); }

inline Real eval_real(const IntPoly& p, const Real& x) {
    Real acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * x + to_real(*it);
    return acc;
}

// One real root inside [lo, hi]; p(lo) and p(hi) must have opposite signs.
inline Real bisect_root(const IntPoly& p, Real lo, Real hi, unsigned bits) {
    Real vlo = eval_real(p, lo);
    if (vlo == 0) return lo;
    int slo = vlo < 0 ? -1 : 1;
    for (unsigned i = 0; i < bits + 8; i++) {
        Real mid = (lo + hi) / 2;
        Real v = eval_real(p, mid);
        if (v == 0) return mid;
        if ((v < 0 ? -1 : 1) == slo) lo = mid; else hi = mid;
    }
    return (lo + hi) / 2;
}

// Nearest integer to an mpfr value, exactly.
inline BigInt round_to_int(const Real& t) {
    Real r = round(t);
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, r.backend().data(), MPFR_RNDN);
    char* s = mpz_get_str(nullptr, 10, z);
    BigInt out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, std::strlen(s) + 1);
    mpz_clear(z);
    return out;
}

} // namespace detail

/// One complex root approximation; im == 0 for real roots.
struct ComplexApprox {
    Real re;
    Real im;
};

/// High-precision approximations of the three roots of a cubic.
struct EmbeddingSet {
    std::array<ComplexApprox, 3> roots; // real roots first
    int real_count = 0;
    unsigned precision_bits = 0;
};

/// Root approximations of a squarefree integer cubic at the given precision.
/// Real roots are isolated by bracketing between critical points; a complex
/// pair comes from deflation by the real root.
inline EmbeddingSet compute_embeddings(IntPoly p, unsigned bits) {
    if (p.degree() != 3) throw std::invalid_argument("compute_embeddings: cubic required");
    if (p.coeffs().back() < 0) p = -p;
    detail::PrecisionScope scope(bits);
    BigInt disc = cubic_discriminant_general(p);
    if (disc == 0) throw std::invalid_argument("compute_embeddings: repeated roots");
    EmbeddingSet es;
    es.precision_bits = bits;

    Real B = detail::to_real(root_bound(p));
    if (disc < 0) {
        Real r = detail::bisect_root(p, -B, B, bits);
        es.roots[0] = {r, Real(0)};
        es.real_count = 1;
        // p = lead (x - r)(x^2 + ...) ; quadratic factor lead*x^2 + Bq*x + Cq
        Real lead = detail::to_real(p[3]);
        Real Bq = detail::to_real(p[2]) + lead * r;
        Real Cq = -detail::to_real(p[0]) / r;
        Real disc_q = Bq * Bq - 4 * lead * Cq; // negative
        Real re = -Bq / (2 * lead);
        Real im = sqrt(-disc_q) / (2 * lead);
        es.roots[1] = {re, im};
        es.roots[2] = {re, -im};
    } else {
        // three distinct real roots, separated by the two critical points
        // of p: roots of 3a x^2 + 2b x + c
        Real a3 = 3 * detail::to_real(p[3]);
        Real b2 = 2 * detail::to_real(p[2]);
        Real c1 = detail::to_real(p[1]);
        Real dq = sqrt(b2 * b2 - 4 * a3 * c1);
        Real z1 = (-b2 - dq) / (2 * a3);
        Real z2 = (-b2 + dq) / (2 * a3);
        es.roots[0] = {detail::bisect_root(p, -B, z1, bits), Real(0)};
        es.roots[1] = {detail::bisect_root(p, z1, z2, bits), Real(0)};
        es.roots[2] = {detail::bisect_root(p, z2, B, bits), Real(0)};
        es.real_count = 3;
    }

    // symmetric-function self-check: sum of roots == -a2/a3
    Real sum = es.roots[0].re + es.roots[1].re + es.roots[2].re;
    Real expect = -detail::to_real(p[2]) / detail::to_real(p[3]);
    Real tol = pow(Real(2), -static_cast<int>(bits / 2));
    if (abs(sum - expect) > tol * (1 + abs(expect)))
        throw std::logic_error("compute_embeddings: symmetric-function check failed");
    return es;
}

namespace detail {

// Solve the 3x3 real linear system [M | rhs] by Gaussian elimination.
inline std::optional<std::array<Real, 3>> solve3(std::array<std::array<Real, 4>, 3> m) {
    for (int col = 0; col < 3; col++) {
        int piv = col;
        for (int r = col + 1; r < 3; r++)
            if (abs(m[r][col]) > abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0) return std::nullopt;
        std::swap(m[col], m[piv]);
        for (int r = 0; r < 3; r++) {
            if (r == col) continue;
            Real f = m[r][col] / m[col][col];
            for (int k = col; k < 4; k++) m[r][k] -= f * m[col][k];
        }
    }
    return std::array<Real, 3>{m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

inline bool has_rational_root(const IntPoly& q) {
    if (q.degree() < 1) return false;
    if (q[0] == 0) return true;
    for (const auto& d : signed_divisors(q[0]))
        for (const auto& l : signed_divisors(q.coeffs().back()))
            if (l > 0 && q.eval(BigRational(d, l)) == 0) return true;
    return false;
}

// One sweep of the pairing/rounding/verification procedure at a fixed
// precision.  Only exactly-verified roots are returned.  A precomputed
// embedding set for K may be supplied when sweeping many polynomials against
// the same field.
inline std::vector<FieldElement> roots_sweep(const IntPoly& q, const FieldPtr& K,
                                             const BigInt& scale, unsigned bits,
                                             const EmbeddingSet* ek_pre = nullptr) {
    PrecisionScope scope(bits);
    EmbeddingSet ek = ek_pre ? *ek_pre : compute_embeddings(K->defining_poly(), bits);
    EmbeddingSet ep = compute_embeddings(q, bits);
    bool k_complex = K->classification() == FieldClass::complex_cubic;
    std::vector<FieldElement> found;
    Real scale_r = to_real(scale);

    auto try_candidate = [&](const std::array<Real, 3>& c) {
        std::array<BigRational, 3> coord;
        for (int i = 0; i < 3; i++)
            coord[i] = BigRational(round_to_int(c[i] * scale_r), scale);
        FieldElement cand(K, coord[0], coord[1], coord[2]);
        if (FieldElement::eval_poly(q, cand) == FieldElement::zero(K)) {
            for (const auto& f : found)
                if (f == cand) return;
            found.push_back(cand);
        }
    };

    if (!k_complex) {
        // all-real case: try each injective assignment of the roots of q to
        // the three real embeddings of K
        for (int i0 = 0; i0 < 3; i0++)
            for (int i1 = 0; i1 < 3; i1++)
                for (int i2 = 0; i2 < 3; i2++) {
                    if (i0 == i1 || i0 == i2 || i1 == i2) continue;
                    std::array<int, 3> idx{i0, i1, i2};
                    std::array<std::array<Real, 4>, 3> m;
                    for (int i = 0; i < 3; i++) {
                        Real w = ek.roots[i].re;
                        m[i] = {Real(1), w, w * w, ep.roots[idx[i]].re};
                    }
                    if (auto c = solve3(m)) try_candidate(*c);
                }
    } else {
        // one real equation plus real/imaginary parts of the complex one; the
        // image of q's complex root may be either member of the conjugate
        // pair, so both pairings are tried
        Real w1 = ek.roots[0].re;
        Real wr = ek.roots[1].re, wi = ek.roots[1].im;
        for (int sign : {1, -1}) {
            std::array<std::array<Real, 4>, 3> m;
            m[0] = {Real(1), w1, w1 * w1, ep.roots[0].re};
            m[1] = {Real(1), wr, wr * wr - wi * wi, ep.roots[1].re};
            m[2] = {Real(0), wi, 2 * wr * wi, sign * ep.roots[1].im};
            if (auto c = solve3(m)) try_candidate(*c);
        }
    }
    return found;
}

inline bool same_element_set(const std::vector<FieldElement>& a,
                             const std::vector<FieldElement>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        bool hit = false;
        for (const auto& y : b)
            if (x == y) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

} // namespace detail

/// All roots of p lying in K, exact and complete for elements whose power-basis
/// denominators divide disc(defining_poly) (covers the full ring of integers,
/// since the index squared divides the discriminant).  Numeric roots of p are
/// paired with the embeddings of K, the power-basis coordinates solved for,
/// rounded against the discriminant denominator, and verified exactly.  The
/// precision schedule doubles from cfg.start_bits until the verified set is
/// stable across a doubling, up to cfg.cap_bits.
inline std::vector<FieldElement> roots_in_field(const IntPoly& p, const FieldPtr& K,
                                                PrecisionConfig cfg = {}) {
    if (p.is_zero()) throw std::invalid_argument("roots_in_field: zero polynomial");
    std::vector<FieldElement> out;
    auto push_unique = [&](const FieldElement& e) {
        for (const auto& o : out)
            if (o == e) return;
        out.push_back(e);
    };

    // rational roots first (p need not be monic)
    if (p[0] == 0) push_unique(FieldElement::zero(K));
    IntPoly q = p;
    while (q.degree() >= 1 && q[0] == 0) {
        std::vector<BigInt> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = IntPoly(std::move(shifted));
    }
    if (q.degree() >= 1) {
        for (const auto& d : signed_divisors(q[0] == 0 ? BigInt(1) : q[0]))
            for (const auto& l : signed_divisors(q.coeffs().back()))
                if (l > 0 && q.eval(BigRational(d, l)) == 0)
                    push_unique(FieldElement::rational(K, BigRational(d, l)));
    }

    // only irreducible cubics can contribute irrational roots inside a cubic
    // field (degree 2 subfields do not exist)
    if (q.degree() != 3 || detail::has_rational_root(q)) return out;

    BigInt disc_p = cubic_discriminant_general(q);
    if (disc_p == 0) return out;
    bool k_complex = K->classification() == FieldClass::complex_cubic;
    if ((disc_p < 0) != k_complex) return out; // signature mismatch: no roots

    BigInt scale = abs(K->disc_poly()) * abs(q.coeffs().back());
    unsigned bits = cfg.start_bits;
    std::vector<FieldElement> prev = detail::roots_sweep(q, K, scale, bits);
    while (true) {
        if (2 * bits > cfg.cap_bits) {
            // cap reached without stabilizing twice; the last sweep holds only
            // exactly-verified roots, but completeness is no longer assured
            throw PrecisionExhausted("roots_in_field: precision cap reached");
        }
        bits *= 2;
        std::vector<FieldElement> cur = detail::roots_sweep(q, K, scale, bits);
        if (detail::same_element_set(prev, cur)) {
            for (const auto& e : cur) push_unique(e);
            return out;
        }
        prev = std::move(cur);
    }
}

/// Galois orbit of x: size 1 for rationals, 3 on cyclic fields.  On fields with
/// trivial automorphism group the orbit is just {x}; `complete` is false there.
struct ConjugateSet {
    std::vector<FieldElement> elements;
    bool complete = true;
};

inline ConjugateSet galois_conjugates(const FieldElement& x, PrecisionConfig cfg = {}) {
    const FieldPtr& K = x.field();
    if (x.is_rational()) return {{x}, true};
    if (K->classification() != FieldClass::cyclic)
        return {{x}, false};
    // map omega to each root of the defining polynomial inside K
    std::vector<FieldElement> omegas = roots_in_field(K->defining_poly(), K, cfg);
    if (omegas.size() != 3)
        throw std::logic_error("galois_conjugates: cyclic field without 3 internal roots");
    ConjugateSet cs;
    for (const auto& w : omegas) {
        FieldElement img =
            FieldElement::rational(K, x.c0()) + w * x.c1() + (w * w) * x.c2();
        cs.elements.push_back(img);
    }
    return cs;
}

} // namespace unitsum
