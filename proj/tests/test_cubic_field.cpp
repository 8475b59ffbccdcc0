#include "unitsum/cubic_field.hpp"
#include "unitsum/embeddings.hpp"
#include "unitsum/tables.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace unitsum;

TEST_CASE("field construction and classification") {
    auto km1 = make_field(IntPoly::cubic(1, -2, -1));
    CHECK(km1->classification() == FieldClass::cyclic);
    CHECK(km1->disc_poly() == 49);

    auto lm1 = make_field(IntPoly::cubic(1, 0, -1));
    CHECK(lm1->classification() == FieldClass::complex_cubic);
    CHECK(lm1->disc_poly() == -23);

    auto cbrt2 = make_field(IntPoly::cubic(0, 0, -2));
    CHECK(cbrt2->classification() == FieldClass::complex_cubic);
    CHECK(cbrt2->disc_poly() == -108);

    auto real_noncyclic = make_field(IntPoly::cubic(0, -4, 1)); // disc 229, not square
    CHECK(real_noncyclic->classification() == FieldClass::totally_real_noncyclic);

    // reducible: x^3 - 3x + 2 = (x - 1)^2 (x + 2)
    CHECK_THROWS_AS(make_field(IntPoly::cubic(0, -3, 2)), std::invalid_argument);
    // not monic / not cubic
    CHECK_THROWS_AS(make_field(IntPoly{1, 1}), std::invalid_argument);
}

TEST_CASE("element arithmetic and minimal polynomials") {
    auto K = make_field(IntPoly::cubic(1, -2, -1));
    FieldElement w = FieldElement::omega(K);

    // omega's minimal polynomial is the defining polynomial
    RatPoly mp = w.min_poly();
    REQUIRE(mp.is_integral());
    CHECK(mp.to_int_poly() == K->defining_poly());

    // defining relation: w^3 = -w^2 + 2w + 1
    FieldElement w3 = w * w * w;
    CHECK(w3 == -(w * w) + w * BigRational(2) + FieldElement::one(K));

    FieldElement r = FieldElement::rational(K, BigRational(3, 2));
    CHECK(r.min_poly().degree() == 1);
    CHECK(r.norm() == BigRational(27, 8));
    CHECK(r.trace() == BigRational(9, 2));

    // trace of omega = -a2 = -1, norm = -a0 = 1
    CHECK(w.trace() == -1);
    CHECK(w.norm() == 1);
}

TEST_CASE("units and inverses") {
    auto K = make_field(IntPoly::cubic(1, -2, -1));
    FieldElement w = FieldElement::omega(K);
    CHECK(w.is_unit());
    CHECK((FieldElement::one(K) - w).is_unit());
    CHECK(!(w + FieldElement::rational(K, 3)).is_unit()); // minpoly constant -13
    CHECK(!FieldElement::rational(K, BigRational(1, 2)).is_unit());

    // inverse round-trips exactly
    auto inv = w.inverse();
    REQUIRE(inv);
    CHECK(w * *inv == FieldElement::one(K));
    CHECK(!FieldElement::zero(K).inverse());

    // a unit's inverse is an algebraic integer (itself a unit)
    CHECK(inv->is_unit());
}

TEST_CASE("norm is multiplicative over random elements") {
    auto K = make_field(IntPoly::cubic(-1, 0, -1));
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 0; trial < 100; trial++) {
        FieldElement a(K, coef(rng), coef(rng), coef(rng));
        FieldElement b(K, coef(rng), coef(rng), coef(rng));
        CHECK((a * b).norm() == a.norm() * b.norm());
        CHECK((a + b).trace() == a.trace() + b.trace());
    }
}

TEST_CASE("units are closed under product") {
    auto K = make_field(IntPoly::cubic(1, -2, -1));
    FieldElement w = FieldElement::omega(K);
    std::vector<FieldElement> units{w, FieldElement::one(K) - w, *w.inverse(),
                                    -w, w * w};
    for (const auto& u : units) {
        REQUIRE(u.is_unit());
        for (const auto& v : units) CHECK((u * v).is_unit());
    }
}

TEST_CASE("internal roots of the defining polynomial in a cyclic field") {
    auto K = make_field(IntPoly::cubic(1, -2, -1));
    auto roots = roots_in_field(K->defining_poly(), K);
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots)
        CHECK(FieldElement::eval_poly(K->defining_poly(), r) == FieldElement::zero(K));

    // the three conjugates of omega are omega, omega^2 - 2, -omega^2 - omega + 1
    FieldElement w = FieldElement::omega(K);
    std::vector<FieldElement> expected{w, w * w - FieldElement::rational(K, 2),
                                       -(w * w) - w + FieldElement::one(K)};
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& r : roots) found = found || r == e;
        CHECK(found);
    }
}

TEST_CASE("roots in complex and mismatched fields") {
    auto L = make_field(IntPoly::cubic(1, 0, -1));
    auto roots = roots_in_field(L->defining_poly(), L);
    REQUIRE(roots.size() == 1);
    CHECK(roots.front() == FieldElement::omega(L));

    // a cubic generating a different field has no roots here
    CHECK(roots_in_field(IntPoly::cubic(-1, 0, -1), L).empty());
    // signature mismatch: totally real cubic has no roots in a complex field
    CHECK(roots_in_field(IntPoly::cubic(1, -2, -1), L).empty());

    // rational roots are found exactly, including non-monic input
    auto rr = roots_in_field(IntPoly{-6, 1, 1}, L); // (x + 3)(x - 2)
    REQUIRE(rr.size() == 2);
}

TEST_CASE("roots of an equivalent presentation of the same complex field") {
    // x^3 - x - 1 generates the disc -23 field presented by x^3 + x^2 - 1
    auto L = make_field(IntPoly::cubic(1, 0, -1));
    auto roots = roots_in_field(IntPoly::cubic(0, -1, -1), L);
    REQUIRE(roots.size() == 1);
    CHECK(FieldElement::eval_poly(IntPoly::cubic(0, -1, -1), roots.front()) ==
          FieldElement::zero(L));
}

TEST_CASE("galois conjugates") {
    auto K = make_field(IntPoly::cubic(1, -2, -1));
    FieldElement w = FieldElement::omega(K);
    auto cs = galois_conjugates(w * w + FieldElement::one(K));
    CHECK(cs.complete);
    REQUIRE(cs.elements.size() == 3);
    // conjugates share norm and trace
    for (const auto& c : cs.elements) {
        CHECK(c.norm() == cs.elements.front().norm());
        CHECK(c.trace() == cs.elements.front().trace());
    }

    auto L = make_field(IntPoly::cubic(1, 0, -1));
    auto cl = galois_conjugates(FieldElement::omega(L));
    CHECK(!cl.complete);
    CHECK(cl.elements.size() == 1);

    auto rational = galois_conjugates(FieldElement::rational(K, BigRational(5)));
    CHECK(rational.complete);
    CHECK(rational.elements.size() == 1);
}

TEST_CASE("every embedded sporadic row verifies by exact arithmetic") {
    auto check_rows = [](const std::vector<reference::SporadicRow>& rows) {
        for (const auto& row : rows) {
            auto K = make_field(row.defining);
            CHECK(K->disc_poly() == row.field_disc);
            FieldElement w = FieldElement::omega(K);
            FieldElement w2 = w * w;
            FieldElement eps = FieldElement::rational(K, BigRational(row.e0)) +
                               w * BigRational(row.e1) + w2 * BigRational(row.e2);
            FieldElement delta = FieldElement::rational(K, BigRational(row.d0)) +
                                 w * BigRational(row.d1) + w2 * BigRational(row.d2);
            CHECK(eps.is_unit());
            CHECK(delta.is_unit());
            CHECK(eps + delta == FieldElement::rational(K, BigRational(row.n)));
        }
    };
    check_rows(reference::cyclic_sporadic_rows());
    check_rows(reference::complex_sporadic_rows());
    CHECK(reference::cyclic_sporadic_rows().size() == 17);
    CHECK(reference::complex_sporadic_rows().size() == 14);
}
