#include "unitsum/classifier.hpp"
#include "unitsum/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace unitsum;

TEST_CASE("candidate minimal-polynomial pairs have the published forms") {
    // n = 1, minus branch: x^3 - (a+3)x^2 + (a+4)x - 1 against x^3 + ax^2 - (a-1)x - 1
    auto p1 = minpoly_candidates_small_n(1, -5);
    CHECK(p1[0].f_eps == IntPoly::cubic(2, -1, -1));
    CHECK(p1[0].f_delta == IntPoly::cubic(-5, 6, -1));
    CHECK(p1[1].f_eps == IntPoly::cubic(2, -5, 1));
    CHECK(p1[1].f_delta == IntPoly::cubic(-5, 2, 1));

    auto p2 = minpoly_candidates_small_n(2, 4);
    CHECK(p2[0].f_eps == IntPoly::cubic(-10, 17, -1));
    CHECK(p2[0].f_delta == IntPoly::cubic(4, -11, -1));
    CHECK(p2[1].f_eps == IntPoly::cubic(-10, 15, 1));
    CHECK(p2[1].f_delta == IntPoly::cubic(4, -13, 1));

    CHECK_THROWS_AS(minpoly_candidates_small_n(3, 0), std::invalid_argument);

    // general branch: reflection ties the two polynomials together
    MinPolyPair g = minpoly_general(3, 1); // n = 3, n_delta = 1, n_eps = 2
    CHECK(g.f_eps == IntPoly::cubic(-5, 6, -1));
    CHECK(g.f_delta == IntPoly::cubic(-4, 3, 1));
    CHECK(poly_reflect(g.f_delta, 3) == g.f_eps);
}

TEST_CASE("closed-form discriminants match direct computation") {
    // spot value from the candidate analysis: n=1 minus, a=-5 gives 49
    CHECK(disc_formula(minpoly_candidates_small_n(1, -5)[0]) == 49);
    // n=1 plus is a perfect square for every a
    for (long a = -20; a <= 20; a++)
        CHECK(is_perfect_square(disc_formula(minpoly_candidates_small_n(1, a)[1])));
    std::mt19937 rng(123);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (int trial = 0; trial < 1000; trial++) {
        long a = dist(rng);
        // disc_formula itself throws if the closed form disagrees with the
        // direct cubic discriminant of either polynomial
        for (int n : {1, 2})
            for (const auto& pair : minpoly_candidates_small_n(n, a))
                CHECK_NOTHROW(disc_formula(pair));
        BigInt n = dist(rng), nd = dist(rng);
        if (n != 0) CHECK_NOTHROW(disc_formula(minpoly_general(n, nd)));
    }
}

TEST_CASE("cyclic candidate parameter sets") {
    auto cands = cyclic_a_candidates();
    CHECK(cands[CaseTag::n1_minus] == std::set<BigInt>{-5, 2});
    CHECK(cands[CaseTag::n1_plus].empty()); // infinite family branch
    CHECK(cands[CaseTag::n2_minus] == std::set<BigInt>{-10, -6, 0, 4});
    CHECK(cands[CaseTag::n2_plus] == std::set<BigInt>{-4, -2});
}

TEST_CASE("complex candidate parameter sets") {
    auto cands = complex_a_candidates();
    CHECK(cands[CaseTag::n1_minus] == std::set<BigInt>{-4, -3, -2, -1, 0, 1});
    CHECK(cands[CaseTag::n1_plus].empty());
    CHECK(cands[CaseTag::n2_minus] == std::set<BigInt>{-5, -4, -2, -1});
    CHECK(cands[CaseTag::n2_plus].empty());
}

TEST_CASE("candidate sets agree with brute force for |a| <= 30") {
    auto cyc = cyclic_a_candidates();
    auto cpx = complex_a_candidates();
    for (long a = -30; a <= 30; a++) {
        auto small_pairs_1 = minpoly_candidates_small_n(1, a);
        auto small_pairs_2 = minpoly_candidates_small_n(2, a);
        struct Branch {
            CaseTag tag;
            const MinPolyPair* pair;
        };
        Branch branches[] = {{CaseTag::n1_minus, &small_pairs_1[0]},
                             {CaseTag::n2_minus, &small_pairs_2[0]},
                             {CaseTag::n2_plus, &small_pairs_2[1]}};
        for (const auto& b : branches) {
            BigInt d = disc_formula(*b.pair);
            INFO("a = " << a << ", branch " << to_string(b.tag));
            // d == 0 is a degenerate (repeated-root) polynomial, not a field
            CHECK((d > 0 && static_cast<bool>(is_perfect_square(d))) ==
                  (cyc[b.tag].count(a) == 1));
            CHECK((d < 0) == (cpx[b.tag].count(a) == 1));
        }
    }
}

TEST_CASE("complex general-branch scan finds the published pairs plus diagonal") {
    std::set<std::pair<BigInt, BigInt>> got, off_diagonal;
    for (const auto& [U, V] : complex_uv_candidates(50)) {
        got.insert({U, V});
        if (V != -U) off_diagonal.insert({U, V});
        // direct check: the general-branch discriminant really is negative
        CHECK(disc_formula(minpoly_general(U, -V)) < 0);
    }
    std::set<std::pair<BigInt, BigInt>> expected(reference::complex_uv_pairs().begin(),
                                                 reference::complex_uv_pairs().end());
    CHECK(off_diagonal == expected);
    for (BigInt U = 1; U <= 50; ++U) CHECK(got.count({U, -U}) == 1);
}

TEST_CASE("realizing a candidate pair produces a verified solution") {
    MinPolyPair pair = minpoly_candidates_small_n(1, -5)[0];
    auto sols = realize_solution(pair);
    REQUIRE(sols.size() == 1);
    const auto& s = sols.front();
    CHECK(s.n == 1);
    CHECK(s.eps.is_unit());
    CHECK(s.delta.is_unit());
    CHECK(s.delta.min_poly().to_int_poly() == pair.f_delta);

    // realization inside a named field finds all conjugate copies
    auto K = make_field(reference::simplest_cubic_poly(-1));
    auto in_field = realize_in_field(pair, K);
    CHECK(in_field.size() == 3);

    // reducible f_eps realizes nothing (spurious candidate)
    MinPolyPair bogus{IntPoly::cubic(-3, 3, -1), IntPoly::cubic(0, 0, -1), 1,
                      CaseTag::general, 0};
    CHECK(realize_solution(bogus).empty());
}

TEST_CASE("solution equivalence under automorphisms, swap, and negation") {
    auto K = make_field(reference::simplest_cubic_poly(-1));
    auto auts = automorphism_images(K);
    REQUIRE(auts.size() == 3);

    FieldElement w = FieldElement::omega(K);
    FieldElement one = FieldElement::one(K);
    auto s = make_unit_solution(K, w, one - w, 1, Provenance::derived);
    auto swapped = make_unit_solution(K, one - w, w, 1, Provenance::derived);
    CHECK(solutions_equivalent(s, swapped, auts));

    // a conjugate image is equivalent
    FieldElement cw = apply_automorphism(w, auts[1]);
    auto conj = make_unit_solution(K, cw, one - cw, 1, Provenance::derived);
    CHECK(solutions_equivalent(s, conj, auts));

    // a different class with the same n is not
    auto other = make_unit_solution(K, w * w, one - w * w, 1, Provenance::derived);
    CHECK(!solutions_equivalent(s, other, auts));

    // negation applies only at n = 0
    auto z = make_unit_solution(K, w, -w, 0, Provenance::trivial);
    auto zn = make_unit_solution(K, -w, w, 0, Provenance::trivial);
    CHECK(solutions_equivalent(z, zn, auts));

    std::vector<UnitSolution> all{s, swapped, conj, other};
    CHECK(dedup_solutions(all, auts).size() == 2);
}

TEST_CASE("make_unit_solution rejects broken invariants") {
    auto K = make_field(reference::simplest_cubic_poly(-1));
    FieldElement w = FieldElement::omega(K);
    CHECK_THROWS_AS(
        make_unit_solution(K, w, w, 1, Provenance::derived), // sum is 2w, not 1
        std::logic_error);
    FieldElement nonunit = w + FieldElement::rational(K, 3); // minpoly constant -13
    CHECK_THROWS_AS(make_unit_solution(K, nonunit,
                                       FieldElement::rational(K, BigRational(1)) - nonunit, 1,
                                       Provenance::derived),
                    std::logic_error);
}

TEST_CASE("trivial-family detection") {
    // cyclic family: (-rho, rho + 1) sums to 1
    auto K = make_field(reference::simplest_cubic_poly(-1));
    FieldElement rho = FieldElement::omega(K);
    auto fam = make_unit_solution(K, -rho, rho + FieldElement::one(K), 1,
                                  Provenance::family_simplest_cubic, -1);
    CHECK(is_trivial_family_solution(fam));

    // the sporadic class (omega, 1 - omega) is NOT the family even though
    // omega's own minimal polynomial has the family shape
    auto spor = make_unit_solution(K, rho, FieldElement::one(K) - rho, 1, Provenance::sporadic);
    CHECK(!is_trivial_family_solution(spor));

    // complex family: (omega, a - omega) sums to a
    auto L = make_field(reference::la_family_poly(2));
    FieldElement w = FieldElement::omega(L);
    auto famc = make_unit_solution(L, w, FieldElement::rational(L, BigRational(2)) - w, 2,
                                   Provenance::family_la, 2);
    CHECK(is_trivial_family_solution(famc));

    // complex a = -1, normalized by negation to sum 1
    auto Lm = make_field(reference::la_family_poly(-1));
    FieldElement wm = FieldElement::omega(Lm);
    auto famm = make_unit_solution(Lm, -wm, wm + FieldElement::one(Lm), 1,
                                   Provenance::family_la, -1);
    CHECK(is_trivial_family_solution(famm));

    // an unrelated sporadic complex class is not flagged
    auto sporc = make_unit_solution(Lm, wm, FieldElement::one(Lm) - wm, 1, Provenance::sporadic);
    CHECK(!is_trivial_family_solution(sporc));
}

TEST_CASE("family membership detection over the named fields") {
    auto km1 = make_field(reference::simplest_cubic_poly(-1));
    CHECK(detect_simplest_cubic(km1) == std::vector<BigInt>{-1, 5, 12, 1259});
    auto k0 = make_field(reference::simplest_cubic_poly(0));
    CHECK(detect_simplest_cubic(k0) == std::vector<BigInt>{0, 3, 54});
    auto k1 = make_field(reference::simplest_cubic_poly(1));
    CHECK(detect_simplest_cubic(k1) == std::vector<BigInt>{1, 66});
    auto k2 = make_field(reference::simplest_cubic_poly(2));
    CHECK(detect_simplest_cubic(k2, 2500) == std::vector<BigInt>{2, 2389});

    auto l1 = make_field(reference::la_family_poly(1));
    CHECK(detect_La(l1) == std::vector<BigInt>{1, 67});
    auto lm1 = make_field(reference::la_family_poly(-1));
    CHECK(detect_La(lm1) == std::vector<BigInt>{-1});
    auto tribo = make_field(IntPoly::cubic(-1, -1, -1));
    CHECK(detect_La(tribo).empty());

    CHECK_THROWS_AS(detect_simplest_cubic(l1), std::invalid_argument);
    CHECK_THROWS_AS(detect_La(km1), std::invalid_argument);
}

TEST_CASE("unit-sum value sets for the named fields") {
    auto nk_values = [](const IntPoly& p) {
        auto rep = compute_nk(make_field(p));
        std::vector<BigInt> out;
        for (const auto& e : rep.entries) out.push_back(e.n);
        return out;
    };
    CHECK(nk_values(reference::simplest_cubic_poly(-1)) ==
          std::vector<BigInt>{1, 2, 3, 4, 5, 19, 22});
    CHECK(nk_values(reference::simplest_cubic_poly(0)) == std::vector<BigInt>{1, 2, 3});
    CHECK(nk_values(reference::simplest_cubic_poly(1)) == std::vector<BigInt>{1, 2, 5, 7});
    CHECK(nk_values(reference::la_family_poly(-1)) == std::vector<BigInt>{1, 2, 3, 4});
    CHECK(nk_values(reference::la_family_poly(1)) == std::vector<BigInt>{1, 2, 3, 67});
    CHECK(nk_values(reference::la_family_poly(5)) == std::vector<BigInt>{2, 5});
    CHECK(nk_values(IntPoly::cubic(-1, -1, -1)) == std::vector<BigInt>{2});
}

TEST_CASE("witnesses in every report verify and carry the right tags") {
    auto rep = compute_nk(make_field(reference::simplest_cubic_poly(-1)));
    CHECK(rep.complete);
    for (const auto& e : rep.entries) {
        REQUIRE(e.witness);
        CHECK(e.witness->eps.is_unit());
        CHECK(e.witness->delta.is_unit());
        CHECK(e.witness->eps + e.witness->delta ==
              FieldElement::rational(rep.field, BigRational(e.n)));
    }
    CHECK(rep.entries[0].tag == "family");  // 1
    CHECK(rep.entries[1].tag == "trivial"); // 2
    CHECK(rep.entries[2].tag == "sporadic");
}

TEST_CASE("fields outside the two classified shapes get partial reports") {
    // x^3 - 2: complex, but not an L_a member
    auto rep = compute_nk(make_field(IntPoly::cubic(0, 0, -2)));
    CHECK(rep.complete);
    CHECK(rep.la_aliases.empty());
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].n == 2);

    // totally real non-cyclic: explicit out-of-scope caveat
    auto rep2 = compute_nk(make_field(IntPoly::cubic(0, -4, 1)));
    CHECK(!rep2.complete);
    REQUIRE(!rep2.caveats.empty());
    CHECK(rep2.caveats.front().find("no classification") != std::string::npos);
}

TEST_CASE("solution classes for a given n") {
    // the disc -31 field at n = 3 has exactly one class: (w^2 + 1, -w^2 + 2)
    auto L = make_field(reference::la_family_poly(1));
    auto sols = enumerate_solutions(L, 3);
    REQUIRE(sols.size() == 1);
    FieldElement w = FieldElement::omega(L);
    auto expect = make_unit_solution(L, w * w + FieldElement::one(L),
                                     FieldElement::rational(L, BigRational(2)) - w * w, 3,
                                     Provenance::sporadic);
    CHECK(solutions_equivalent(sols.front(), expect, automorphism_images(L)));

    // n = 0 always has the descriptor class (1, -1)
    auto zero = enumerate_solutions(L, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero.front().eps.is_rational());

    // n = 2 always has (1, 1)
    auto two = enumerate_solutions(L, 2);
    bool has_trivial = false;
    for (const auto& s : two)
        has_trivial = has_trivial || (s.eps == FieldElement::one(L) &&
                                      s.delta == FieldElement::one(L));
    CHECK(has_trivial);

    // values outside N_K have no classes
    CHECK(enumerate_solutions(L, 5).empty());

    // K_-1 at n = 1: four family classes (one per alias) + three sporadic
    auto K = make_field(reference::simplest_cubic_poly(-1));
    CHECK(enumerate_solutions(K, 1).size() == 7);
    CHECK(enumerate_solutions(K, 19).size() == 1);
}

TEST_CASE("both isomorphism routes agree on the published family coincidence") {
    CHECK(iso_La_hoshi_miyake(1) == std::vector<BigInt>{1, 67});
    CHECK(iso_La_hoshi_miyake(-1) == std::vector<BigInt>{-1});
    auto l1 = make_field(reference::la_family_poly(1));
    CHECK(iso_La_hoshi_miyake(1) == detect_La(l1));
    CHECK_THROWS_AS(iso_La_hoshi_miyake(0), std::invalid_argument);
    CHECK_THROWS_AS(iso_La_hoshi_miyake(1001), std::invalid_argument);
}

TEST_CASE("full table verification passes") {
    auto ver = verify_tables();
    for (const auto& c : ver.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.ok);
    }
    CHECK(ver.all_ok);
    CHECK(ver.cyclic_classes == 17);
    CHECK(ver.complex_classes == 14);
}

TEST_CASE("negative control: a corrupted row is pinpointed") {
    auto rows = reference::cyclic_sporadic_rows();
    rows[3].e0 += 1; // break eps of the fourth row
    VerifyOptions opt;
    opt.cyclic_rows = &rows;
    auto ver = verify_tables(opt);
    CHECK(!ver.all_ok);
    bool row_flagged = false, classes_flagged = false;
    for (const auto& c : ver.checks) {
        if (c.name == "cyclic-sporadic-row-3" && !c.ok) row_flagged = true;
        if (c.name == "cyclic-class-regeneration" && !c.ok) classes_flagged = true;
        // unrelated rows stay green
        if (c.name == "cyclic-sporadic-row-2") CHECK(c.ok);
    }
    CHECK(row_flagged);
    CHECK(classes_flagged);
}

TEST_CASE("field spec parsing") {
    CHECK(parse_field_spec("1,-2,-1") == IntPoly::cubic(1, -2, -1));
    CHECK(parse_field_spec(" 1 , -2 , -1 ") == IntPoly::cubic(1, -2, -1));
    CHECK(parse_field_spec("x^3+x^2-2x-1") == IntPoly::cubic(1, -2, -1));
    CHECK(parse_field_spec("x^3 + x^2 - 2*x - 1") == IntPoly::cubic(1, -2, -1));
    CHECK(parse_field_spec("x^3-2") == IntPoly::cubic(0, 0, -2));
    CHECK(parse_field_spec("x^3 - 41*x^2 + 418*x - 1") == IntPoly::cubic(-41, 418, -1));
    CHECK_THROWS_AS(parse_field_spec(""), FieldSpecError);
    CHECK_THROWS_AS(parse_field_spec("1,-2"), FieldSpecError);
    CHECK_THROWS_AS(parse_field_spec("x^4-2"), FieldSpecError);
    CHECK_THROWS_AS(parse_field_spec("2x^3-1"), FieldSpecError);
    CHECK_THROWS_AS(parse_field_spec("hello"), FieldSpecError);
}

TEST_CASE("JSON serialization uses decimal strings and is deterministic") {
    auto rep = compute_nk(make_field(reference::simplest_cubic_poly(-1)));
    Json j = to_json(rep);
    CHECK(j["values"][5] == "19");
    CHECK(j["field"]["disc_poly"] == "49");
    CHECK(j["entries"][0]["witness"]["eps"].is_array());
    // byte-identical across runs
    auto rep2 = compute_nk(make_field(reference::simplest_cubic_poly(-1)));
    CHECK(to_json(rep2).dump() == j.dump());
}
