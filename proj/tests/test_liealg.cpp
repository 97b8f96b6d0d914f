#include "solint/liealg.hpp"

#include <doctest.h>

using namespace solint;

namespace {
GenIndex B(int l, int i, int k) { return GenIndex{Family::B, l, i, k}; }

Expansion expansionOf(std::initializer_list<std::pair<GenIndex, Rat>> items) {
    Expansion e;
    for (const auto& [g, c] : items) e.add(g, c);
    return e;
}
}  // namespace

TEST_CASE("grade") {
    CHECK(grade(B(1, 0, 0)) == 0);
    CHECK(grade(B(-1, 1, 0)) == 1);
    CHECK(grade(B(6, 8, 3)) == 14);
    CHECK(grade(B(2, 5, 2)) == 9);
}

TEST_CASE("published bracket [B^3_5,0, B^4_4,0]") {
    Expansion e = bracketInBasis(B(3, 5, 0), B(4, 4, 0));
    Expansion expect = expansionOf({
        {B(-1, 1, 4), Rat(256, 297297)},
        {B(1, 3, 3), Rat(-512, 42471)},
        {B(3, 5, 2), Rat(416, 3927)},
        {B(5, 7, 1), Rat(-1312, 1881)},
        {B(7, 9, 0), Rat(10, 3)},
    });
    CHECK(e == expect);
}

TEST_CASE("antisymmetry and cache") {
    Expansion ab = bracketInBasis(B(2, 3, 1), B(3, 2, 0));
    Expansion ba = bracketInBasis(B(3, 2, 0), B(2, 3, 1));
    CHECK(ab == -ba);
    CHECK(bracketInBasis(B(2, 3, 1), B(2, 3, 1)).empty());
}

TEST_CASE("closedness and graded additivity") {
    for (int n1 = 0; n1 <= 3; ++n1)
        for (int n2 = 0; n2 <= 3; ++n2)
            for (const auto& a : bGeneratorsOfGrade(n1))
                for (const auto& b : bGeneratorsOfGrade(n2)) {
                    Expansion e = bracketInBasis(a, b);
                    CHECK(e.supportedOnFamily(Family::B));
                    for (const auto& [g, c] : e.coeffs()) CHECK(g.grade() == n1 + n2);
                }
}

TEST_CASE("special brackets match the oracle") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& b : bGeneratorsOfGrade(n)) {
            // [B^0_{0,0}, B^l_{i,k}] = (l-i) B^l_{i,k}
            Expansion s0 = specialBracket(B(0, 0, 0), b);
            Expansion expect0;
            expect0.add(b, Rat(b.l - b.i));
            CHECK(s0 == expect0);
            // [B^1_{0,0}, B^l_{i,k}] = (l-2i-1) B^{l+1}_{i,k}
            Expansion s1 = specialBracket(B(1, 0, 0), b);
            Expansion expect1;
            if (b.l - 2 * b.i - 1 != 0) expect1.add(B(b.l + 1, b.i, b.k), Rat(b.l - 2 * b.i - 1));
            CHECK(s1 == expect1);
            // [B^-1_{0,0}, B^l_{i,k}] = (l+1) B^{l-1}_{i,k}
            Expansion sm = specialBracket(B(-1, 0, 0), b);
            Expansion expectm;
            if (b.l + 1 != 0) expectm.add(B(b.l - 1, b.i, b.k), Rat(b.l + 1));
            CHECK(sm == expectm);
            if (n <= 4) {
                CHECK(s0 == bracketInBasis(B(0, 0, 0), b));
                CHECK(s1 == bracketInBasis(B(1, 0, 0), b));
                CHECK(sm == bracketInBasis(B(-1, 0, 0), b));
            }
        }
    CHECK(specialBracket(B(-1, 2, 0), B(2, 2, 1)) == bracketInBasis(B(-1, 2, 0), B(2, 2, 1)));
    CHECK_THROWS_AS(specialBracket(B(2, 2, 0), B(1, 1, 0)), std::invalid_argument);
}

TEST_CASE("vanishing special cases") {
    for (int i = 0; i <= 4; ++i)
        for (int k = 0; k <= 2; ++k) {
            CHECK(specialBracket(B(1, 0, 0), B(2 * i + 1, i, k)).empty());
            CHECK(specialBracket(B(-1, 0, 0), B(-1, i, k)).empty());
        }
}

TEST_CASE("Jacobi identity on basis triples") {
    auto jac = [](const GenIndex& a, const GenIndex& b, const GenIndex& c) {
        VField A = makeGenerator(a), Bf = makeGenerator(b), C = makeGenerator(c);
        VField j = lieBracket(A, lieBracket(Bf, C)) + lieBracket(Bf, lieBracket(C, A)) +
                   lieBracket(C, lieBracket(A, Bf));
        return j.isZero();
    };
    CHECK(jac(B(1, 0, 0), B(-1, 2, 0), B(3, 2, 1)));
    CHECK(jac(B(0, 0, 0), B(2, 1, 0), B(-1, 3, 0)));
    CHECK(jac(B(5, 3, 0), B(-1, 1, 1), B(1, 1, 0)));
    CHECK(jac(B(2, 2, 0), B(3, 3, 0), B(-1, 0, 1)));
    CHECK(jac(B(7, 4, 0), B(-1, 2, 0), B(1, 2, 0)));   // total grade 8
    CHECK(jac(B(3, 2, 1), B(0, 0, 1), B(-1, 0, 1)));   // total grade 8
}

TEST_CASE("closed-form structure constants agree with the oracle") {
    int fallbacks = 0, total = 0;
    for (int n1 = 0; n1 <= 3; ++n1)
        for (int n2 = 0; n2 <= 3; ++n2)
            for (const auto& a : bGeneratorsOfGrade(n1))
                for (const auto& b : bGeneratorsOfGrade(n2)) {
                    ClosedBracket cb = structureConstantsClosed(a, b);
                    ++total;
                    if (cb.usedFallback) ++fallbacks;
                    CHECK(cb.value == bracketInBasis(a, b));
                }
    CHECK(total > 0);
    // the closed form must actually cover the q1, q2 >= 0 pairs
    CHECK(fallbacks < total);
    ClosedBracket direct = structureConstantsClosed(B(3, 5, 0), B(4, 4, 0));
    CHECK(!direct.usedFallback);
}

TEST_CASE("closed form reproduces the published brackets") {
    auto check = [](const GenIndex& a, const GenIndex& b) {
        ClosedBracket cb = structureConstantsClosed(a, b);
        CHECK(!cb.usedFallback);
        CHECK(cb.value == bracketInBasis(a, b));
    };
    check(B(6, 8, 3), B(2, 5, 2));
    check(B(7, 6, 1), B(3, 4, 1));
    check(B(7, 5, 6), B(6, 7, 8));
    check(B(3, 5, 0), B(4, 4, 0));
}
