#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nbldpc/gf.hpp"

using nbldpc::Field;
using nbldpc::Symbol;

namespace {

// Reference multiplication straight from the definition: carry-less product
// of the coefficient polynomials, then reduction mod the field polynomial.
unsigned clmul(unsigned a, unsigned b) {
    unsigned r = 0;
    for (int i = 0; i < 8; ++i)
        if (b & (1u << i)) r ^= a << i;
    return r;
}

unsigned polymod(unsigned v, unsigned poly, int p) {
    for (int bit = 15; bit >= p; --bit)
        if (v & (1u << bit)) v ^= poly << (bit - p);
    return v;
}

}  // namespace

TEST_CASE("construction accepts exactly p in [1, 8]") {
    for (int p = 1; p <= 8; ++p) {
        Field f(p);
        CHECK(f.p() == p);
        CHECK(f.q() == (1 << p));
        CHECK(f.primitive_poly() == Field::primitive_poly_for(p));
    }
    CHECK_THROWS_AS(Field(0), std::invalid_argument);
    CHECK_THROWS_AS(Field(9), std::invalid_argument);
    CHECK_THROWS_AS(Field(-3), std::invalid_argument);
}

TEST_CASE("fixed primitive polynomials") {
    CHECK(Field::primitive_poly_for(2) == 0b111);
    CHECK(Field::primitive_poly_for(3) == 0b1011);
    CHECK(Field::primitive_poly_for(4) == 0b10011);
    CHECK(Field::primitive_poly_for(8) == 0b100011101);
}

TEST_CASE("GF(2) degenerates to XOR and AND") {
    Field f(1);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CHECK(f.add(a, b) == (a ^ b));
            CHECK(f.mul(a, b) == (a & b));
        }
    CHECK(f.inv(1) == 1);
}

TEST_CASE("hand-computed products") {
    // GF(16), x^4 + x + 1: x^3 * x = x^4 = x + 1
    CHECK(Field(4).mul(0b1000, 0b0010) == 0b0011);
    // GF(8), x^3 + x + 1: x^2 * x = x^3 = x + 1
    CHECK(Field(3).mul(0b100, 0b010) == 0b011);
    // GF(4) full table
    Field f2(2);
    CHECK(f2.mul(2, 2) == 3);
    CHECK(f2.mul(2, 3) == 1);
    CHECK(f2.mul(3, 3) == 2);
    // GF(8) inverse of x is x^2 + 1
    CHECK(Field(3).inv(2) == 5);
}

TEST_CASE("table multiplication matches polynomial arithmetic everywhere") {
    for (int p = 1; p <= 8; ++p) {
        Field f(p);
        const int q = f.q();
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                unsigned want = polymod(clmul(a, b), f.primitive_poly(), p);
                CHECK(f.mul(static_cast<Symbol>(a), static_cast<Symbol>(b)) == want);
            }
    }
}

TEST_CASE("field axioms, exhaustive for small q") {
    for (int p = 1; p <= 4; ++p) {
        Field f(p);
        const int q = f.q();
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, a) == 0);
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms, randomized for large q") {
    std::mt19937_64 rng(7);
    for (int p = 5; p <= 8; ++p) {
        Field f(p);
        const int q = f.q();
        for (int t = 0; t < 20000; ++t) {
            Symbol a = static_cast<Symbol>(rng() % q);
            Symbol b = static_cast<Symbol>(rng() % q);
            Symbol c = static_cast<Symbol>(rng() % q);
            REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            if (b != 0) REQUIRE(f.div(f.mul(a, b), b) == a);
        }
    }
}

TEST_CASE("division and inversion") {
    Field f(5);
    const int q = f.q();
    for (int a = 1; a < q; ++a) {
        CHECK(f.mul(a, f.inv(static_cast<Symbol>(a))) == 1);
        CHECK(f.div(0, static_cast<Symbol>(a)) == 0);
    }
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_AS(f.div(3, 0), std::domain_error);
}

TEST_CASE("multiplication by a nonzero constant permutes the field") {
    for (int p : {2, 3, 4, 6}) {
        Field f(p);
        const int q = f.q();
        for (int h = 1; h < q; ++h) {
            std::vector<bool> seen(q, false);
            for (int a = 0; a < q; ++a) {
                Symbol v = f.mul(static_cast<Symbol>(h), static_cast<Symbol>(a));
                CHECK(!seen[v]);
                seen[v] = true;
            }
        }
    }
}
