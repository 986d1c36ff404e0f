#include "resrec/poly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace resrec;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_deg, int max_abs) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
    std::vector<BigInt> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    return IntPoly(std::move(c));
}

const IntPoly kQuartic1{1, -4, -1, -4, 1};        // X^4 - 4X^3 - X^2 - 4X + 1
const IntPoly kQuartic2{1, 3, 6, 3, 1};           // X^4 + 3X^3 + 6X^2 + 3X + 1
const IntPoly kQuintic{-1, 5, -3, 3, -5, 1};      // (X-1) * quartic1, expanded

}  // namespace

TEST_CASE("poly_mul basics") {
    IntPoly one_minus_2y{1, -2};
    CHECK(one_minus_2y * IntPoly{1} == one_minus_2y);
    CHECK(IntPoly{0, 1} * IntPoly{0, 1} == IntPoly{0, 0, 1});
    // (1 - y)^2 expands with coefficients [1, -2, 1]
    IntPoly one_minus_y{1, -1};
    CHECK(one_minus_y * one_minus_y == IntPoly{1, -2, 1});
}

TEST_CASE("quintic equals (X-1) times the quartic") {
    CHECK(IntPoly{-1, 1} * kQuartic1 == kQuintic);
}

TEST_CASE("poly_mul degree and ring laws on random inputs") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        IntPoly a = random_poly(rng, 6, 5);
        IntPoly b = random_poly(rng, 6, 5);
        IntPoly c = random_poly(rng, 4, 5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("poly_primitive normal form") {
    CHECK(poly_primitive(IntPoly{0, -2, 4, -2}) == IntPoly{1, -2, 1});
    CHECK(poly_primitive(IntPoly{3}) == IntPoly{1});
    CHECK(poly_primitive(IntPoly{-1, 5, -3, 3, -5, 1}) == IntPoly{1, -5, 3, -3, 5, -1});
    CHECK_THROWS_WITH(poly_primitive(IntPoly::zero()), Catch::Matchers::ContainsSubstring("zero input"));

    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        IntPoly p = random_poly(rng, 8, 9);
        if (p.is_zero()) continue;
        IntPoly q = poly_primitive(p);
        CHECK(poly_primitive(q) == q);  // idempotent
        CHECK(q.coeffs().front() > 0);
        BigInt g = 0;
        for (const auto& v : q.coeffs()) g = gcd(g, v);
        CHECK(g == 1);
    }
}

TEST_CASE("poly_divexact and divisibility") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        IntPoly a = random_poly(rng, 5, 4);
        IntPoly b = random_poly(rng, 4, 4);
        if (b.is_zero()) continue;
        CHECK(poly_divexact(a * b, b) == a);
    }
    CHECK_THROWS_AS(poly_divexact(IntPoly{1, 1}, IntPoly{0, 0, 1}), error);
    CHECK(poly_divides(IntPoly{-1, 1} * kQuartic1, kQuintic));
    CHECK_FALSE(poly_divides(IntPoly{1, 1}, kQuintic));
}

TEST_CASE("poly_gcd on constructed common factors") {
    std::mt19937 rng(5150);
    for (int i = 0; i < 60; ++i) {
        IntPoly g = random_poly(rng, 3, 3);
        if (g.degree() < 1) continue;
        IntPoly a = random_poly(rng, 3, 3);
        IntPoly b = random_poly(rng, 3, 3);
        if (a.is_zero() || b.is_zero()) continue;
        IntPoly got = poly_gcd(a * g, b * g);
        CHECK(poly_divides(poly_primitive_monic_sign(g), got));
    }
}

TEST_CASE("squarefree decomposition") {
    // (X-1)^2 (X+2)
    IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1};
    auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == IntPoly{2, 1});
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == IntPoly{-1, 1});
    CHECK(parts[1].second == 2);

    // (X-1)^2 quartic1^2 quartic2: multiplicity-2 part (X-1)*quartic1, simple part quartic2
    IntPoly deg14 = IntPoly{-1, 1} * IntPoly{-1, 1} * kQuartic1 * kQuartic1 * kQuartic2;
    auto parts14 = squarefree_decomposition(deg14);
    REQUIRE(parts14.size() == 2);
    CHECK(parts14[0].first == kQuartic2);
    CHECK(parts14[0].second == 1);
    CHECK(parts14[1].first == kQuintic);
    CHECK(parts14[1].second == 2);

    auto square_free = squarefree_decomposition(kQuintic);
    REQUIRE(square_free.size() == 1);
    CHECK(square_free[0].second == 1);
    CHECK(square_free[0].first == kQuintic);
}

TEST_CASE("eval and derivative") {
    IntPoly p{-1, 5, -3, 3, -5, 1};
    CHECK(p.eval(BigInt(1)) == 0);
    CHECK(p.derivative() == IntPoly{5, -6, 9, -20, 5});
    CHECK(p.to_string() == "X^5 - 5X^4 + 3X^3 - 3X^2 + 5X - 1");
}

TEST_CASE("BigRat field behavior on random triples") {
    std::mt19937 rng(32100);
    std::uniform_int_distribution<int> d(-30, 30);
    auto rand_rat = [&]() {
        int den = 0;
        while (den == 0) den = d(rng);
        return make_rat(BigInt(d(rng)), BigInt(den));
    };
    for (int i = 0; i < 300; ++i) {
        BigRat a = rand_rat(), b = rand_rat(), c = rand_rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == 0);
        if (a != 0) CHECK(a * (BigRat(1) / a) == 1);
        // canonical form: positive denominator, reduced
        CHECK(denominator(a) > 0);
        CHECK(gcd(BigInt(abs(numerator(a))), BigInt(denominator(a))) == 1);
    }
    CHECK(to_decimal(make_rat(BigInt(-8), BigInt(7))) == "-8/7");
    CHECK(to_decimal(make_rat(BigInt(6), BigInt(-4))) == "-3/2");
    CHECK(to_decimal(make_rat(BigInt(0), BigInt(9))) == "0");
}
