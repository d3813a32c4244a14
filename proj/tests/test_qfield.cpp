#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dio/qfield.hpp"
#include "helpers.hpp"

using namespace dio;
using dio::testing::Gen;

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7).wire() == "0/1");
    CHECK(Rational(3, 1).wire() == "3/1");
    CHECK(Rational::parse("45396/42875") == Rational(45396, 42875));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational::parse("x"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("squarefree_part") {
    auto s = squarefree_part(BigInt(45396));
    CHECK(s.s == 1261);
    CHECK(s.f == 6);
    s = squarefree_part(BigInt(-200));
    CHECK(s.s == -2);
    CHECK(s.f == 10);
    s = squarefree_part(BigInt(9216));
    CHECK(s.s == 1);
    CHECK(s.f == 96);

    // s*f^2 = n, and s squarefree (re-factored) for draws below 10^6
    Gen gen(7);
    for (int i = 0; i < 200; ++i) {
        long n = gen.integer(-1000000, 1000000);
        if (n == 0) continue;
        auto sp = squarefree_part(BigInt(n));
        CHECK(sp.s * sp.f * sp.f == n);
        for (const auto& [p, e] : factorize(sp.s)) {
            (void)p;
            CHECK(e == 1);
        }
    }
}

TEST_CASE("factoring budget is honored") {
    FactorBudget tiny{100, 10};
    // a product of two 25-digit primes is far beyond 10 rho iterations
    BigInt p1("1000000000000000000000007");
    BigInt p2("1000000000000000000000049");
    CHECK_THROWS_AS(factorize(p1 * p2, tiny), DomainError);
    try {
        factorize(p1 * p2, tiny);
    } catch (const DomainError& e) {
        CHECK(e.kind() == Err::FactoringBudgetExceeded);
    }
}

TEST_CASE("field_from_radicand") {
    auto r = field_from_radicand(Rational(-200));
    CHECK(r.field.d() == -2);
    CHECK(r.scale == Rational(10));

    // scale^2 * d = rho, checked by multiplication
    r = field_from_radicand(Rational(45396, 42875));
    CHECK(r.field.d() == 44135);
    CHECK(r.scale * r.scale * Rational(r.field.d()) == Rational(45396, 42875));
    CHECK(r.scale == Rational(6, 1225));

    r = field_from_radicand(Rational(25, 81));
    CHECK(r.field.is_rational());
    CHECK(r.scale == Rational(5, 9));

    CHECK_THROWS_AS(field_from_radicand(Rational(0)), DomainError);

    Gen gen(11);
    for (int i = 0; i < 100; ++i) {
        Rational rho = gen.nonzero_rational(500, 500);
        auto fs = field_from_radicand(rho);
        CHECK(fs.scale * fs.scale * Rational(fs.field.d()) == rho);
    }
}

TEST_CASE("element arithmetic") {
    QuadField k{BigInt(2)};
    QuadElem x(k, Rational(1), Rational(1));  // 1 + sqrt(2)
    QuadElem y(k, Rational(1), Rational(-1)); // 1 - sqrt(2)
    CHECK(x * y == QuadElem(k, Rational(-1)));
    CHECK(x.norm() == Rational(-1));

    QuadField m2{BigInt(-2)};
    QuadElem a(m2, Rational(475, 561), Rational(12737, 22440));
    CHECK(a.norm() == Rational(475, 561) * Rational(475, 561) +
                          Rational(2) * Rational(12737, 22440) * Rational(12737, 22440));

    QuadElem t(m2, Rational(0), Rational(2, 5));
    CHECK(t * t == QuadElem(m2, Rational(-8, 25)));

    CHECK_THROWS_AS(x / QuadElem::zero(k), DomainError);
    QuadField k3{BigInt(3)};
    CHECK_THROWS_AS(x + QuadElem::one(k3), DomainError);
    try {
        x + QuadElem::one(k3);
    } catch (const DomainError& e) {
        CHECK(e.kind() == Err::FieldMismatch);
    }
}

TEST_CASE("sqrt_in_field examples") {
    QuadField k2{BigInt(2)};
    auto b = sqrt_in_field(QuadElem(k2, Rational(3), Rational(2)));
    REQUIRE(b.has_value());
    CHECK(*b == QuadElem(k2, Rational(1), Rational(1)));

    QuadField m2{BigInt(-2)};
    b = sqrt_in_field(QuadElem(m2, Rational(-1250)));
    REQUIRE(b.has_value());
    CHECK(*b == QuadElem(m2, Rational(0), Rational(25)));

    b = sqrt_in_field(QuadElem(m2, Rational(-289, 800)));
    REQUIRE(b.has_value());
    CHECK(*b == QuadElem(m2, Rational(0), Rational(17, 40)));

    CHECK_FALSE(sqrt_in_field(QuadElem(m2, Rational(3))).has_value());
    CHECK_FALSE(sqrt_in_field(QuadElem(m2, Rational(1), Rational(1))).has_value());
}

TEST_CASE("sqrt_in_field round trip on random squares") {
    Gen gen(13);
    for (int i = 0; i < 1000; ++i) {
        Rational x = gen.rational(50, 50);
        Rational sq = x * x;
        auto r = rat_sqrt(sq);
        REQUIRE(r.has_value());
        CHECK(*r * *r == sq);
    }
    for (const long d : {-1L, -2L, 2L, -3L, 5L, 44135L}) {
        QuadField k{BigInt(d)};
        for (int i = 0; i < 150; ++i) {
            QuadElem x = gen.elem(k, 30, 30);
            QuadElem sq = x * x;
            auto r = sqrt_in_field(sq);
            REQUIRE(r.has_value());
            CHECK(*r * *r == sq);
            // canonical sign
            CHECK((r->p().sign() > 0 || (r->p().is_zero() && r->q().sign() >= 0)));
        }
    }
}

TEST_CASE("sqrt_in_field agrees with brute force on small heights") {
    using dio::testing::brute_force_is_square_quad;
    using dio::testing::brute_force_is_square_rational;
    Gen gen(17);
    for (int i = 0; i < 60; ++i) {
        Rational x = gen.rational(12, 12);
        CHECK(rat_sqrt(x).has_value() == brute_force_is_square_rational(x, 15));
    }
    QuadField k{BigInt(-1)};
    for (int i = 0; i < 25; ++i) {
        QuadElem x = gen.elem(k, 4, 2);
        CHECK(sqrt_in_field(x).has_value() == brute_force_is_square_quad(x, 10));
    }
}

TEST_CASE("conjugation is an involutive ring homomorphism") {
    Gen gen(19);
    QuadField k{BigInt(-7)};
    for (int i = 0; i < 200; ++i) {
        QuadElem x = gen.elem(k, 40, 40);
        QuadElem y = gen.elem(k, 40, 40);
        CHECK(x.conj().conj() == x);
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK(QuadElem(k, x.norm()) == x * x.conj());
    }
}

TEST_CASE("square_class basics") {
    CHECK(square_class(Rational(45396, 42875)) == 44135);
    CHECK(square_class(Rational(-200)) == -2);
    CHECK(square_class(Rational(25, 81)) == 1);
}
