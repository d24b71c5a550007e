#include <doctest.h>

#include "hahn/error.hpp"
#include "hahn/random.hpp"
#include "oracles.hpp"

using namespace hahn;

TEST_SUITE("coefficient") {

TEST_CASE("rational examples")
{
    CHECK(Coefficient::rational(2, 3) * Coefficient::rational(9, 4) == Coefficient::rational(3, 2));
    CHECK(Coefficient::one(Field::rationals()).inverse() == Coefficient::one(Field::rationals()));
    CHECK(Coefficient::rational(-6, 4).str() == "-3/2");
    CHECK_THROWS_AS(Coefficient::zero(Field::rationals()).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Coefficient::rational(1, 2) / Coefficient::zero(Field::rationals()), DivisionByZero);
}

TEST_CASE("GF(5) against the extended Euclid oracle")
{
    const Field f5 = Field::prime(5);
    CHECK(Coefficient::from_int(3, f5) * Coefficient::from_int(4, f5) == Coefficient::from_int(2, f5));
    CHECK(Coefficient::from_int(2, f5).inverse() == Coefficient::from_int(3, f5));
    CHECK(oracle::inverse_mod(2, 5) == 3);
    for (long a = 1; a < 5; ++a)
        CHECK(Coefficient::from_int(a, f5).inverse() == Coefficient::from_int(oracle::inverse_mod(a, 5), f5));

    for (std::uint32_t p : {2u, 3u, 7u, 97u, 65537u, 2147483647u}) {
        const Field fp = Field::prime(p);
        for (long a : {1L, 2L, 3L, 12345L, 99991L}) {
            const long r = a % static_cast<long>(p);
            if (r == 0)
                continue;
            CAPTURE(p);
            CAPTURE(a);
            CHECK(Coefficient::from_int(a, fp).inverse().as_mod_p().value ==
                  static_cast<std::uint32_t>(oracle::inverse_mod(a, static_cast<long>(p))));
        }
    }
}

TEST_CASE("field selectors and validation")
{
    CHECK(Field::parse("q") == Field::rationals());
    CHECK(Field::parse("gf:5") == Field::prime(5));
    CHECK(Field::prime(5).selector() == "gf:5");
    CHECK_THROWS(Field::parse("gf:4"));
    CHECK_THROWS(Field::parse("gf:1"));
    CHECK_THROWS(Field::parse("gf:"));
    CHECK_THROWS(Field::parse("r"));
    CHECK_THROWS_AS(Coefficient::one(Field::prime(5)) + Coefficient::one(Field::prime(7)), FieldMismatch);
    CHECK_THROWS_AS(Coefficient::one(Field::prime(5)) + Coefficient::one(Field::rationals()), FieldMismatch);
    CHECK(Coefficient::parse("3/2", Field::prime(5)) == Coefficient::from_int(4, Field::prime(5)));
    CHECK_THROWS_AS(Coefficient::parse("1/5", Field::prime(5)), DivisionByZero);
    CHECK(Coefficient::parse("-7", Field::prime(5)).str() == "3");
}

TEST_CASE("field axioms on random samples")
{
    for (const Field& f : {Field::rationals(), Field::prime(5), Field::prime(101)}) {
        CAPTURE(f.selector());
        SampleGen gen(Group::rationals(), f, 5);
        const Coefficient zero = Coefficient::zero(f), one = Coefficient::one(f);
        for (int i = 0; i < 1500; ++i) {
            const Coefficient a = gen.any_coefficient(), b = gen.any_coefficient(), c = gen.any_coefficient();
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + zero == a);
            REQUIRE(a * one == a);
            REQUIRE(a + (-a) == zero);
            REQUIRE(a - b == a + (-b));
            if (!a.is_zero()) {
                REQUIRE(a * a.inverse() == one);
                REQUIRE(a.inverse().inverse() == a);
                REQUIRE((b / a) * a == b);
            }
            REQUIRE(Coefficient::parse(a.str(), f) == a);
        }
    }
}

TEST_CASE("powers")
{
    const Coefficient two = Coefficient::rational(2, 1);
    CHECK(two.pow(10) == Coefficient::rational(1024, 1));
    CHECK(two.pow(-3) == Coefficient::rational(1, 8));
    CHECK(two.pow(0) == Coefficient::one(Field::rationals()));
    const Field f5 = Field::prime(5);
    CHECK(Coefficient::from_int(2, f5).pow(4) == Coefficient::one(f5));
    CHECK(Coefficient::from_int(2, f5).pow(-1) == Coefficient::from_int(3, f5));
}

}
