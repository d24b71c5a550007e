#include <doctest.h>

#include "hahn/error.hpp"
#include "hahn/random.hpp"

using namespace hahn;

namespace {

const Group groups[] = {Group::integers(), Group::rationals(), Group::rational_lex(2), Group::rational_lex(3)};

Exponent lex2(long a, long b) { return Exponent::lex({mpq_class(a), mpq_class(b)}); }

} // namespace

TEST_SUITE("exponent") {

TEST_CASE("arithmetic examples")
{
    CHECK(Exponent::rational(1, 3) + Exponent::rational(1, 6) == Exponent::rational(1, 2));
    CHECK(lex2(1, 2) + lex2(2, 3) == lex2(3, 5));
    const Exponent g = Exponent::rational(-7, 4);
    CHECK(g + Exponent::zero(Group::rationals()) == g);
    CHECK(Exponent::rational(2, 4) == Exponent::rational(1, 2));
    CHECK(Exponent::rational(2, 4).str() == "1/2");
}

TEST_CASE("lexicographic order")
{
    CHECK(lex2(0, 1000) < lex2(1, 0));
    CHECK(lex2(1, -5) < lex2(1, -4));
    CHECK(ExtendedExponent(lex2(5, 5)) < ExtendedExponent(Infinity{}));
    CHECK(ExtendedExponent(Exponent::integer(1000000)) < ExtendedExponent(Infinity{}));
    CHECK(to_string(ExtendedExponent(Infinity{})) == "inf");
}

TEST_CASE("mixed groups are rejected")
{
    CHECK_THROWS_AS(Exponent::integer(1) + Exponent::rational(1, 2), GroupMismatch);
    CHECK_THROWS_AS((void)(Exponent::integer(1) < Exponent::rational(1, 2)), GroupMismatch);
    CHECK_THROWS_AS(Exponent::integer(1) + lex2(0, 1), GroupMismatch);
}

TEST_CASE("parsing")
{
    CHECK(Exponent::parse("-3", Group::integers()) == Exponent::integer(-3));
    CHECK(Exponent::parse(" 5/2 ", Group::rationals()) == Exponent::rational(5, 2));
    CHECK(Exponent::parse("(1/2, -3)", Group::rational_lex(2)) ==
          Exponent::lex({mpq_class(1, 2), mpq_class(-3)}));
    CHECK(Exponent::lex({mpq_class(1, 2), mpq_class(-3)}).str() == "(1/2, -3)");
    CHECK_THROWS_AS(Exponent::parse("1/2", Group::integers()), ParseError);
    CHECK_THROWS_AS(Exponent::parse("1/0", Group::rationals()), ParseError);
    CHECK_THROWS_AS(Exponent::parse("(1, 2)", Group::rationals()), ParseError);
    CHECK_THROWS_AS(Exponent::parse("(1, 2, 3)", Group::rational_lex(2)), ParseError);
    CHECK_THROWS_AS(Exponent::parse("", Group::rationals()), ParseError);
    CHECK_THROWS_AS(Exponent::parse("1.5", Group::rationals()), ParseError);
    try {
        (void)Exponent::parse("(1, x)", Group::rational_lex(2));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("group selectors")
{
    for (const auto& g : groups)
        CHECK(Group::parse(g.selector()) == g);
    CHECK(Group::parse("qnlex:4").dimension() == 4);
    CHECK_THROWS(Group::parse("r"));
    CHECK_THROWS(Group::parse("qnlex:1"));
    CHECK_THROWS(Group::parse("qnlex:x"));
}

TEST_CASE("ordered group properties on random samples")
{
    for (const auto& g : groups) {
        CAPTURE(g.selector());
        SampleGen gen(g, Field::rationals(), 11);
        for (int i = 0; i < 1500; ++i) {
            const Exponent a = gen.exponent(), b = gen.exponent(), c = gen.exponent();
            // total order: exactly one of <, ==, >
            const int rel = (a < b) + (a == b) + (b < a);
            REQUIRE(rel == 1);
            if (a < b && b < c)
                REQUIRE(a < c);
            REQUIRE(a + b == b + a);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a + (-a) == Exponent::zero(g));
            if (a < b)
                REQUIRE(a + c < b + c);
            REQUIRE(Exponent::parse(a.str(), g) == a);
            REQUIRE(a - b == a + (-b));
        }
    }
}

}
