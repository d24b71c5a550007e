#include <doctest.h>

#include "hahn/error.hpp"
#include "hahn/json_io.hpp"
#include "hahn/random.hpp"
#include "oracles.hpp"

using namespace hahn;

namespace {

const Group Q = Group::rationals();
const Group Z = Group::integers();
const Field QQ = Field::rationals();
const Field F5 = Field::prime(5);

FiniteSeries mono(long num, long den, const Exponent& e, const Field& f = QQ)
{
    return FiniteSeries::monomial(Coefficient::from_rational(mpq_class(num, den), f), e);
}

Exponent q(long n, long d = 1) { return Exponent::rational(n, d); }
Exponent z(long n) { return Exponent::integer(n); }

// 2t^-1 + 3 + 5t^(1/2)
FiniteSeries sample_f()
{
    return mono(2, 1, q(-1)) + mono(3, 1, q(0)) + mono(5, 1, q(1, 2));
}

// c0 + c1 t + c2 t^2 + ... over Z
FiniteSeries poly(std::initializer_list<long> cs, const Field& f = QQ)
{
    std::vector<Term> raw;
    long e = 0;
    for (long c : cs)
        raw.push_back(Term{z(e++), Coefficient::from_int(c, f)});
    return FiniteSeries::from_terms(Z, f, std::move(raw));
}

} // namespace

TEST_SUITE("series") {

TEST_CASE("canonical construction")
{
    const auto two = Coefficient::from_int(2, QQ), mtwo = Coefficient::from_int(-2, QQ);
    CHECK(FiniteSeries::from_terms(Z, QQ, {{z(1), two}, {z(1), mtwo}}).is_zero());
    const auto s = FiniteSeries::from_terms(Z, QQ, {{z(2), Coefficient::from_int(5, QQ)}, {z(0), Coefficient::one(QQ)}});
    REQUIRE(s.size() == 2);
    CHECK(s.terms()[0].exponent == z(0));
    CHECK(s.terms()[1].exponent == z(2));
    CHECK(FiniteSeries::from_terms(Z, QQ, {}).is_zero());
}

TEST_CASE("valuation, truncation and support")
{
    const FiniteSeries f = sample_f();
    CHECK(f.valuation() == ExtendedExponent(q(-1)));
    CHECK(FiniteSeries::zero(Q, QQ).valuation() == ExtendedExponent(Infinity{}));
    const Group L = Group::rational_lex(2);
    const auto lex = [](long a, long b) { return Exponent::lex({mpq_class(a), mpq_class(b)}); };
    CHECK((mono(1, 1, lex(0, 3)) + mono(1, 1, lex(1, 0))).valuation() == ExtendedExponent(lex(0, 3)));
    (void)L;

    CHECK(f.truncate(q(0)) == mono(2, 1, q(-1)));
    CHECK(f.truncate(q(-1)).is_zero());
    CHECK(f.truncate(q(7)) == f);
    CHECK((mono(1, 1, q(-1)) + mono(1, 1, q(2))).support() == std::vector<Exponent>{q(-1), q(2)});
    CHECK(FiniteSeries::zero(Q, QQ).support().empty());
    CHECK(mono(3, 1, q(1, 2)).support() == std::vector<Exponent>{q(1, 2)});
}

TEST_CASE("arithmetic examples")
{
    CHECK(poly({1, 1}) * poly({1, -1}) == poly({1, 0, -1}));
    CHECK(poly({2, 3}, F5) * poly({4, 1}, F5) == poly({3, 4, 3}, F5));
    // dense mod-5 oracle
    CHECK(oracle::convolve_mod({2, 3}, {4, 1}, 5) == std::vector<long>{3, 4, 3});
    CHECK((poly({1, 2, 3}) * FiniteSeries::zero(Z, QQ)).is_zero());
    CHECK(poly({0, 1, 1}) + poly({0, -1}) == poly({0, 0, 1}));
    const FiniteSeries f = poly({1, 0, 0, 1}), g = poly({0, 1, 0, -1});
    CHECK((f + g).truncate(z(2)) == f.truncate(z(2)) + g.truncate(z(2)));
    CHECK((f + g).truncate(z(2)) == poly({1, 1}));
    CHECK(poly({1, 2}).scale(Coefficient::zero(QQ)).is_zero());
}

TEST_CASE("leading term, gamma-term and monomials")
{
    CHECK((mono(2, 1, z(-1)) + mono(3, 1, z(0))).leading_term() == mono(2, 1, z(-1)));
    CHECK(FiniteSeries::zero(Z, QQ).leading_term().is_zero());
    CHECK(mono(7, 3, z(4)).leading_term() == mono(7, 3, z(4)));
    const FiniteSeries f = poly({1, 2, 3});
    CHECK(f.gamma_term(z(1)) == mono(2, 1, z(1)));
    CHECK(f.gamma_term(z(5)).is_zero());
    CHECK(f.truncate(z(2)).gamma_term(z(1)) == f.gamma_term(z(1)));
    CHECK(mono(3, 1, q(1, 2)).is_monomial());
    CHECK_FALSE(poly({1, 1}).is_monomial());
    CHECK_FALSE(FiniteSeries::zero(Z, QQ).is_monomial());
}

TEST_CASE("monomial inverse")
{
    CHECK(mono(2, 1, z(3)).invert_monomial() == mono(1, 2, z(-3)));
    CHECK(poly({1}).invert_monomial() == poly({1}));
    CHECK_THROWS_AS(poly({1, 1}).invert_monomial(), NotInvertible);
    CHECK_THROWS_AS(FiniteSeries::zero(Z, QQ).invert_monomial(), DivisionByZero);
}

TEST_CASE("rendering")
{
    CHECK(sample_f().str() == "2*t^(-1) + 3 + 5*t^(1/2)");
    CHECK(poly({1, 0, -1}).str() == "1 - t^2");
    CHECK(mono(1, 1, q(1)).str() == "t");
    CHECK(mono(-1, 1, q(2)).str() == "-t^2");
    CHECK(mono(1, 1, q(1, 2)).str() == "t^(1/2)");
    CHECK(FiniteSeries::monomial(Coefficient::one(QQ), Exponent::lex({mpq_class(1, 2), mpq_class(-3)})).str() ==
          "t^(1/2, -3)");
    CHECK(FiniteSeries::zero(Q, QQ).str() == "0");
    CHECK(poly({4, 3}, F5).str() == "4 + 3*t");
}

TEST_CASE("JSON round trip")
{
    const FiniteSeries f = sample_f();
    const Json j = to_json(f);
    CHECK(j.dump() == R"({"group":"q","coeff":"q","terms":[["-1","2"],["0","3"],["1/2","5"]]})");
    CHECK(series_from_json(j) == f);
    CHECK_THROWS(series_from_json(Json::parse(R"({"group":"q","coeff":"q","terms":[["1","2"],["0","3"]]})")));
    CHECK_THROWS(series_from_json(Json::parse(R"({"group":"q","coeff":"q","terms":[["0","0"]]})")));
    CHECK_THROWS(series_from_json(Json::parse(R"({"group":"z","coeff":"q","terms":[["1/2","1"]]})")));
    CHECK_THROWS(series_from_json(Json::parse(R"({"group":"q","terms":[]})")));
    for (const Group& g : {Z, Q, Group::rational_lex(2)})
        for (const Field& fld : {QQ, F5}) {
            SampleGen gen(g, fld, 3);
            for (int i = 0; i < 300; ++i) {
                const FiniteSeries s = gen.series(8);
                REQUIRE(series_from_json(Json::parse(to_json(s).dump())) == s);
            }
        }
}

TEST_CASE("truncation and ring laws on random samples")
{
    for (const Group& g : {Z, Q, Group::rational_lex(2)})
        for (const Field& fld : {QQ, F5}) {
            CAPTURE(g.selector());
            CAPTURE(fld.selector());
            SampleGen gen(g, fld, 17);
            for (int i = 0; i < 1000; ++i) {
                const FiniteSeries f = gen.series(6), h = gen.series(6), k = gen.series(6);
                const Exponent a = gen.exponent(), b = gen.exponent();
                const Coefficient c = gen.any_coefficient();
                // (T1) - (T4) in the carrier
                REQUIRE((f - f.truncate(a)).valuation() >= ExtendedExponent(a));
                if (f.valuation() >= ExtendedExponent(a))
                    REQUIRE(f.truncate(a).is_zero());
                if (a < b)
                    REQUIRE(f.truncate(a).truncate(b) == f.truncate(a));
                REQUIRE((f + h).truncate(a) == f.truncate(a) + h.truncate(a));
                REQUIRE(f.scale(c).truncate(a) == f.truncate(a).scale(c));
                // ring laws
                REQUIRE(f * h == h * f);
                REQUIRE((f * h) * k == f * (h * k));
                REQUIRE(f * (h + k) == f * h + f * k);
                REQUIRE(f - f == FiniteSeries::zero(g, fld));
                // valuation is a valuation
                if (!f.is_zero() && !h.is_zero())
                    REQUIRE((f * h).valuation() ==
                            ExtendedExponent(std::get<Exponent>(f.valuation()) + std::get<Exponent>(h.valuation())));
                REQUIRE((f + h).valuation() >= std::min(f.valuation(), h.valuation()));
                // support of a product lies in the sumset
                for (const auto& e : (f * h).support()) {
                    bool found = false;
                    for (const auto& x : f.support())
                        for (const auto& y : h.support())
                            found = found || x + y == e;
                    REQUIRE(found);
                }
            }
        }
}

}
