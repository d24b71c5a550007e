#include <doctest.h>

#include "hahn/checker.hpp"
#include "hahn/models.hpp"

using namespace hahn;

namespace {

const Field QQ = Field::rationals();
const Field F5 = Field::prime(5);

Exponent q(long n, long d = 1) { return Exponent::rational(n, d); }

FiniteSeries mono(long c, const Exponent& e, const Field& f = QQ)
{
    return FiniteSeries::monomial(Coefficient::from_int(c, f), e);
}

bool failed(const CheckReport& r, const std::string& name)
{
    const CheckEntry* e = r.find(name);
    REQUIRE(e != nullptr);
    return e->status == Status::fail && e->counterexample.has_value();
}

} // namespace

TEST_SUITE("structure") {

TEST_CASE("derived operations in the standard model")
{
    const HahnModel s(Group::rationals(), QQ);
    const FiniteSeries f = mono(1, q(-1)) + mono(2, q(0)) + mono(1, q(3));
    CHECK(ops::sp(s, f) == std::vector<Exponent>{q(-1), q(0), q(3)});
    CHECK(ops::in_sp(s, f, q(0)));
    CHECK_FALSE(ops::in_sp(s, f, q(1)));
    CHECK(ops::leading_term(s, f) == mono(1, q(-1)));
    CHECK(ops::gamma_term(s, f, q(0)) == mono(2, q(0)));
    CHECK(ops::gamma_term(s, f, q(1)).is_zero());
    CHECK(ops::in_P(s, mono(3, q(1, 2))));
    CHECK_FALSE(ops::in_P(s, mono(1, q(0)) + mono(1, q(1))));
    CHECK_FALSE(ops::in_P(s, FiniteSeries::zero(Group::rationals(), QQ)));

    // decomposition into monomials: t^-1, 2, t^3
    const auto pts = ops::sp(s, f);
    FiniteSeries sum = FiniteSeries::zero(Group::rationals(), QQ);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const FiniteSeries upper = i + 1 < pts.size() ? s.trunc(f, pts[i + 1]) : f;
        const FiniteSeries part = upper - s.trunc(f, pts[i]);
        CHECK(ops::in_P(s, part));
        sum = sum + part;
    }
    CHECK(sum == f);
    CHECK(s.trunc(f, q(3)) - s.trunc(f, q(0)) == mono(2, q(0)));
}

TEST_CASE("term convolution example")
{
    const HahnModel s(Group::rationals(), QQ);
    const FiniteSeries f = mono(1, q(0)) + mono(1, q(1));
    const FiniteSeries prod = s.mul(f, f);
    const FiniteSeries lhs = ops::gamma_term(s, prod, q(1));
    const FiniteSeries rhs = s.mul(ops::gamma_term(s, f, q(0)), ops::gamma_term(s, f, q(1))) +
                             s.mul(ops::gamma_term(s, f, q(1)), ops::gamma_term(s, f, q(0)));
    CHECK(lhs == mono(2, q(1)));
    CHECK(rhs == lhs);
}

TEST_CASE("hahn-space witnesses")
{
    const HahnModel s(Group::rationals(), QQ);
    const FiniteSeries f = mono(2, q(1)) + mono(1, q(2));
    const FiniteSeries g = mono(3, q(1));
    const Coefficient c = s.residue(s.mul(f, s.inv(ops::leading_term(s, g))));
    CHECK(c == Coefficient::rational(2, 3));
    CHECK(f - g.scale(c) == mono(1, q(2)));
    CHECK(s.residue(s.mul(f, s.inv(ops::leading_term(s, f)))) == Coefficient::one(QQ));

    const HahnModel s5(Group::rationals(), F5);
    const FiniteSeries f5 = mono(3, q(1), F5), g5 = mono(1, q(1), F5);
    CHECK(s5.residue(s5.mul(f5, s5.inv(ops::leading_term(s5, g5)))) == Coefficient::from_int(3, F5));
}

TEST_CASE("conforming models pass every check")
{
    for (const Group& g : {Group::integers(), Group::rationals(), Group::rational_lex(2)})
        for (const Field& f : {QQ, F5}) {
            CAPTURE(g.selector());
            CAPTURE(f.selector());
            const HahnModel s(g, f);
            const CheckReport r = check_all(s, make_series_samples(g, f, 120, 5));
            CHECK(r.all_passed());
            for (const auto& e : r.entries) {
                CAPTURE(e.name);
                CHECK(e.instances > 0);
            }
        }
    const TwistedModel tw(QQ);
    CHECK(check_all(tw, make_series_samples(tw.group(), QQ, 120, 5)).all_passed());
}

TEST_CASE("mutant counterexamples, verified by hand")
{
    const Group G = Group::rationals();
    const HahnModel le(G, QQ, Mutation::le_trunc);
    // f = tau^a: v(f) = a >= a, yet f|_a keeps the term.
    const Exponent a = q(1, 2);
    const FiniteSeries ta = le.tau(a);
    CHECK(le.value(ta) >= ExtendedExponent(a));
    CHECK(le.trunc(ta, a) == ta);
    CHECK_FALSE(le.trunc(ta, a).is_zero());
    CHECK(failed(check_axioms(le, make_series_samples(G, QQ, 50, 1)), "T2"));

    const HahnModel hom(G, QQ, Mutation::bad_tau_hom);
    CHECK(hom.tau(q(0)) == mono(2, q(0)));
    CHECK(hom.mul(hom.tau(q(0)), hom.tau(q(0))) == mono(4, q(0)));
    CHECK(failed(check_axioms(hom, make_series_samples(G, QQ, 50, 1)), "T7"));

    const HahnModel spm(G, QQ, Mutation::bad_tau_sp);
    CHECK(ops::sp(spm, spm.tau(q(0))) == std::vector<Exponent>{q(0), q(1)});
    CHECK(failed(check_axioms(spm, make_series_samples(G, QQ, 50, 1)), "T8"));

    const HahnModel na(G, QQ, Mutation::nonadditive_trunc);
    const FiniteSeries one = mono(1, q(0)), t = mono(1, q(1));
    // (1 + t)|_2 = 1 + t + t^2, but 1|_2 + t|_2 = 1 + t.
    CHECK(na.trunc(one + t, q(2)) == one + t + mono(1, q(2)));
    CHECK(na.trunc(one, q(2)) + na.trunc(t, q(2)) == one + t);
    CHECK(failed(check_axioms(na, make_series_samples(G, QQ, 50, 1)), "T4"));
}

TEST_CASE("reports are deterministic and counterexamples replay")
{
    const Group G = Group::rationals();
    const HahnModel hom(G, QQ, Mutation::bad_tau_hom);
    const auto samples = make_series_samples(G, QQ, 80, 9);
    const CheckReport a = check_all(hom, samples);
    const CheckReport b = check_all(hom, samples);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.to_text() == b.to_text());

    const CheckEntry* t7 = a.find("T7");
    REQUIRE(t7->counterexample);
    const Json& d = t7->counterexample->detail;
    const Exponent alpha = Exponent::parse(d["alpha"].get<std::string>(), G);
    const Exponent beta = Exponent::parse(d["beta"].get<std::string>(), G);
    CHECK_FALSE(hom.tau(alpha + beta) == hom.mul(hom.tau(alpha), hom.tau(beta)));
    CHECK(d["observed"].get<std::string>() == hom.mul(hom.tau(alpha), hom.tau(beta)).str());

    const Json j = a.to_json();
    CHECK(j["model"] == "mutant:bad-tau-hom");
    CHECK(j["passed"] == false);
    CHECK(j["checks"].size() == a.entries.size());
}

TEST_CASE("exceptions inside a structure become failures")
{
    // residue throws for negative valuations; a model whose inv always
    // throws must still produce a report.
    struct Broken : HahnModel {
        using HahnModel::HahnModel;
        FiniteSeries inv(const FiniteSeries&) const { throw std::runtime_error("no inverses here"); }
        bool concurrent_safe() const { return false; }
    };
    const Broken s(Group::integers(), QQ);
    const CheckReport r = check_all(s, make_series_samples(Group::integers(), QQ, 30, 2));
    CHECK_FALSE(r.all_passed());
    const CheckEntry* e = r.find("monomial-group");
    REQUIRE(e->counterexample);
    CHECK(e->counterexample->detail["error"] == "no inverses here");
    CHECK(r.find("T1")->status == Status::pass);
}

TEST_CASE("serial and parallel runs agree")
{
    struct Sequential : HahnModel {
        using HahnModel::HahnModel;
        bool concurrent_safe() const { return false; }
    };
    const Group G = Group::rational_lex(2);
    const auto samples = make_series_samples(G, F5, 60, 13);
    const Sequential seq(G, F5, Mutation::nonadditive_trunc);
    const HahnModel par(G, F5, Mutation::nonadditive_trunc);
    CHECK(check_all(seq, samples).to_json().dump() == check_all(par, samples).to_json().dump());
}

}
