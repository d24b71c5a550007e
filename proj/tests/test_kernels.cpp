#include <doctest.h>

#include "hahn/kernels.hpp"
#include "hahn/random.hpp"
#include "oracles.hpp"

using namespace hahn;

namespace {

oracle::Sparse to_sparse(const FiniteSeries& f)
{
    oracle::Sparse out;
    for (const auto& t : f.terms())
        out[t.exponent.scalar()] = t.coeff.as_rational();
    return out;
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("serial product matches the sparse oracle")
{
    SampleGen gen(Group::rationals(), Field::rationals(), 23);
    for (int i = 0; i < 400; ++i) {
        const FiniteSeries a = gen.series(12, 3), b = gen.series(12, 3);
        REQUIRE(to_sparse(kernels::multiply_serial(a, b)) == oracle::multiply(to_sparse(a), to_sparse(b)));
    }
}

TEST_CASE("parallel product equals the serial reference")
{
    for (const Group& g : {Group::integers(), Group::rationals(), Group::rational_lex(2)})
        for (const Field& f : {Field::rationals(), Field::prime(5)}) {
            CAPTURE(g.selector());
            CAPTURE(f.selector());
            SampleGen gen(g, f, 29);
            for (int i = 0; i < 12; ++i) {
                const FiniteSeries a = gen.series(150, 20), b = gen.series(150, 20);
                REQUIRE(kernels::multiply_parallel(a, b) == kernels::multiply_serial(a, b));
            }
            // below the threshold as well
            for (int i = 0; i < 200; ++i) {
                const FiniteSeries a = gen.series(6), b = gen.series(6);
                REQUIRE(kernels::multiply_parallel(a, b) == kernels::multiply_serial(a, b));
            }
        }
}

TEST_CASE("dense mod-5 convolution oracle")
{
    SampleGen gen(Group::integers(), Field::prime(5), 31);
    for (int i = 0; i < 300; ++i) {
        std::vector<long> da(1 + gen.below(40)), db(1 + gen.below(40));
        std::vector<Term> ta, tb;
        for (std::size_t k = 0; k < da.size(); ++k) {
            da[k] = static_cast<long>(gen.below(5));
            ta.push_back(Term{Exponent::integer(static_cast<long>(k)), Coefficient::mod_p(da[k], 5)});
        }
        for (std::size_t k = 0; k < db.size(); ++k) {
            db[k] = static_cast<long>(gen.below(5));
            tb.push_back(Term{Exponent::integer(static_cast<long>(k)), Coefficient::mod_p(db[k], 5)});
        }
        const auto a = FiniteSeries::from_terms(Group::integers(), Field::prime(5), ta);
        const auto b = FiniteSeries::from_terms(Group::integers(), Field::prime(5), tb);
        const auto want = oracle::convolve_mod(da, db, 5);
        const FiniteSeries got = kernels::multiply_parallel(a, b);
        for (std::size_t k = 0; k < want.size(); ++k)
            REQUIRE(got.coefficient(Exponent::integer(static_cast<long>(k))).as_mod_p().value == want[k]);
        REQUIRE(got == kernels::multiply_serial(a, b));
    }
}

TEST_CASE("merge_add cancels and stays sorted")
{
    SampleGen gen(Group::rationals(), Field::rationals(), 37);
    for (int i = 0; i < 500; ++i) {
        const FiniteSeries a = gen.series(10), b = gen.series(10);
        const auto merged = kernels::merge_add(a.terms(), b.terms());
        oracle::Sparse want = to_sparse(a);
        for (const auto& [e, c] : to_sparse(b))
            want[e] += c;
        std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
        REQUIRE(to_sparse(FiniteSeries::from_canonical(a.group(), a.field(), merged)) == want);
        for (std::size_t k = 1; k < merged.size(); ++k)
            REQUIRE(merged[k - 1].exponent < merged[k].exponent);
        REQUIRE(kernels::merge_add(a.terms(), (-a).terms()).empty());
    }
}

}
