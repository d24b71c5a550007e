// Serial vs OpenMP timings for series multiplication and the structure checker.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>

#include "hahn/checker.hpp"
#include "hahn/kernels.hpp"
#include "hahn/models.hpp"
#include "hahn/random.hpp"

using namespace hahn;

namespace {

struct SequentialModel : HahnModel {
    using HahnModel::HahnModel;
    bool concurrent_safe() const { return false; }
};

template <class F>
double best_of(int reps, F&& f)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

FiniteSeries dense(const Group& g, const Field& f, std::size_t n, std::uint64_t seed)
{
    SampleGen gen(g, f, seed);
    std::vector<Term> terms;
    for (std::size_t k = 0; k < n; ++k)
        terms.push_back(Term{Exponent::rational(static_cast<long>(k) * 3 + static_cast<long>(gen.below(3)), 2),
                             gen.coefficient()});
    return FiniteSeries::from_canonical(g, f, std::move(terms));
}

} // namespace

int main(int argc, char** argv)
{
    int reps = 3;
    std::size_t samples = 400;
    std::vector<std::size_t> sizes = {64, 256, 1024};
    CLI::App app{"kernel benchmark"};
    app.add_option("--reps", reps, "repetitions per measurement (best is reported)");
    app.add_option("--samples", samples, "checker samples");
    app.add_option("--sizes", sizes, "term counts for the multiply benchmark");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads available: %d\n\n", kernels::max_threads());
    std::printf("%-28s %10s %12s %12s %8s\n", "multiply", "terms", "serial s", "parallel s", "speedup");
    for (const Field& f : {Field::rationals(), Field::prime(5)})
        for (std::size_t n : sizes) {
            const FiniteSeries a = dense(Group::rationals(), f, n, 1), b = dense(Group::rationals(), f, n, 2);
            FiniteSeries ps = FiniteSeries::zero(a.group(), f), pp = ps;
            const double ts = best_of(reps, [&] { ps = kernels::multiply_serial(a, b); });
            const double tp = best_of(reps, [&] { pp = kernels::multiply_parallel(a, b); });
            if (!(ps == pp)) {
                std::fprintf(stderr, "serial and parallel products differ\n");
                return 1;
            }
            std::printf("%-28s %10zu %12.4f %12.4f %8.2f\n", ("q x " + f.selector()).c_str(), n, ts, tp, ts / tp);
        }

    std::printf("\n%-28s %10s %12s %12s %8s\n", "check_all", "samples", "serial s", "parallel s", "speedup");
    for (const Group& g : {Group::integers(), Group::rationals(), Group::rational_lex(2)}) {
        const Field f = Field::rationals();
        const auto set = make_series_samples(g, f, samples, 7);
        CheckReport rs, rp;
        const double ts = best_of(reps, [&] { rs = check_all(SequentialModel(g, f), set); });
        const double tp = best_of(reps, [&] { rp = check_all(HahnModel(g, f), set); });
        if (rs.to_json() != rp.to_json()) {
            std::fprintf(stderr, "serial and parallel reports differ\n");
            return 1;
        }
        std::printf("%-28s %10zu %12.4f %12.4f %8.2f\n", ("hahn " + g.selector()).c_str(), samples, ts, tp, ts / tp);
    }
    return 0;
}
