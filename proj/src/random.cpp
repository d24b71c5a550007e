#include "hahn/random.hpp"

namespace hahn {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

mpq_class small_rational(SampleGen& gen, long spread)
{
    static constexpr long dens[] = {1, 1, 2, 3, 4};
    const long den = dens[gen.below(5)];
    return mpq_class(gen.in_range(-6 * spread * den, 6 * spread * den), den);
}

} // namespace

Exponent SampleGen::exponent(long spread)
{
    switch (group_.kind()) {
    case GroupKind::integer:
        return Exponent::integer(in_range(-4 * spread, 6 * spread));
    case GroupKind::rational: {
        return Exponent::rational(small_rational(*this, spread));
    }
    case GroupKind::rational_lex: {
        // Leading components from a small set so ties are common.
        std::vector<mpq_class> comps;
        for (std::size_t i = 0; i + 1 < group_.dimension(); ++i)
            comps.emplace_back(in_range(-1, 2));
        comps.push_back(small_rational(*this, spread));
        return Exponent::lex(std::move(comps));
    }
    }
    return Exponent::zero(group_);
}

Exponent SampleGen::positive_exponent()
{
    for (;;) {
        Exponent e = exponent();
        if (e.is_positive())
            return e;
        if (!e.is_zero())
            return -e;
    }
}

Coefficient SampleGen::coefficient()
{
    if (field_.kind() == FieldKind::prime)
        return Coefficient::mod_p(in_range(1, static_cast<long>(field_.modulus()) - 1), field_.modulus());
    long num = in_range(-9, 8);
    if (num >= 0)
        ++num;
    return Coefficient::rational(num, in_range(1, 5));
}

Coefficient SampleGen::any_coefficient()
{
    return chance(10) ? Coefficient::zero(field_) : coefficient();
}

FiniteSeries SampleGen::series(std::size_t max_terms, long spread)
{
    const std::size_t n = chance(5) ? 0 : 1 + below(max_terms);
    std::vector<Term> raw;
    raw.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        raw.push_back(Term{exponent(spread), coefficient()});
    return FiniteSeries::from_terms(group_, field_, std::move(raw));
}

} // namespace hahn
