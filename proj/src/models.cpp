#include "hahn/models.hpp"

#include "hahn/error.hpp"
#include "hahn/random.hpp"

namespace hahn {

std::string mutation_selector(Mutation m)
{
    switch (m) {
    case Mutation::none:
        return "hahn";
    case Mutation::le_trunc:
        return "mutant:le-trunc";
    case Mutation::bad_tau_hom:
        return "mutant:bad-tau-hom";
    case Mutation::bad_tau_sp:
        return "mutant:bad-tau-sp";
    case Mutation::nonadditive_trunc:
        return "mutant:nonadditive-trunc";
    }
    return {};
}

bool is_twisted_selector(std::string_view selector)
{
    return selector == "twisted";
}

Mutation parse_mutation(std::string_view selector)
{
    for (Mutation m : {Mutation::none, Mutation::le_trunc, Mutation::bad_tau_hom, Mutation::bad_tau_sp,
                       Mutation::nonadditive_trunc})
        if (selector == mutation_selector(m))
            return m;
    throw std::invalid_argument("unknown model '" + std::string(selector) +
                                "' (expected hahn, twisted, mutant:le-trunc, mutant:bad-tau-hom, "
                                "mutant:bad-tau-sp or mutant:nonadditive-trunc)");
}

HahnModel::HahnModel(Group group, Field field, Mutation mutation)
    : group_(group), field_(field), mutation_(mutation)
{
}

std::string HahnModel::name() const
{
    return mutation_selector(mutation_);
}

Coefficient HahnModel::residue(const FiniteSeries& f) const
{
    const Exponent zero = Exponent::zero(group_);
    if (f.valuation() < ExtendedExponent(zero))
        throw std::domain_error("residue of " + f.str() + ", which has negative valuation");
    return f.coefficient(zero);
}

FiniteSeries HahnModel::special_input() const
{
    return constant(Coefficient::one(field_)) +
           FiniteSeries::monomial(Coefficient::one(field_), Exponent::unit(group_));
}

FiniteSeries HahnModel::trunc(const FiniteSeries& f, const Exponent& alpha) const
{
    switch (mutation_) {
    case Mutation::le_trunc: {
        std::vector<Term> kept;
        for (const auto& t : f.terms())
            if (t.exponent <= alpha)
                kept.push_back(t);
        return FiniteSeries::from_canonical(group_, field_, std::move(kept));
    }
    case Mutation::nonadditive_trunc:
        if (alpha.is_positive() && f == special_input())
            return f.truncate(alpha) + FiniteSeries::monomial(Coefficient::one(field_), alpha);
        return f.truncate(alpha);
    default:
        return f.truncate(alpha);
    }
}

FiniteSeries HahnModel::tau(const Exponent& gamma) const
{
    require_same_group(group_, gamma.group());
    const Coefficient one = Coefficient::one(field_);
    switch (mutation_) {
    case Mutation::bad_tau_hom:
        return FiniteSeries::monomial(Coefficient::from_int(2, field_), gamma);
    case Mutation::bad_tau_sp:
        return FiniteSeries::monomial(one, gamma) + FiniteSeries::monomial(one, gamma + Exponent::unit(group_));
    default:
        return FiniteSeries::monomial(one, gamma);
    }
}

TwistedModel::TwistedModel(Field field, Coefficient base)
    : base_model_(Group::integers(), field), base_(std::move(base))
{
    require_same_field(field, base_.field());
    if (base_.is_zero())
        throw std::invalid_argument("twist base must be a unit");
}

FiniteSeries TwistedModel::tau(const Exponent& gamma) const
{
    require_same_group(Group::integers(), gamma.group());
    return FiniteSeries::monomial(base_.pow(gamma.scalar().get_num().get_si()), gamma);
}

GridModel::GridModel(Group group, Field field, std::size_t search_points)
    : group_(group), field_(field), search_points_(search_points)
{
    if (!group_.archimedean())
        throw UnsupportedGroup("grid model needs an archimedean group");
}

GridSeries GridModel::constant(const Coefficient& c) const
{
    return GridSeries::from_finite(FiniteSeries::constant(c, group_));
}

ExtendedExponent GridModel::value(const GridSeries& f) const
{
    if (auto lead = f.leading_exponent(search_points_))
        return *lead;
    if (f.generators().empty())
        return Infinity{};
    throw Undetermined("valuation not found within " + std::to_string(search_points_) + " grid points");
}

Coefficient GridModel::residue(const GridSeries& f) const
{
    const Exponent zero = Exponent::zero(group_);
    if (!f.truncate_below(zero).is_zero())
        throw std::domain_error("residue of an element with negative valuation");
    return f.coeff_at(zero);
}

GridSeries GridModel::trunc(const GridSeries& f, const Exponent& alpha) const
{
    return GridSeries::from_finite(f.truncate_below(alpha));
}

GridSeries GridModel::tau(const Exponent& gamma) const
{
    return GridSeries::from_finite(FiniteSeries::monomial(Coefficient::one(field_), gamma));
}

std::string GridModel::render(const GridSeries& f) const
{
    const Exponent bound = f.shift() + 10L * Exponent::unit(group_);
    return f.truncate_below(bound).str() + " (truncated below " + bound.str() + ")";
}

SampleSet<FiniteSeries> make_series_samples(const Group& group, const Field& field, std::size_t count,
                                            std::uint64_t seed, std::size_t max_terms)
{
    SampleGen gen(group, field, seed);
    const Coefficient one = Coefficient::one(field);
    const FiniteSeries t = FiniteSeries::monomial(one, Exponent::unit(group));
    const FiniteSeries c1 = FiniteSeries::constant(one, group);

    SampleSet<FiniteSeries> s;
    s.seed = seed;
    s.elements = {FiniteSeries::zero(group, field), c1, t, c1 + t};
    while (s.elements.size() < count)
        s.elements.push_back(gen.series(max_terms));

    s.probes.push_back(Exponent::zero(group));
    for (int i = 0; i < 64; ++i)
        s.probes.push_back(gen.exponent());

    s.constants = {Coefficient::zero(field), one, -one};
    for (int i = 0; i < 16; ++i)
        s.constants.push_back(gen.coefficient());
    return s;
}

} // namespace hahn
