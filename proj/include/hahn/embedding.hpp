#pragma once

// The canonical embedding e : F -> C((t^Gamma)) of a truncation structure,
// computed by reading off leading terms: with g the unread remainder,
// gamma = v(g) and c = residue(g / tau^gamma), emit c t^gamma and continue
// with g - c tau^gamma. Emitted exponents strictly increase.
//
// Infinite expansions are cut off by a Budget.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hahn/checker.hpp"
#include "hahn/error.hpp"
#include "hahn/series.hpp"
#include "hahn/structure.hpp"

namespace hahn {

struct Budget {
    std::optional<std::size_t> max_terms;
    // Only terms with exponent below this bound are produced.
    std::optional<Exponent> exponent_bound;

    void validate() const
    {
        if (!max_terms && !exponent_bound)
            throw std::invalid_argument("embedding budget needs max_terms or an exponent bound");
    }
};

enum class EmbedStop {
    exhausted,    // the remainder became 0; the result is the whole image
    bound,        // no remainder below the exponent bound
    max_terms,    // the term budget ran out first
    undetermined, // the structure could not determine the next valuation
};

inline std::string stop_str(EmbedStop s)
{
    switch (s) {
    case EmbedStop::exhausted:
        return "exhausted";
    case EmbedStop::bound:
        return "bound";
    case EmbedStop::max_terms:
        return "max-terms";
    case EmbedStop::undetermined:
        return "undetermined";
    }
    return {};
}

struct EmbeddingResult {
    FiniteSeries series;
    bool exhausted = false;
    EmbedStop stop = EmbedStop::exhausted;
    // v of the unread remainder; nullopt when it could not be determined.
    std::optional<ExtendedExponent> residual_valuation;
    std::size_t terms_emitted = 0;

    // The result equals e(f) below the requested bound.
    bool complete() const { return stop == EmbedStop::exhausted || stop == EmbedStop::bound; }
};

template <ValuedFieldWithTruncation S>
EmbeddingResult embed(const S& s, const typename S::element_type& f, const Budget& budget)
{
    using E = typename S::element_type;
    budget.validate();
    const Group group = s.group();
    const Field field = s.field();

    std::vector<Term> terms;
    E rest = f;
    EmbeddingResult out{FiniteSeries::zero(group, field), false, EmbedStop::exhausted, std::nullopt, 0};

    const auto remainder_value = [&]() -> std::optional<ExtendedExponent> {
        try {
            return s.value(rest);
        } catch (const Undetermined&) {
            return std::nullopt;
        }
    };

    for (;;) {
        if (s.is_zero(rest)) {
            out.stop = EmbedStop::exhausted;
            out.residual_valuation = ExtendedExponent(Infinity{});
            break;
        }
        if (budget.exponent_bound && s.is_zero(s.trunc(rest, *budget.exponent_bound))) {
            out.stop = EmbedStop::bound;
            out.residual_valuation = remainder_value();
            break;
        }
        if (budget.max_terms && terms.size() >= *budget.max_terms) {
            out.stop = EmbedStop::max_terms;
            out.residual_valuation = remainder_value();
            break;
        }

        const auto v = remainder_value();
        if (!v) {
            out.stop = EmbedStop::undetermined;
            break;
        }
        const Exponent gamma = std::get<Exponent>(*v);
        if (!terms.empty() && !(terms.back().exponent < gamma))
            throw StructureViolation("embedding exponents not increasing: " + gamma.str() + " after " +
                                     terms.back().exponent.str());

        const E unit_part = s.mul(rest, s.inv(s.tau(gamma)));
        if (!(s.value(unit_part) == ExtendedExponent(Exponent::zero(group))))
            throw StructureViolation("f / tau^" + gamma.str() + " is not a unit for f = " + s.render(rest));
        const Coefficient c = s.residue(unit_part);
        if (c.is_zero())
            throw StructureViolation("zero residue at exponent " + gamma.str());

        rest = s.add(rest, s.neg(s.mul(s.constant(c), s.tau(gamma))));
        terms.push_back(Term{gamma, c});
    }

    out.terms_emitted = terms.size();
    out.exhausted = out.stop == EmbedStop::exhausted;
    out.series = FiniteSeries::from_canonical(group, field, std::move(terms));
    return out;
}

// Embeds f into the standard Hahn model and checks that it comes back
// unchanged and exhausted.
bool roundtrip_identity(const FiniteSeries& f);

namespace check_names {

inline const std::vector<std::string>& embedding()
{
    static const std::vector<std::string> names = {
        "embed-additive", "embed-multiplicative", "embed-trunc", "embed-valuation", "embed-tau", "embed-constants",
    };
    return names;
}

} // namespace check_names

// Checks that e is a truncation-preserving field embedding fixing C and
// sending tau^g to t^g. Comparisons are made below a per-tuple bound b; an
// instance whose embeddings ran out of terms before b is not counted.
template <TruncationStructure S>
CheckReport verify_embedding(const S& s, const SampleSet<typename S::element_type>& samples,
                             std::size_t max_terms = 256)
{
    using E = typename S::element_type;
    using detail::describe;
    enum { additive, multiplicative, trunc_clause, valuation, tau_clause, constants };

    return detail::run_tuples(s, samples, check_names::embedding(), [&s, max_terms](const detail::Tuple<S>& t,
                                                                                     detail::TupleLog& log) {
        const auto R = [&s](const E& x) { return s.render(x); };
        const Exponent unit = Exponent::unit(s.group());
        const Exponent b = t.beta + unit;
        const auto below = [&](const E& x, const Exponent& bound) {
            return embed(s, x, Budget{max_terms, bound});
        };
        const Json base{{"f", R(t.f)}, {"g", R(t.g)}, {"bound", b.str()}};

        detail::guarded(log, additive, base, [&] {
            const auto ef = below(t.f, b), eg = below(t.g, b), es = below(s.add(t.f, t.g), b);
            if (!ef.complete() || !eg.complete() || !es.complete())
                return;
            const FiniteSeries want = (ef.series + eg.series).truncate(b);
            const FiniteSeries got = es.series.truncate(b);
            log.expect(additive, got == want, [&] { return describe(base, want.str(), got.str()); });
        });

        detail::guarded(log, multiplicative, base, [&] {
            const E prod = s.mul(t.f, t.g);
            const auto ep = below(prod, b);
            if (!ep.complete())
                return;
            FiniteSeries want = FiniteSeries::zero(s.group(), s.field());
            if (!s.is_zero(t.f) && !s.is_zero(t.g)) {
                const Exponent vf = std::get<Exponent>(s.value(t.f));
                const Exponent vg = std::get<Exponent>(s.value(t.g));
                const auto ef = below(t.f, b - vg), eg = below(t.g, b - vf);
                if (!ef.complete() || !eg.complete())
                    return;
                want = (ef.series * eg.series).truncate(b);
            }
            const FiniteSeries got = ep.series.truncate(b);
            log.expect(multiplicative, got == want, [&] { return describe(base, want.str(), got.str()); });
        });

        detail::guarded(log, trunc_clause, base, [&] {
            Json in = base;
            in["alpha"] = t.alpha.str();
            const auto ef = below(t.f, b), ecut = below(s.trunc(t.f, t.alpha), b);
            if (!ef.complete() || !ecut.complete())
                return;
            const FiniteSeries want = ef.series.truncate(b).truncate(t.alpha);
            const FiniteSeries got = ecut.series.truncate(b);
            log.expect(trunc_clause, got == want, [&] { return describe(in, want.str(), got.str()); });
        });

        detail::guarded(log, valuation, base, [&] {
            const ExtendedExponent vf = s.value(t.f);
            const Exponent cut = is_infinite(vf) ? b : std::get<Exponent>(vf) + unit;
            const auto ef = below(t.f, cut);
            if (!ef.complete())
                return;
            log.expect(valuation, ef.series.valuation() == vf,
                       [&] { return describe(base, to_string(vf), to_string(ef.series.valuation())); });
        });

        for (const Exponent* gm : {&t.alpha, &t.gamma}) {
            Json in{{"gamma", gm->str()}};
            detail::guarded(log, tau_clause, in, [&] {
                const auto et = below(s.tau(*gm), *gm + 2L * unit);
                const FiniteSeries want = FiniteSeries::monomial(Coefficient::one(s.field()), *gm);
                log.expect(tau_clause, et.complete() && et.series == want,
                           [&] { return describe(in, want.str(), et.series.str()); });
            });
        }

        Json in{{"c", t.c.str()}};
        detail::guarded(log, constants, in, [&] {
            const auto ec = below(s.constant(t.c), unit);
            const FiniteSeries want = FiniteSeries::constant(t.c, s.group());
            log.expect(constants, ec.complete() && ec.series == want,
                       [&] { return describe(in, want.str(), ec.series.str()); });
        });
    });
}

} // namespace hahn
