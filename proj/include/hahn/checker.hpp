#pragma once

// Property-based checker for truncation structures.
//
// Every sample element f is paired with a second element g, a constant c and
// a set of exponent probes derived from f and g (0, the sp points, their
// pairwise sums, points just beyond them, and a few random probes). Each
// check evaluates its statement on those inputs and records the first
// failing instance. Failures and exceptions never abort the run.
//
// Tuples are independent: tuple i only reads its own RNG stream
// derive_seed(seed, i), so a report is identical whether the tuples run in
// parallel (when the structure declares concurrent_safe()) or serially.

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "hahn/random.hpp"
#include "hahn/report.hpp"
#include "hahn/structure.hpp"

namespace hahn {

namespace check_names {

inline const std::vector<std::string>& axioms()
{
    static const std::vector<std::string> names = {"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8"};
    return names;
}

inline const std::vector<std::string>& lemmas()
{
    static const std::vector<std::string> names = {
        "trunc-asymptotic",         "trunc-compose",        "valuation-min-sp",     "sp-of-trunc",
        "sp-of-sum",                "sp-of-tail",           "tail-valuation-in-sp", "trunc-at-sp-point",
        "monomial-decomposition",   "finite-sp-sums",       "monomial-sum-closure", "monomial-proportional",
        "monomial-group",           "monomial-shifts-sp",   "sp-of-product",        "term-convolution",
        "leading-term",             "gamma-term-valuation", "gamma-term-remainder", "gamma-term-unique",
        "gamma-term-trunc",         "gamma-term-linear",    "gamma-term-injective",
    };
    return names;
}

inline const std::vector<std::string>& hahn_space()
{
    static const std::vector<std::string> names = {"hahn-space"};
    return names;
}

} // namespace check_names

namespace detail {

// Per-tuple record of instance counts and first failures, one slot per check.
class TupleLog {
public:
    struct Slot {
        std::size_t instances = 0;
        std::optional<Json> first_failure;
    };

    explicit TupleLog(std::size_t checks = 0) : slots_(checks) {}

    template <class Describe>
    void expect(std::size_t id, bool ok, Describe&& describe)
    {
        Slot& s = slots_[id];
        ++s.instances;
        if (!ok && !s.first_failure)
            s.first_failure = describe();
    }

    void error(std::size_t id, Json context, const std::exception& e)
    {
        Slot& s = slots_[id];
        ++s.instances;
        if (!s.first_failure) {
            context["error"] = e.what();
            s.first_failure = std::move(context);
        }
    }

    const std::vector<Slot>& slots() const { return slots_; }

private:
    std::vector<Slot> slots_;
};

template <class Body>
void guarded(TupleLog& log, std::size_t id, const Json& context, Body&& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        log.error(id, context, e);
    }
}

inline Json describe(Json inputs, const std::string& expected, const std::string& observed)
{
    inputs["expected"] = expected;
    inputs["observed"] = observed;
    return inputs;
}

inline std::string set_str(const std::vector<Exponent>& xs)
{
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ", ";
        out += xs[i].str();
    }
    return out + "}";
}

inline std::vector<Exponent> sorted_unique(std::vector<Exponent> xs)
{
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

inline std::vector<Exponent> sumset(const std::vector<Exponent>& a, const std::vector<Exponent>& b)
{
    std::vector<Exponent> out;
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back(x + y);
    return sorted_unique(std::move(out));
}

inline bool contains(const std::vector<Exponent>& sorted, const Exponent& x)
{
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

inline bool subset(const std::vector<Exponent>& a, const std::vector<Exponent>& sorted_b)
{
    for (const auto& x : a)
        if (!contains(sorted_b, x))
            return false;
    return true;
}

// The inputs of one tuple.
template <class S>
struct Tuple {
    using E = typename S::element_type;

    std::size_t index;
    const E& f;
    const E& g;
    Coefficient c;
    std::vector<Exponent> probes;
    std::vector<std::pair<Exponent, Exponent>> probe_pairs; // first < second
    Exponent alpha;
    Exponent beta;
    Exponent gamma;
};

template <TruncationStructure S>
std::vector<Exponent> sp_probe_or_empty(const S& s, const typename S::element_type& f)
{
    try {
        return s.sp_probe(f);
    } catch (const std::exception&) {
        return {};
    }
}

template <TruncationStructure S>
Tuple<S> make_tuple(const S& s, const SampleSet<typename S::element_type>& samples, std::size_t i)
{
    SampleGen rng(s.group(), s.field(), derive_seed(samples.seed, i));
    const auto& elems = samples.elements;
    const auto& f = elems[i % elems.size()];
    const auto& g = elems[rng.below(elems.size())];
    Coefficient c = samples.constants[rng.below(samples.constants.size())];

    const Exponent unit = Exponent::unit(s.group());
    std::vector<Exponent> probes{Exponent::zero(s.group())};
    const auto spf = sorted_unique(sp_probe_or_empty(s, f));
    const auto spg = sorted_unique(sp_probe_or_empty(s, g));
    const auto sums = sumset(spf, spg);
    for (const auto* set : {&spf, &spg, &sums}) {
        probes.insert(probes.end(), set->begin(), set->end());
        if (!set->empty()) {
            probes.push_back(set->front() - unit);
            probes.push_back(set->back() + unit);
        }
    }
    for (int k = 0; k < 6; ++k)
        probes.push_back(samples.probes[rng.below(samples.probes.size())]);
    probes = sorted_unique(std::move(probes));

    std::vector<std::pair<Exponent, Exponent>> pairs;
    for (std::size_t k = 0; k + 1 < probes.size(); ++k)
        pairs.emplace_back(probes[k], probes[k + 1]);
    for (int k = 0; k < 12; ++k) {
        std::size_t a = rng.below(probes.size()), b = rng.below(probes.size());
        if (a == b)
            continue;
        if (probes[b] < probes[a])
            std::swap(a, b);
        pairs.emplace_back(probes[a], probes[b]);
    }

    Exponent alpha = probes[rng.below(probes.size())];
    Exponent beta = samples.probes[rng.below(samples.probes.size())];
    Exponent gamma = samples.probes[rng.below(samples.probes.size())];
    return Tuple<S>{i, f, g, std::move(c), std::move(probes), std::move(pairs),
                    std::move(alpha), std::move(beta), std::move(gamma)};
}

// sp observed on the candidates and the probes: every point where the
// defining identity holds. Independent of whether sp_probe is honest.
template <TruncationStructure S>
std::vector<Exponent> observed_sp(const S& s, const typename S::element_type& f, const std::vector<Exponent>& probes)
{
    std::vector<Exponent> out = ops::sp(s, f);
    for (const auto& p : probes)
        if (ops::in_sp(s, f, p))
            out.push_back(p);
    return sorted_unique(std::move(out));
}

template <TruncationStructure S, class Body>
CheckReport run_tuples(const S& s, const SampleSet<typename S::element_type>& samples,
                       const std::vector<std::string>& names, Body body)
{
    const std::size_t n = samples.elements.size();
    std::vector<TupleLog> logs(n, TupleLog(names.size()));
    const bool parallel = s.concurrent_safe();

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
        const auto i = static_cast<std::size_t>(k);
        try {
            const Tuple<S> t = make_tuple(s, samples, i);
            body(t, logs[i]);
        } catch (const std::exception& e) {
            for (std::size_t id = 0; id < names.size(); ++id)
                logs[i].error(id, Json{{"tuple_setup", true}}, e);
        }
    }

    CheckReport report;
    report.model = s.name();
    report.group = Group(s.group()).selector();
    report.coeff = Field(s.field()).selector();
    report.seed = samples.seed;
    report.samples = n;
    for (std::size_t id = 0; id < names.size(); ++id) {
        CheckEntry entry;
        entry.name = names[id];
        for (std::size_t i = 0; i < n; ++i) {
            const auto& slot = logs[i].slots()[id];
            entry.instances += slot.instances;
            if (slot.first_failure && !entry.counterexample)
                entry.counterexample = Counterexample{i, *slot.first_failure};
        }
        entry.status = entry.counterexample ? Status::fail : entry.instances ? Status::pass : Status::skipped;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace detail

// (T1)-(T8), with (T5) replaced by its finite surrogate: every claimed sp
// point satisfies v(f - f|_g) = g and no probe outside the claim does.
template <TruncationStructure S>
CheckReport check_axioms(const S& s, const SampleSet<typename S::element_type>& samples)
{
    using E = typename S::element_type;
    using detail::describe;
    enum { T1, T2, T3, T4, T5, T6, T7, T8 };

    return detail::run_tuples(s, samples, check_names::axioms(), [&s](const detail::Tuple<S>& t, detail::TupleLog& log) {
        const auto R = [&s](const E& x) { return s.render(x); };

        for (const E* x : {&t.f, &t.g}) {
            const Json base{{"f", R(*x)}};
            for (const auto& a : t.probes) {
                Json in = base;
                in["alpha"] = a.str();
                detail::guarded(log, T1, in, [&] {
                    const auto v = s.value(ops::sub(s, *x, s.trunc(*x, a)));
                    log.expect(T1, v >= ExtendedExponent(a),
                               [&] { return describe(in, "v(f - f|alpha) >= " + a.str(), to_string(v)); });
                });
                detail::guarded(log, T2, in, [&] {
                    if (s.value(*x) >= ExtendedExponent(a)) {
                        const E cut = s.trunc(*x, a);
                        log.expect(T2, s.is_zero(cut), [&] { return describe(in, "0", R(cut)); });
                    }
                });
            }
            for (const auto& [a, b] : t.probe_pairs) {
                Json in = base;
                in["alpha"] = a.str();
                in["beta"] = b.str();
                detail::guarded(log, T3, in, [&] {
                    const E once = s.trunc(*x, a);
                    const E twice = s.trunc(once, b);
                    log.expect(T3, s.equal(once, twice), [&] { return describe(in, R(once), R(twice)); });
                });
            }
            detail::guarded(log, T5, base, [&] {
                const auto claimed = detail::sorted_unique(s.sp_probe(*x));
                if (s.sp_probe_exact()) {
                    for (const auto& a : claimed) {
                        Json in = base;
                        in["gamma"] = a.str();
                        log.expect(T5, ops::in_sp(s, *x, a),
                                   [&] { return describe(in, "v(f - f|gamma) = gamma for claimed sp point",
                                                         to_string(s.value(ops::sub(s, *x, s.trunc(*x, a))))); });
                    }
                }
                for (const auto& a : t.probes) {
                    if (detail::contains(claimed, a))
                        continue;
                    Json in = base;
                    in["gamma"] = a.str();
                    log.expect(T5, !ops::in_sp(s, *x, a), [&] {
                        return describe(in, "gamma outside sp_probe " + detail::set_str(claimed),
                                        "v(f - f|gamma) = gamma");
                    });
                }
            });
        }

        const Json fg{{"f", R(t.f)}, {"g", R(t.g)}, {"c", t.c.str()}};
        for (const auto& a : t.probes) {
            Json in = fg;
            in["alpha"] = a.str();
            detail::guarded(log, T4, in, [&] {
                const E lhs = s.trunc(s.add(t.f, t.g), a);
                const E rhs = s.add(s.trunc(t.f, a), s.trunc(t.g, a));
                log.expect(T4, s.equal(lhs, rhs), [&] { return describe(in, R(rhs), R(lhs)); });
                const E slhs = s.trunc(ops::scale(s, t.c, t.f), a);
                const E srhs = ops::scale(s, t.c, s.trunc(t.f, a));
                log.expect(T4, s.equal(slhs, srhs), [&] {
                    Json j = in;
                    j["form"] = "(c f)|alpha = c (f|alpha)";
                    return describe(j, R(srhs), R(slhs));
                });
            });
        }

        detail::guarded(log, T6, fg, [&] {
            const auto spf = ops::sp(s, t.f);
            const auto spg = ops::sp(s, t.g);
            const auto sums = detail::sumset(spf, spg);
            const E prod = s.mul(t.f, t.g);
            const auto spfg = detail::observed_sp(s, prod, t.probes);
            for (const auto& gm : t.probes) {
                if (!sums.empty() && !(sums.back() < gm))
                    continue;
                Json in = fg;
                in["gamma"] = gm.str();
                log.expect(T6, spfg.empty() || spfg.back() < gm,
                           [&] { return describe(in, "sp(fg) < " + gm.str(), detail::set_str(spfg)); });
            }
        });

        const Exponent zero_exp = Exponent::zero(s.group());
        const std::pair<Exponent, Exponent> tau_pairs[] = {
            {zero_exp, zero_exp}, {t.alpha, t.beta}, {t.beta, t.gamma}, {t.alpha, -t.alpha}};
        for (const auto& [a, b] : tau_pairs) {
            Json in{{"alpha", a.str()}, {"beta", b.str()}};
            detail::guarded(log, T7, in, [&] {
                const E lhs = s.tau(a + b);
                const E rhs = s.mul(s.tau(a), s.tau(b));
                log.expect(T7, s.equal(lhs, rhs), [&] { return describe(in, R(lhs), R(rhs)); });
            });
        }
        for (const Exponent* gm : {&zero_exp, &t.alpha, &t.gamma}) {
            Json in{{"gamma", gm->str()}};
            detail::guarded(log, T8, in, [&] {
                const E tg = s.tau(*gm);
                std::vector<Exponent> probes = t.probes;
                probes.push_back(*gm);
                probes.push_back(*gm + Exponent::unit(s.group()));
                const auto got = detail::observed_sp(s, tg, detail::sorted_unique(std::move(probes)));
                log.expect(T8, got.size() == 1 && got.front() == *gm, [&] {
                    Json j = in;
                    j["tau"] = R(tg);
                    return describe(j, "{" + gm->str() + "}", detail::set_str(got));
                });
            });
        }
    });
}

// The derived statements about sp, P, leading terms and gamma-terms.
template <TruncationStructure S>
CheckReport check_lemmas(const S& s, const SampleSet<typename S::element_type>& samples)
{
    using E = typename S::element_type;
    using detail::describe;
    enum {
        trunc_asymptotic,
        trunc_compose,
        valuation_min_sp,
        sp_of_trunc,
        sp_of_sum,
        sp_of_tail,
        tail_valuation_in_sp,
        trunc_at_sp_point,
        monomial_decomposition,
        finite_sp_sums,
        monomial_sum_closure,
        monomial_proportional,
        monomial_group,
        monomial_shifts_sp,
        sp_of_product,
        term_convolution,
        leading_term,
        gterm_valuation,
        gterm_remainder,
        gterm_unique,
        gterm_trunc,
        gterm_linear,
        gterm_injective,
    };

    return detail::run_tuples(s, samples, check_names::lemmas(), [&s](const detail::Tuple<S>& t, detail::TupleLog& log) {
        const auto R = [&s](const E& x) { return s.render(x); };
        const auto V = [&s](const E& x) { return s.value(x); };
        const Field field = s.field();
        const E zero = s.constant(Coefficient::zero(field));
        const E one = s.constant(Coefficient::one(field));
        const auto in_P_or_zero = [&](const E& x) { return s.is_zero(x) || ops::in_P(s, x); };

        for (const E* xp : {&t.f, &t.g}) {
            const E& x = *xp;
            const Json base{{"f", R(x)}};
            std::vector<Exponent> spx;
            try {
                spx = ops::sp(s, x);
            } catch (const std::exception& e) {
                log.error(valuation_min_sp, base, e);
                continue;
            }

            for (const auto& a : t.probes) {
                Json in = base;
                in["alpha"] = a.str();
                detail::guarded(log, trunc_asymptotic, in, [&] {
                    const E cut = s.trunc(x, a);
                    if (!s.is_zero(cut)) {
                        const auto lhs = V(ops::sub(s, x, cut));
                        log.expect(trunc_asymptotic, lhs > V(x), [&] {
                            return describe(in, "v(f - f|alpha) > v(f) = " + to_string(V(x)), to_string(lhs));
                        });
                    }
                });
                detail::guarded(log, sp_of_trunc, in, [&] {
                    std::vector<Exponent> want;
                    for (const auto& p : spx)
                        if (p < a)
                            want.push_back(p);
                    const auto got = ops::sp(s, s.trunc(x, a));
                    log.expect(sp_of_trunc, got == want,
                               [&] { return describe(in, detail::set_str(want), detail::set_str(got)); });
                });
                detail::guarded(log, sp_of_tail, in, [&] {
                    std::vector<Exponent> want;
                    for (const auto& p : spx)
                        if (p >= a)
                            want.push_back(p);
                    const auto got = ops::sp(s, ops::sub(s, x, s.trunc(x, a)));
                    log.expect(sp_of_tail, got == want,
                               [&] { return describe(in, detail::set_str(want), detail::set_str(got)); });
                });
                detail::guarded(log, tail_valuation_in_sp, in, [&] {
                    const E tail = ops::sub(s, x, s.trunc(x, a));
                    if (!s.is_zero(tail)) {
                        const auto v = V(tail);
                        log.expect(tail_valuation_in_sp, !is_infinite(v) && detail::contains(spx, std::get<Exponent>(v)),
                                   [&] { return describe(in, "v(f - f|alpha) in " + detail::set_str(spx), to_string(v)); });
                    }
                });
                detail::guarded(log, trunc_at_sp_point, in, [&] {
                    const E cut = s.trunc(x, a);
                    if (spx.empty() || spx.back() < a) {
                        log.expect(trunc_at_sp_point, s.equal(cut, x), [&] { return describe(in, R(x), R(cut)); });
                        return;
                    }
                    std::vector<Exponent> matches;
                    for (const auto& b : spx)
                        if (s.equal(cut, s.trunc(x, b)))
                            matches.push_back(b);
                    log.expect(trunc_at_sp_point, matches.size() == 1 && a <= matches.front(), [&] {
                        return describe(in, "exactly one beta >= alpha in sp(f) with f|alpha = f|beta",
                                        detail::set_str(matches));
                    });
                });
                detail::guarded(log, gterm_remainder, in, [&] {
                    const E rest = ops::sub(s, ops::sub(s, x, s.trunc(x, a)), ops::gamma_term(s, x, a));
                    const auto v = V(rest);
                    log.expect(gterm_remainder, v > ExtendedExponent(a),
                               [&] { return describe(in, "v(f - f|gamma - f gamma) > " + a.str(), to_string(v)); });
                });
                detail::guarded(log, gterm_trunc, in, [&] {
                    const Exponent& cut_at = t.alpha;
                    const E lhs = ops::gamma_term(s, s.trunc(x, cut_at), a);
                    const E rhs = a < cut_at ? ops::gamma_term(s, x, a) : zero;
                    log.expect(gterm_trunc, s.equal(lhs, rhs), [&] {
                        Json j = in;
                        j["cut"] = cut_at.str();
                        return describe(j, R(rhs), R(lhs));
                    });
                });
            }

            for (const auto& [b, a] : t.probe_pairs) {
                Json in = base;
                in["alpha"] = a.str();
                in["beta"] = b.str();
                detail::guarded(log, trunc_compose, in, [&] {
                    const E lhs = s.trunc(s.trunc(x, a), b);
                    const E rhs = s.trunc(x, b);
                    log.expect(trunc_compose, s.equal(lhs, rhs), [&] { return describe(in, R(rhs), R(lhs)); });
                });
            }

            detail::guarded(log, valuation_min_sp, base, [&] {
                if (!s.is_zero(x)) {
                    const auto v = V(x);
                    log.expect(valuation_min_sp, !spx.empty() && ExtendedExponent(spx.front()) == v,
                               [&] { return describe(base, "min sp(f) = " + to_string(v), detail::set_str(spx)); });
                }
            });

            detail::guarded(log, monomial_decomposition, base, [&] {
                std::vector<E> parts;
                E sum = zero;
                bool ok = true;
                std::string why;
                for (std::size_t i = 0; i < spx.size(); ++i) {
                    const E upper = i + 1 < spx.size() ? s.trunc(x, spx[i + 1]) : x;
                    const E part = ops::sub(s, upper, s.trunc(x, spx[i]));
                    if (!ops::in_P(s, part) || !(V(part) == ExtendedExponent(spx[i]))) {
                        ok = false;
                        why = "part " + R(part) + " at " + spx[i].str();
                    }
                    sum = s.add(sum, part);
                }
                if (!s.equal(sum, x)) {
                    ok = false;
                    why = "sum of parts " + R(sum);
                }
                log.expect(monomial_decomposition, ok,
                           [&] { return describe(base, "f = sum of P-elements at " + detail::set_str(spx), why); });
            });

            detail::guarded(log, leading_term, base, [&] {
                if (s.is_zero(x))
                    return;
                const E d = ops::leading_term(s, x);
                const bool ok = ops::in_P(s, d) && V(ops::sub(s, x, d)) > V(x);
                log.expect(leading_term, ok, [&] { return describe(base, "d(f) in P and f ~ d(f)", R(d)); });
            });

            for (std::size_t i = 0; i < spx.size(); ++i) {
                const Exponent& gm = spx[i];
                Json in = base;
                in["gamma"] = gm.str();
                detail::guarded(log, gterm_valuation, in, [&] {
                    const E term = ops::gamma_term(s, x, gm);
                    log.expect(gterm_valuation, V(term) == ExtendedExponent(gm),
                               [&] { return describe(in, gm.str(), to_string(V(term))); });
                });
                detail::guarded(log, gterm_unique, in, [&] {
                    // f|_next - f|_gamma is an element of P u {0} meeting the
                    // characterizing condition, so it must be the gamma-term.
                    const E upper = i + 1 < spx.size() ? s.trunc(x, spx[i + 1]) : x;
                    const E candidate = ops::sub(s, upper, s.trunc(x, gm));
                    const E rest = ops::sub(s, ops::sub(s, x, s.trunc(x, gm)), candidate);
                    if (in_P_or_zero(candidate) && V(rest) > ExtendedExponent(gm)) {
                        const E term = ops::gamma_term(s, x, gm);
                        log.expect(gterm_unique, s.equal(candidate, term),
                                   [&] { return describe(in, R(candidate), R(term)); });
                    }
                });
            }
        }

        const Json fg{{"f", R(t.f)}, {"g", R(t.g)}, {"c", t.c.str()}};
        std::vector<Exponent> spf, spg;
        try {
            spf = ops::sp(s, t.f);
            spg = ops::sp(s, t.g);
        } catch (const std::exception& e) {
            log.error(sp_of_sum, fg, e);
            return;
        }

        detail::guarded(log, sp_of_sum, fg, [&] {
            auto both = spf;
            both.insert(both.end(), spg.begin(), spg.end());
            both = detail::sorted_unique(std::move(both));
            const auto got = ops::sp(s, s.add(t.f, t.g));
            log.expect(sp_of_sum, detail::subset(got, both),
                       [&] { return describe(fg, "subset of " + detail::set_str(both), detail::set_str(got)); });
            if (!t.c.is_zero()) {
                const auto scaled = ops::sp(s, ops::scale(s, t.c, t.f));
                log.expect(sp_of_sum, scaled == spf,
                           [&] { return describe(fg, "sp(c f) = " + detail::set_str(spf), detail::set_str(scaled)); });
            }
        });

        detail::guarded(log, finite_sp_sums, fg, [&] {
            std::vector<Exponent> exps{t.alpha, t.beta, t.gamma};
            E m = zero;
            for (const auto& e : exps)
                m = s.add(m, ops::scale(s, t.c, s.tau(e)));
            const auto got = ops::sp(s, m);
            const auto allowed = detail::sorted_unique(exps);
            log.expect(finite_sp_sums, detail::subset(got, allowed), [&] {
                Json j = fg;
                j["sum"] = R(m);
                return describe(j, "sp within " + detail::set_str(allowed), detail::set_str(got));
            });
        });

        detail::guarded(log, sp_of_product, fg, [&] {
            const auto sums = detail::sumset(spf, spg);
            const auto got = ops::sp(s, s.mul(t.f, t.g));
            log.expect(sp_of_product, detail::subset(got, sums),
                       [&] { return describe(fg, "subset of " + detail::set_str(sums), detail::set_str(got)); });
        });

        detail::guarded(log, term_convolution, fg, [&] {
            const E prod = s.mul(t.f, t.g);
            for (const auto& gm : detail::sumset(spf, spg)) {
                E conv = zero;
                for (const auto& a : spf)
                    for (const auto& b : spg)
                        if (a + b == gm)
                            conv = s.add(conv, s.mul(ops::gamma_term(s, t.f, a), ops::gamma_term(s, t.g, b)));
                const E direct = ops::gamma_term(s, prod, gm);
                Json in = fg;
                in["gamma"] = gm.str();
                log.expect(term_convolution, s.equal(direct, conv), [&] { return describe(in, R(conv), R(direct)); });
            }
        });

        for (const auto& gm : t.probes) {
            Json in = fg;
            in["gamma"] = gm.str();
            detail::guarded(log, gterm_linear, in, [&] {
                const E lhs = ops::gamma_term(s, s.add(t.f, t.g), gm);
                const E rhs = s.add(ops::gamma_term(s, t.f, gm), ops::gamma_term(s, t.g, gm));
                log.expect(gterm_linear, s.equal(lhs, rhs), [&] { return describe(in, R(rhs), R(lhs)); });
                const E slhs = ops::gamma_term(s, ops::scale(s, t.c, t.f), gm);
                const E srhs = ops::scale(s, t.c, ops::gamma_term(s, t.f, gm));
                log.expect(gterm_linear, s.equal(slhs, srhs), [&] { return describe(in, R(srhs), R(slhs)); });
            });
        }

        detail::guarded(log, gterm_injective, fg, [&] {
            if (s.equal(t.f, t.g))
                return;
            auto both = spf;
            both.insert(both.end(), spg.begin(), spg.end());
            bool separated = false;
            for (const auto& gm : detail::sorted_unique(std::move(both)))
                if (!s.equal(ops::gamma_term(s, t.f, gm), ops::gamma_term(s, t.g, gm))) {
                    separated = true;
                    break;
                }
            log.expect(gterm_injective, separated,
                       [&] { return describe(fg, "some gamma-term of f differs from g's", "all agree"); });
        });

        // Monomials: leading terms of f and g, and g's leading term moved to
        // the valuation of f's.
        if (s.is_zero(t.f) || s.is_zero(t.g))
            return;
        detail::guarded(log, monomial_group, fg, [&] {
            const E x = ops::leading_term(s, t.f);
            const E y = ops::leading_term(s, t.g);
            log.expect(monomial_group, ops::in_P(s, one), [&] { return describe(fg, "1 in P", R(one)); });
            if (!ops::in_P(s, x) || !ops::in_P(s, y))
                return;
            const E xy = s.mul(x, y);
            log.expect(monomial_group, ops::in_P(s, xy), [&] {
                Json j = fg;
                j["x"] = R(x);
                j["y"] = R(y);
                return describe(j, "x y in P", R(xy));
            });
            const E xi = s.inv(x);
            log.expect(monomial_group, ops::in_P(s, xi), [&] {
                Json j = fg;
                j["x"] = R(x);
                return describe(j, "x^-1 in P", R(xi));
            });
        });

        detail::guarded(log, monomial_shifts_sp, fg, [&] {
            for (const E& x : {ops::leading_term(s, t.f), s.tau(t.alpha)}) {
                if (!ops::in_P(s, x))
                    continue;
                const Exponent vx = std::get<Exponent>(V(x));
                std::vector<Exponent> want;
                for (const auto& b : spg)
                    want.push_back(vx + b);
                const auto got = ops::sp(s, s.mul(x, t.g));
                log.expect(monomial_shifts_sp, got == want, [&] {
                    Json j = fg;
                    j["x"] = R(x);
                    return describe(j, detail::set_str(want), detail::set_str(got));
                });
            }
        });

        detail::guarded(log, monomial_sum_closure, fg, [&] {
            const E x = ops::leading_term(s, t.f);
            const E dg = ops::leading_term(s, t.g);
            const Exponent shift = std::get<Exponent>(V(x)) - std::get<Exponent>(V(dg));
            const E y = s.mul(dg, s.tau(shift));
            if (!ops::in_P(s, x) || !ops::in_P(s, y) || !(V(x) == V(y)))
                return;
            const Coefficient r = s.residue(s.mul(x, s.inv(y)));
            for (const Coefficient& k : {Coefficient::one(field), t.c, -r}) {
                const E sum = s.add(x, ops::scale(s, k, y));
                log.expect(monomial_sum_closure, in_P_or_zero(sum), [&] {
                    Json j = fg;
                    j["x"] = R(x);
                    j["y"] = R(y);
                    j["k"] = k.str();
                    return describe(j, "x + k y in P or 0", R(sum));
                });
            }
        });

        detail::guarded(log, monomial_proportional, fg, [&] {
            const E x = ops::leading_term(s, t.f);
            const E dg = ops::leading_term(s, t.g);
            const Exponent shift = std::get<Exponent>(V(x)) - std::get<Exponent>(V(dg));
            for (const E& y : {s.mul(dg, s.tau(shift)), x}) {
                if (!ops::in_P(s, x) || !ops::in_P(s, y) || !(V(x) == V(y)))
                    continue;
                const E ratio = s.mul(x, s.inv(y));
                const Coefficient r = s.residue(ratio);
                const bool ok = V(ratio) == ExtendedExponent(Exponent::zero(s.group())) && !r.is_zero() &&
                                s.equal(x, ops::scale(s, r, y));
                log.expect(monomial_proportional, ok, [&] {
                    Json j = fg;
                    j["x"] = R(x);
                    j["y"] = R(y);
                    return describe(j, "x = c y with c = " + r.str(), R(ops::scale(s, r, y)));
                });
            }
        });
    });
}

// For f ~= g != 0: c := residue(f / d(g)) is a unit with f ~ c g. Dividing by
// the leading term d(g) keeps the quotient inside the carrier; it has the
// same residue as f / g since g / d(g) has residue 1.
template <TruncationStructure S>
CheckReport check_hahn_space(const S& s, const SampleSet<typename S::element_type>& samples)
{
    using E = typename S::element_type;
    using detail::describe;

    return detail::run_tuples(s, samples, check_names::hahn_space(), [&s](const detail::Tuple<S>& t, detail::TupleLog& log) {
        const auto R = [&s](const E& x) { return s.render(x); };
        if (s.is_zero(t.f))
            return;
        const Json base{{"f", R(t.f)}, {"g", R(t.g)}};
        detail::guarded(log, 0, base, [&] {
            std::vector<E> partners{t.f};
            if (!t.c.is_zero())
                partners.push_back(ops::scale(s, t.c, t.f));
            if (!s.is_zero(t.g)) {
                const Exponent shift = std::get<Exponent>(s.value(t.f)) - std::get<Exponent>(s.value(t.g));
                partners.push_back(s.mul(t.g, s.tau(shift)));
            }
            for (const E& y : partners) {
                if (!(s.value(y) == s.value(t.f)))
                    continue;
                const Coefficient c = s.residue(s.mul(t.f, s.inv(ops::leading_term(s, y))));
                const E diff = ops::sub(s, t.f, ops::scale(s, c, y));
                const bool ok = !c.is_zero() && s.value(diff) > s.value(t.f);
                log.expect(0, ok, [&] {
                    Json j = base;
                    j["y"] = R(y);
                    j["c"] = c.str();
                    return describe(j, "f - c y < f", R(diff));
                });
            }
        });
    });
}

// All three suites in one report.
template <TruncationStructure S>
CheckReport check_all(const S& s, const SampleSet<typename S::element_type>& samples)
{
    CheckReport report = check_axioms(s, samples);
    report.append(check_lemmas(s, samples));
    report.append(check_hahn_space(s, samples));
    return report;
}

} // namespace hahn
