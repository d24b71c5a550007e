#pragma once

// The abstract interface of a valued field F with a lift C of its residue
// field, a truncation map (f, a) -> f|_a and a section a -> tau^a.
//
// Nothing here assumes the axioms hold; the checker verifies them. The
// derived notions (sp, leading term, gamma-terms, membership in P) are
// computed only through the interface operations.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hahn/coefficient.hpp"
#include "hahn/exponent.hpp"

namespace hahn {

// What the embedding engine needs.
template <class S>
concept ValuedFieldWithTruncation = requires(const S& s, const typename S::element_type& f,
                                             const Exponent& a, const Coefficient& c) {
    typename S::element_type;
    { s.group() } -> std::convertible_to<Group>;
    { s.field() } -> std::convertible_to<Field>;
    { s.name() } -> std::convertible_to<std::string>;
    { s.add(f, f) } -> std::same_as<typename S::element_type>;
    { s.neg(f) } -> std::same_as<typename S::element_type>;
    { s.mul(f, f) } -> std::same_as<typename S::element_type>;
    { s.inv(f) } -> std::same_as<typename S::element_type>;
    { s.constant(c) } -> std::same_as<typename S::element_type>;
    { s.equal(f, f) } -> std::same_as<bool>;
    { s.is_zero(f) } -> std::same_as<bool>;
    { s.value(f) } -> std::same_as<ExtendedExponent>;
    { s.residue(f) } -> std::same_as<Coefficient>;
    { s.trunc(f, a) } -> std::same_as<typename S::element_type>;
    { s.tau(a) } -> std::same_as<typename S::element_type>;
    { s.render(f) } -> std::convertible_to<std::string>;
};

// A candidate truncation structure the checker can probe: additionally a
// finite sp-probe per element and a declared concurrency contract.
template <class S>
concept TruncationStructure = ValuedFieldWithTruncation<S> && requires(const S& s, const typename S::element_type& f) {
    { s.sp_probe(f) } -> std::same_as<std::vector<Exponent>>;
    // true: sp_probe(f) is claimed to be exactly sp(f); false: a superset.
    { s.sp_probe_exact() } -> std::same_as<bool>;
    { s.concurrent_safe() } -> std::same_as<bool>;
};

// Finite sample of F, Gamma and C for finitizing universally quantified
// statements. The checker adds per-tuple closure probes (0, the sp points of
// the drawn elements and all their pairwise sums).
template <class E>
struct SampleSet {
    std::vector<E> elements;
    std::vector<Exponent> probes;
    std::vector<Coefficient> constants;
    std::uint64_t seed = 0;
};

namespace ops {

template <ValuedFieldWithTruncation S>
typename S::element_type sub(const S& s, const typename S::element_type& f, const typename S::element_type& g)
{
    return s.add(f, s.neg(g));
}

template <ValuedFieldWithTruncation S>
typename S::element_type scale(const S& s, const Coefficient& c, const typename S::element_type& f)
{
    return s.mul(s.constant(c), f);
}

// The identity defining sp: v(f - f|_a) = a.
template <ValuedFieldWithTruncation S>
bool in_sp(const S& s, const typename S::element_type& f, const Exponent& a)
{
    return s.value(sub(s, f, s.trunc(f, a))) == ExtendedExponent(a);
}

// sp(f) restricted to the instance's candidates: each candidate must pass
// the defining identity. Sorted ascending.
template <TruncationStructure S>
std::vector<Exponent> sp(const S& s, const typename S::element_type& f)
{
    std::vector<Exponent> out;
    for (auto& a : s.sp_probe(f))
        if (in_sp(s, f, a))
            out.push_back(std::move(a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <TruncationStructure S>
bool in_P(const S& s, const typename S::element_type& f)
{
    return sp(s, f).size() == 1;
}

// d(f): 0 for f = 0, f for f in P, else f|_b with b the second sp point.
template <TruncationStructure S>
typename S::element_type leading_term(const S& s, const typename S::element_type& f)
{
    const auto points = sp(s, f);
    if (points.size() <= 1)
        return f;
    return s.trunc(f, points[1]);
}

// The gamma-term: d(f - f|_g) if g is in sp(f), else 0.
template <TruncationStructure S>
typename S::element_type gamma_term(const S& s, const typename S::element_type& f, const Exponent& g)
{
    if (!in_sp(s, f, g))
        return s.constant(Coefficient::zero(s.field()));
    return leading_term(s, sub(s, f, s.trunc(f, g)));
}

} // namespace ops

} // namespace hahn
