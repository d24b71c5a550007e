#pragma once

// Finite-support Hahn series: canonical sums c_1 t^{e_1} + ... + c_n t^{e_n}
// with e_1 < ... < e_n and every c_i nonzero. The empty sum is zero.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hahn/coefficient.hpp"
#include "hahn/exponent.hpp"

namespace hahn {

struct Term {
    Exponent exponent;
    Coefficient coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

class FiniteSeries {
public:
    static FiniteSeries zero(const Group& g, const Field& f);
    static FiniteSeries constant(const Coefficient& c, const Group& g);
    static FiniteSeries monomial(const Coefficient& c, const Exponent& e);

    // Merges duplicate exponents, drops zero coefficients, sorts.
    static FiniteSeries from_terms(const Group& g, const Field& f, std::vector<Term> raw);

    // Trusts the caller: terms must already be canonical.
    static FiniteSeries from_canonical(const Group& g, const Field& f, std::vector<Term> terms);

    const Group& group() const noexcept { return group_; }
    const Field& field() const noexcept { return field_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    // v_t: least exponent of the support, Infinity for zero.
    ExtendedExponent valuation() const;

    // f|_alpha: the terms with exponent strictly below alpha.
    FiniteSeries truncate(const Exponent& alpha) const;

    // sp(f), which for a series is its support.
    std::vector<Exponent> support() const;

    // Coefficient at e (zero off the support).
    Coefficient coefficient(const Exponent& e) const;

    // The leading term d(f): the least term, zero for zero.
    FiniteSeries leading_term() const;

    // The gamma-term: the term at exponent gamma, or zero.
    FiniteSeries gamma_term(const Exponent& gamma) const;

    // Membership in P: exactly one term.
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    // c^{-1} t^{-e} for a single term c t^e; NotInvertible otherwise.
    FiniteSeries invert_monomial() const;

    FiniteSeries scale(const Coefficient& c) const;
    // Multiplication by t^e.
    FiniteSeries shift(const Exponent& e) const;
    // Integer power; negative powers only for monomials.
    FiniteSeries pow(long k) const;

    // Canonical text rendering, e.g. "2*t^(-1) + 3 + 5*t^(1/2)".
    std::string str() const;

    friend FiniteSeries operator+(const FiniteSeries& a, const FiniteSeries& b);
    friend FiniteSeries operator-(const FiniteSeries& a, const FiniteSeries& b);
    friend FiniteSeries operator-(const FiniteSeries& a);
    friend FiniteSeries operator*(const FiniteSeries& a, const FiniteSeries& b);

    friend bool operator==(const FiniteSeries& a, const FiniteSeries& b);

private:
    FiniteSeries(Group g, Field f, std::vector<Term> terms)
        : group_(g), field_(f), terms_(std::move(terms)) {}

    Group group_;
    Field field_;
    std::vector<Term> terms_;
};

void require_compatible(const FiniteSeries& a, const FiniteSeries& b);

// Dominance relations derived from the valuation.
bool dominated_by(const FiniteSeries& f, const FiniteSeries& g);        // f <= g  :<=> vf >= vg
bool strictly_dominated_by(const FiniteSeries& f, const FiniteSeries& g); // f < g  :<=> vf > vg
bool asymptotic(const FiniteSeries& f, const FiniteSeries& g);          // f ~= g :<=> vf = vg
bool equivalent(const FiniteSeries& f, const FiniteSeries& g);          // f ~ g  :<=> f - g < f

// Renders a single monomial factor t^e in the grammar the CLI parses.
std::string monomial_str(const Exponent& e);

} // namespace hahn
