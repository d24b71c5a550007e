#include "hahn/series.hpp"

#include <algorithm>

#include "hahn/error.hpp"
#include "hahn/kernels.hpp"

namespace hahn {

void require_compatible(const FiniteSeries& a, const FiniteSeries& b)
{
    require_same_group(a.group(), b.group());
    require_same_field(a.field(), b.field());
}

FiniteSeries FiniteSeries::zero(const Group& g, const Field& f)
{
    return FiniteSeries(g, f, {});
}

FiniteSeries FiniteSeries::constant(const Coefficient& c, const Group& g)
{
    return monomial(c, Exponent::zero(g));
}

FiniteSeries FiniteSeries::monomial(const Coefficient& c, const Exponent& e)
{
    if (c.is_zero())
        return zero(e.group(), c.field());
    return FiniteSeries(e.group(), c.field(), {Term{e, c}});
}

FiniteSeries FiniteSeries::from_terms(const Group& g, const Field& f, std::vector<Term> raw)
{
    for (const auto& t : raw) {
        require_same_group(g, t.exponent.group());
        require_same_field(f, t.coeff.field());
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
    std::vector<Term> out;
    out.reserve(raw.size());
    for (auto& t : raw) {
        if (!out.empty() && out.back().exponent == t.exponent)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    return FiniteSeries(g, f, std::move(out));
}

FiniteSeries FiniteSeries::from_canonical(const Group& g, const Field& f, std::vector<Term> terms)
{
    return FiniteSeries(g, f, std::move(terms));
}

ExtendedExponent FiniteSeries::valuation() const
{
    if (terms_.empty())
        return Infinity{};
    return terms_.front().exponent;
}

FiniteSeries FiniteSeries::truncate(const Exponent& alpha) const
{
    require_same_group(group_, alpha.group());
    const auto cut = std::lower_bound(terms_.begin(), terms_.end(), alpha,
                                      [](const Term& t, const Exponent& a) { return t.exponent < a; });
    return FiniteSeries(group_, field_, std::vector<Term>(terms_.begin(), cut));
}

std::vector<Exponent> FiniteSeries::support() const
{
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        out.push_back(t.exponent);
    return out;
}

Coefficient FiniteSeries::coefficient(const Exponent& e) const
{
    require_same_group(group_, e.group());
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                     [](const Term& t, const Exponent& a) { return t.exponent < a; });
    if (it != terms_.end() && it->exponent == e)
        return it->coeff;
    return Coefficient::zero(field_);
}

FiniteSeries FiniteSeries::leading_term() const
{
    if (terms_.empty())
        return *this;
    return FiniteSeries(group_, field_, {terms_.front()});
}

FiniteSeries FiniteSeries::gamma_term(const Exponent& gamma) const
{
    return monomial(coefficient(gamma), gamma);
}

FiniteSeries FiniteSeries::invert_monomial() const
{
    if (terms_.empty())
        throw DivisionByZero("inverse of the zero series");
    if (terms_.size() != 1)
        throw NotInvertible("inverse of " + str() +
                            " has infinite support; use the grid-series inverse");
    const Term& t = terms_.front();
    return FiniteSeries(group_, field_, {Term{-t.exponent, t.coeff.inverse()}});
}

FiniteSeries FiniteSeries::scale(const Coefficient& c) const
{
    require_same_field(field_, c.field());
    if (c.is_zero())
        return zero(group_, field_);
    std::vector<Term> out = terms_;
    for (auto& t : out)
        t.coeff = t.coeff * c;
    return FiniteSeries(group_, field_, std::move(out));
}

FiniteSeries FiniteSeries::shift(const Exponent& e) const
{
    require_same_group(group_, e.group());
    std::vector<Term> out = terms_;
    for (auto& t : out)
        t.exponent = t.exponent + e;
    return FiniteSeries(group_, field_, std::move(out));
}

FiniteSeries FiniteSeries::pow(long k) const
{
    if (k < 0)
        return invert_monomial().pow(-k);
    FiniteSeries result = constant(Coefficient::one(field_), group_);
    FiniteSeries base = *this;
    while (k) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

std::string monomial_str(const Exponent& e)
{
    if (e.group().archimedean()) {
        if (e.scalar() == 1)
            return "t";
        if (e.is_integer() && sgn(e.scalar()) > 0)
            return "t^" + e.str();
        return "t^(" + e.str() + ")";
    }
    return "t^" + e.str();
}

std::string FiniteSeries::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        const bool negative = t.coeff.is_negative();
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Coefficient magnitude = negative ? -t.coeff : t.coeff;
        if (t.exponent.is_zero()) {
            out += magnitude.str();
        } else if (magnitude.is_one()) {
            out += monomial_str(t.exponent);
        } else {
            out += magnitude.str();
            out += '*';
            out += monomial_str(t.exponent);
        }
    }
    return out;
}

FiniteSeries operator+(const FiniteSeries& a, const FiniteSeries& b)
{
    require_compatible(a, b);
    return FiniteSeries(a.group_, a.field_, kernels::merge_add(a.terms_, b.terms_));
}

FiniteSeries operator-(const FiniteSeries& a)
{
    std::vector<Term> out = a.terms_;
    for (auto& t : out)
        t.coeff = -t.coeff;
    return FiniteSeries(a.group_, a.field_, std::move(out));
}

FiniteSeries operator-(const FiniteSeries& a, const FiniteSeries& b)
{
    return a + (-b);
}

FiniteSeries operator*(const FiniteSeries& a, const FiniteSeries& b)
{
    return kernels::multiply(a, b);
}

bool operator==(const FiniteSeries& a, const FiniteSeries& b)
{
    require_compatible(a, b);
    return a.terms_ == b.terms_;
}

bool dominated_by(const FiniteSeries& f, const FiniteSeries& g)
{
    return f.valuation() >= g.valuation();
}

bool strictly_dominated_by(const FiniteSeries& f, const FiniteSeries& g)
{
    return f.valuation() > g.valuation();
}

bool asymptotic(const FiniteSeries& f, const FiniteSeries& g)
{
    return f.valuation() == g.valuation();
}

bool equivalent(const FiniteSeries& f, const FiniteSeries& g)
{
    // Defined on nonzero elements only.
    if (f.is_zero() || g.is_zero())
        return false;
    return strictly_dominated_by(f - g, f);
}

} // namespace hahn
