#include "hahn/exponent.hpp"

#include <charconv>

#include "hahn/detail/numeric_text.hpp"
#include "hahn/error.hpp"

namespace hahn {

Group Group::rational_lex(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("lexicographic groups need dimension >= 2");
    return Group(GroupKind::rational_lex, n);
}

Group Group::parse(std::string_view selector)
{
    if (selector == "z")
        return integers();
    if (selector == "q")
        return rationals();
    if (selector == "q2lex")
        return rational_lex(2);
    constexpr std::string_view prefix = "qnlex:";
    if (selector.substr(0, prefix.size()) == prefix) {
        const std::string_view digits = selector.substr(prefix.size());
        std::size_t n = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 2 && n <= 64)
            return rational_lex(n);
    }
    throw std::invalid_argument("unknown group selector '" + std::string(selector) +
                                "' (expected z, q, q2lex or qnlex:n)");
}

std::string Group::selector() const
{
    switch (kind_) {
    case GroupKind::integer:
        return "z";
    case GroupKind::rational:
        return "q";
    case GroupKind::rational_lex:
        return dim_ == 2 ? "q2lex" : "qnlex:" + std::to_string(dim_);
    }
    return {};
}

void require_same_group(const Group& a, const Group& b)
{
    if (!(a == b))
        throw GroupMismatch("exponent group mismatch: " + a.selector() + " vs " + b.selector());
}

Exponent Exponent::zero(const Group& g)
{
    return Exponent(g, std::vector<mpq_class>(g.dimension(), mpq_class(0)));
}

Exponent Exponent::unit(const Group& g)
{
    auto comps = std::vector<mpq_class>(g.dimension(), mpq_class(0));
    comps.back() = 1;
    return Exponent(g, std::move(comps));
}

Exponent Exponent::integer(const mpz_class& v)
{
    return Exponent(Group::integers(), {mpq_class(v)});
}

Exponent Exponent::rational(const mpq_class& v)
{
    mpq_class q(v);
    q.canonicalize();
    return Exponent(Group::rationals(), {q});
}

Exponent Exponent::rational(long num, long den)
{
    if (den == 0)
        throw DivisionByZero("zero denominator in exponent");
    return rational(mpq_class(num, den));
}

Exponent Exponent::lex(std::vector<mpq_class> components)
{
    const Group g = Group::rational_lex(components.size());
    for (auto& c : components)
        c.canonicalize();
    return Exponent(g, std::move(components));
}

Exponent Exponent::parse(std::string_view text, const Group& g)
{
    std::size_t lead = 0;
    const std::string_view s = detail::trim(text, &lead);
    if (g.kind() != GroupKind::rational_lex) {
        if (!s.empty() && s.front() == '(')
            throw ParseError("tuple exponent in a " + g.selector() + " group", lead);
        const mpq_class q = detail::parse_rational(s, lead);
        if (g.kind() == GroupKind::integer) {
            if (q.get_den() != 1)
                throw ParseError("non-integer exponent in group z", lead);
            return integer(q.get_num());
        }
        return rational(q);
    }

    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("expected a tuple exponent like (a, b)", lead);
    std::vector<mpq_class> comps;
    std::size_t start = 1;
    for (;;) {
        const std::size_t comma = s.find(',', start);
        const std::size_t stop = comma == std::string_view::npos ? s.size() - 1 : comma;
        comps.push_back(detail::parse_rational(s.substr(start, stop - start), lead + start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (comps.size() != g.dimension())
        throw ParseError("tuple exponent has " + std::to_string(comps.size()) +
                             " components, group " + g.selector() + " needs " +
                             std::to_string(g.dimension()),
                         lead);
    return lex(std::move(comps));
}

bool Exponent::is_zero() const
{
    for (const auto& c : comps_)
        if (c != 0)
            return false;
    return true;
}

bool Exponent::is_positive() const
{
    for (const auto& c : comps_) {
        if (c > 0)
            return true;
        if (c < 0)
            return false;
    }
    return false;
}

bool Exponent::is_integer() const
{
    return group_.archimedean() && comps_.front().get_den() == 1;
}

const mpq_class& Exponent::scalar() const
{
    if (!group_.archimedean())
        throw UnsupportedGroup("scalar() of a lexicographic exponent");
    return comps_.front();
}

std::string Exponent::str() const
{
    if (group_.archimedean())
        return detail::rational_str(comps_.front());
    std::string out = "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i)
            out += ", ";
        out += detail::rational_str(comps_[i]);
    }
    out += ')';
    return out;
}

Exponent operator+(const Exponent& a, const Exponent& b)
{
    require_same_group(a.group_, b.group_);
    std::vector<mpq_class> out(a.comps_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.comps_[i] + b.comps_[i];
    return Exponent(a.group_, std::move(out));
}

Exponent operator-(const Exponent& a, const Exponent& b)
{
    require_same_group(a.group_, b.group_);
    std::vector<mpq_class> out(a.comps_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.comps_[i] - b.comps_[i];
    return Exponent(a.group_, std::move(out));
}

Exponent operator-(const Exponent& a)
{
    std::vector<mpq_class> out(a.comps_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = -a.comps_[i];
    return Exponent(a.group_, std::move(out));
}

Exponent operator*(long k, const Exponent& a)
{
    std::vector<mpq_class> out(a.comps_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.comps_[i] * k;
    return Exponent(a.group_, std::move(out));
}

bool operator==(const Exponent& a, const Exponent& b)
{
    require_same_group(a.group_, b.group_);
    return a.comps_ == b.comps_;
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b)
{
    require_same_group(a.group_, b.group_);
    for (std::size_t i = 0; i < a.comps_.size(); ++i) {
        const int c = cmp(a.comps_[i], b.comps_[i]);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string to_string(const ExtendedExponent& e)
{
    if (is_infinite(e))
        return "inf";
    return std::get<Exponent>(e).str();
}

} // namespace hahn
