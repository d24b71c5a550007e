#include "hahn/detail/numeric_text.hpp"

#include <cctype>

#include "hahn/error.hpp"

namespace hahn::detail {

std::string_view trim(std::string_view s, std::size_t* leading)
{
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    std::size_t e = s.size();
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    if (leading)
        *leading = b;
    return s.substr(b, e - b);
}

namespace {

std::size_t scan_digits(std::string_view s, std::size_t pos)
{
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    return pos;
}

} // namespace

mpq_class parse_rational(std::string_view text, std::size_t base)
{
    std::size_t lead = 0;
    const std::string_view s = trim(text, &lead);
    base += lead;
    if (s.empty())
        throw ParseError("expected a number", base);

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '-') {
        negative = true;
        ++pos;
    }
    const std::size_t num_end = scan_digits(s, pos);
    if (num_end == pos)
        throw ParseError("expected digits", base + pos);
    mpz_class num(std::string(s.substr(pos, num_end - pos)), 10);
    mpz_class den = 1;
    pos = num_end;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        const std::size_t den_end = scan_digits(s, pos);
        if (den_end == pos)
            throw ParseError("expected denominator digits", base + pos);
        den = mpz_class(std::string(s.substr(pos, den_end - pos)), 10);
        if (den == 0)
            throw ParseError("zero denominator in rational", base + pos);
        pos = den_end;
    }
    if (pos != s.size())
        throw ParseError("unexpected character in number", base + pos);
    if (negative)
        num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_str(const mpq_class& q)
{
    return q.get_str(10);
}

} // namespace hahn::detail
