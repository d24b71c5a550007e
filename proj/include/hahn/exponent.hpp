#pragma once

// Value groups: Z, Q and Q^n with the lexicographic order, plus the extended
// value set Gamma u {inf} used for the valuation of zero.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace hahn {

class Exponent;

enum class GroupKind { integer, rational, rational_lex };

class Group {
public:
    static Group integers() { return Group(GroupKind::integer, 1); }
    static Group rationals() { return Group(GroupKind::rational, 1); }
    // Q^n ordered lexicographically, n >= 2.
    static Group rational_lex(std::size_t n);

    // Accepts the selector tokens "z", "q", "q2lex" and "qnlex:n".
    static Group parse(std::string_view selector);

    GroupKind kind() const noexcept { return kind_; }
    std::size_t dimension() const noexcept { return dim_; }

    // Z and Q are archimedean; Q^n-lex with n >= 2 is not.
    bool archimedean() const noexcept { return kind_ != GroupKind::rational_lex; }

    std::string selector() const;

    friend bool operator==(const Group&, const Group&) = default;

private:
    Group(GroupKind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

    GroupKind kind_;
    std::size_t dim_;
};

// An element of a value group. Integers and rationals carry one component,
// lex tuples carry dimension() components; components are canonical mpq
// values (integer groups keep denominator 1).
class Exponent {
public:
    static Exponent zero(const Group& g);
    // The distinguished positive element: 1 for Z and Q, (0,...,0,1) for lex.
    static Exponent unit(const Group& g);
    static Exponent integer(const mpz_class& v);
    static Exponent integer(long v) { return integer(mpz_class(v)); }
    static Exponent rational(const mpq_class& v);
    static Exponent rational(long num, long den);
    static Exponent lex(std::vector<mpq_class> components);

    // Text forms: "-3", "5/2", "(1/2, -3)". Offsets in ParseError are
    // relative to the start of text.
    static Exponent parse(std::string_view text, const Group& g);

    const Group& group() const noexcept { return group_; }
    const std::vector<mpq_class>& components() const noexcept { return comps_; }

    bool is_zero() const;
    bool is_positive() const;
    // Integer-valued in an archimedean group.
    bool is_integer() const;
    // The single component of an archimedean exponent.
    const mpq_class& scalar() const;

    std::string str() const;

    friend Exponent operator+(const Exponent& a, const Exponent& b);
    friend Exponent operator-(const Exponent& a, const Exponent& b);
    friend Exponent operator-(const Exponent& a);
    // Multiplication by an integer, used for grid steps.
    friend Exponent operator*(long k, const Exponent& a);

    friend bool operator==(const Exponent& a, const Exponent& b);
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

private:
    Exponent(Group g, std::vector<mpq_class> comps) : group_(g), comps_(std::move(comps)) {}

    Group group_;
    std::vector<mpq_class> comps_;
};

// Throws GroupMismatch unless a and b live in the same group.
void require_same_group(const Group& a, const Group& b);

struct Infinity {
    friend auto operator<=>(const Infinity&, const Infinity&) = default;
};

// Gamma_inf. std::variant orders by alternative index first, so Infinity
// compares above every Exponent.
using ExtendedExponent = std::variant<Exponent, Infinity>;

inline bool is_infinite(const ExtendedExponent& e) { return std::holds_alternative<Infinity>(e); }
std::string to_string(const ExtendedExponent& e);

} // namespace hahn
