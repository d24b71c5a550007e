#pragma once

// Exact coefficient fields: arbitrary-precision rationals and GF(p).

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace hahn {

enum class FieldKind { rational, prime };

class Field {
public:
    static Field rationals() { return Field(FieldKind::rational, 0); }
    // p must be a prime below 2^31.
    static Field prime(std::uint32_t p);

    // "q" or "gf:p".
    static Field parse(std::string_view selector);

    FieldKind kind() const noexcept { return kind_; }
    std::uint32_t modulus() const noexcept { return p_; }
    std::string selector() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Coefficient;
    Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

void require_same_field(const Field& a, const Field& b);

class Coefficient {
public:
    struct ModP {
        std::uint32_t value;
        std::uint32_t modulus;
        friend bool operator==(const ModP&, const ModP&) = default;
    };

    static Coefficient zero(const Field& f);
    static Coefficient one(const Field& f);
    static Coefficient from_int(long v, const Field& f);
    static Coefficient rational(const mpq_class& q);
    static Coefficient rational(long num, long den);
    static Coefficient mod_p(long v, std::uint32_t p);

    // Maps a rational into f; for GF(p) the denominator must be a unit.
    static Coefficient from_rational(const mpq_class& q, const Field& f);

    // Text forms "a", "-a", "a/b".
    static Coefficient parse(std::string_view text, const Field& f);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;
    // Rationals: sign of the value. GF(p) elements count as non-negative.
    bool is_negative() const;

    const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }
    const ModP& as_mod_p() const { return std::get<ModP>(v_); }

    Coefficient inverse() const;
    Coefficient pow(long k) const;

    std::string str() const;

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a);

    Coefficient& operator+=(const Coefficient& b) { return *this = *this + b; }

    friend bool operator==(const Coefficient& a, const Coefficient& b);

private:
    explicit Coefficient(mpq_class q) : v_(std::move(q)) {}
    explicit Coefficient(ModP m) : v_(m) {}

    std::variant<mpq_class, ModP> v_;
};

} // namespace hahn
