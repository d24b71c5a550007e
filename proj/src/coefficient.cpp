#include "hahn/coefficient.hpp"

#include <charconv>

#include "hahn/detail/numeric_text.hpp"
#include "hahn/error.hpp"

namespace hahn {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return (a * b) % m;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

} // namespace

// Deterministic Miller-Rabin; bases 2, 3, 5, 7 cover every n < 3.2e9.
bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 3u, 5u, 7u}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
    return Field(FieldKind::prime, p);
}

Field Field::parse(std::string_view selector)
{
    if (selector == "q")
        return rationals();
    constexpr std::string_view prefix = "gf:";
    if (selector.substr(0, prefix.size()) == prefix) {
        const std::string_view digits = selector.substr(prefix.size());
        std::uint64_t p = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && p < (1ull << 31))
            return prime(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("unknown coefficient selector '" + std::string(selector) +
                                "' (expected q or gf:p)");
}

std::string Field::selector() const
{
    return kind_ == FieldKind::rational ? "q" : "gf:" + std::to_string(p_);
}

void require_same_field(const Field& a, const Field& b)
{
    if (!(a == b))
        throw FieldMismatch("coefficient field mismatch: " + a.selector() + " vs " + b.selector());
}

Coefficient Coefficient::zero(const Field& f)
{
    return from_int(0, f);
}

Coefficient Coefficient::one(const Field& f)
{
    return from_int(1, f);
}

Coefficient Coefficient::from_int(long v, const Field& f)
{
    if (f.kind() == FieldKind::rational)
        return Coefficient(mpq_class(v));
    return mod_p(v, f.modulus());
}

Coefficient Coefficient::rational(const mpq_class& q)
{
    mpq_class c(q);
    c.canonicalize();
    return Coefficient(std::move(c));
}

Coefficient Coefficient::rational(long num, long den)
{
    if (den == 0)
        throw DivisionByZero();
    return rational(mpq_class(num, den));
}

Coefficient Coefficient::mod_p(long v, std::uint32_t p)
{
    return Coefficient(ModP{reduce(mpz_class(v), p), p});
}

Coefficient Coefficient::from_rational(const mpq_class& q, const Field& f)
{
    if (f.kind() == FieldKind::rational)
        return rational(q);
    const std::uint32_t p = f.modulus();
    const std::uint32_t den = reduce(q.get_den(), p);
    if (den == 0)
        throw DivisionByZero("denominator divisible by the characteristic " + std::to_string(p));
    const Coefficient n(ModP{reduce(q.get_num(), p), p});
    return n * Coefficient(ModP{den, p}).inverse();
}

Coefficient Coefficient::parse(std::string_view text, const Field& f)
{
    return from_rational(detail::parse_rational(text), f);
}

Field Coefficient::field() const
{
    if (const auto* m = std::get_if<ModP>(&v_))
        return Field(FieldKind::prime, m->modulus);
    return Field::rationals();
}

bool Coefficient::is_zero() const
{
    if (const auto* m = std::get_if<ModP>(&v_))
        return m->value == 0;
    return std::get<mpq_class>(v_) == 0;
}

bool Coefficient::is_one() const
{
    if (const auto* m = std::get_if<ModP>(&v_))
        return m->value == 1;
    return std::get<mpq_class>(v_) == 1;
}

bool Coefficient::is_negative() const
{
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return sgn(*q) < 0;
    return false;
}

Coefficient Coefficient::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero coefficient");
    if (const auto* m = std::get_if<ModP>(&v_))
        return Coefficient(ModP{static_cast<std::uint32_t>(pow_mod(m->value, m->modulus - 2, m->modulus)),
                                m->modulus});
    mpq_class inv = 1 / std::get<mpq_class>(v_);
    inv.canonicalize();
    return Coefficient(std::move(inv));
}

Coefficient Coefficient::pow(long k) const
{
    if (k < 0)
        return inverse().pow(-k);
    Coefficient r = one(field());
    Coefficient b = *this;
    while (k) {
        if (k & 1)
            r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::string Coefficient::str() const
{
    if (const auto* m = std::get_if<ModP>(&v_))
        return std::to_string(m->value);
    return detail::rational_str(std::get<mpq_class>(v_));
}

namespace {

const Coefficient::ModP& mod_operand(const Coefficient& a, const Coefficient& b)
{
    require_same_field(a.field(), b.field());
    return a.as_mod_p();
}

} // namespace

Coefficient operator+(const Coefficient& a, const Coefficient& b)
{
    if (a.v_.index() == 0 && b.v_.index() == 0)
        return Coefficient(mpq_class(a.as_rational() + b.as_rational()));
    const auto& x = mod_operand(a, b);
    const auto& y = b.as_mod_p();
    return Coefficient(Coefficient::ModP{
        static_cast<std::uint32_t>((std::uint64_t(x.value) + y.value) % x.modulus), x.modulus});
}

Coefficient operator-(const Coefficient& a, const Coefficient& b)
{
    if (a.v_.index() == 0 && b.v_.index() == 0)
        return Coefficient(mpq_class(a.as_rational() - b.as_rational()));
    const auto& x = mod_operand(a, b);
    const auto& y = b.as_mod_p();
    return Coefficient(Coefficient::ModP{
        static_cast<std::uint32_t>((std::uint64_t(x.value) + x.modulus - y.value) % x.modulus),
        x.modulus});
}

Coefficient operator*(const Coefficient& a, const Coefficient& b)
{
    if (a.v_.index() == 0 && b.v_.index() == 0)
        return Coefficient(mpq_class(a.as_rational() * b.as_rational()));
    const auto& x = mod_operand(a, b);
    const auto& y = b.as_mod_p();
    return Coefficient(Coefficient::ModP{
        static_cast<std::uint32_t>(mul_mod(x.value, y.value, x.modulus)), x.modulus});
}

Coefficient operator/(const Coefficient& a, const Coefficient& b)
{
    require_same_field(a.field(), b.field());
    return a * b.inverse();
}

Coefficient operator-(const Coefficient& a)
{
    if (const auto* m = std::get_if<Coefficient::ModP>(&a.v_))
        return Coefficient(Coefficient::ModP{(m->modulus - m->value) % m->modulus, m->modulus});
    return Coefficient(mpq_class(-a.as_rational()));
}

bool operator==(const Coefficient& a, const Coefficient& b)
{
    require_same_field(a.field(), b.field());
    return a.v_ == b.v_;
}

} // namespace hahn
