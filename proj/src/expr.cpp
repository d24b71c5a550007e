#include "hahn/expr.hpp"

#include <cctype>

#include "hahn/detail/numeric_text.hpp"
#include "hahn/error.hpp"

namespace hahn {

std::string function_name(Function f)
{
    switch (f) {
    case Function::trunc:
        return "trunc";
    case Function::sp:
        return "sp";
    case Function::v:
        return "v";
    case Function::lead:
        return "lead";
    case Function::term:
        return "term";
    case Function::inv:
        return "inv";
    }
    return {};
}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    Parser(std::string_view src, const Group& group, const Field& field) : src_(src), group_(group), field_(field) {}

    ExprPtr parse()
    {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ < src_.size())
            fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(pos_ < src_.size() ? "expected '" + std::string(1, c) + "', found '" + std::string(1, src_[pos_]) + "'"
                                    : "expected '" + std::string(1, c) + "' at end of input");
    }

    ExprPtr node(ExprKind kind, std::size_t begin, std::vector<ExprPtr> args)
    {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->begin = begin;
        e->end = pos_;
        e->args = std::move(args);
        return e;
    }

    ExprPtr expr()
    {
        skip_ws();
        const std::size_t begin = pos_;
        ExprPtr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = node(ExprKind::add, begin, {lhs, term()});
            else if (accept('-'))
                lhs = node(ExprKind::sub, begin, {lhs, term()});
            else
                return lhs;
        }
    }

    ExprPtr term()
    {
        skip_ws();
        const std::size_t begin = pos_;
        ExprPtr lhs = unary();
        for (;;) {
            if (accept('*'))
                lhs = node(ExprKind::mul, begin, {lhs, unary()});
            else if (accept('/'))
                lhs = node(ExprKind::div, begin, {lhs, unary()});
            else
                return lhs;
        }
    }

    ExprPtr unary()
    {
        skip_ws();
        const std::size_t begin = pos_;
        if (accept('-'))
            return node(ExprKind::neg, begin, {unary()});
        return factor();
    }

    ExprPtr factor()
    {
        skip_ws();
        const std::size_t begin = pos_;
        ExprPtr base = atom();
        if (!accept('^'))
            return base;
        skip_ws();
        const std::size_t at = pos_;
        bool negative = false;
        if (pos_ < src_.size() && src_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        const std::size_t digits = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_]))
            ++pos_;
        if (pos_ == digits)
            fail_at("expected an integer power after '^'", at);
        if (pos_ - digits > 6)
            fail_at("power too large", at);
        long k = std::stol(std::string(src_.substr(digits, pos_ - digits)));
        auto e = std::const_pointer_cast<Expr>(node(ExprKind::pow, begin, {base}));
        e->power = negative ? -k : k;
        return e;
    }

    std::size_t scan_digits()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_]))
            ++pos_;
        return pos_ - start;
    }

    // Raw text up to the ')' closing the current level; leaves pos_ on it.
    std::string_view raw_until_close(std::size_t open_at)
    {
        const std::size_t start = pos_;
        int depth = 0;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '(')
                ++depth;
            else if (c == ')') {
                if (depth == 0)
                    return src_.substr(start, pos_ - start);
                --depth;
            }
            ++pos_;
        }
        fail_at("unbalanced '('", open_at);
    }

    Exponent exponent_text(std::string_view raw, std::size_t at, bool allow_bare_tuple)
    {
        std::size_t lead = 0;
        const std::string_view trimmed = detail::trim(raw, &lead);
        const bool wrap = allow_bare_tuple && !group_.archimedean() && (trimmed.empty() || trimmed.front() != '(');
        try {
            if (wrap)
                return Exponent::parse("(" + std::string(raw) + ")", group_);
            return Exponent::parse(raw, group_);
        } catch (const ParseError& e) {
            const std::size_t rel = wrap && e.offset() > 0 ? e.offset() - 1 : e.offset();
            throw ParseError(e.what(), at + rel);
        }
    }

    ExprPtr atom()
    {
        skip_ws();
        const std::size_t begin = pos_;
        if (pos_ >= src_.size())
            fail("unexpected end of input");
        const char c = src_[pos_];

        if (is_digit(c)) {
            scan_digits();
            if (pos_ + 1 < src_.size() && src_[pos_] == '/' && is_digit(src_[pos_ + 1])) {
                ++pos_;
                scan_digits();
            }
            const std::string_view text = src_.substr(begin, pos_ - begin);
            auto e = std::const_pointer_cast<Expr>(node(ExprKind::number, begin, {}));
            try {
                e->number = Coefficient::parse(text, field_);
            } catch (const ParseError& err) {
                fail_at(err.what(), begin + err.offset());
            } catch (const std::exception& err) {
                fail_at(err.what(), begin);
            }
            return e;
        }

        if (is_alpha(c)) {
            while (pos_ < src_.size() && (is_alpha(src_[pos_]) || is_digit(src_[pos_]) || src_[pos_] == '_'))
                ++pos_;
            const std::string name(src_.substr(begin, pos_ - begin));
            if (name == "t" && !peek('('))
                return monomial(begin);
            if (!peek('('))
                fail_at("unknown identifier '" + name + "'", begin);
            return call(name, begin);
        }

        if (accept('(')) {
            ExprPtr inner = expr();
            expect(')');
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    ExprPtr monomial(std::size_t begin)
    {
        const std::size_t save = pos_;
        if (accept('^') && accept('(')) {
            const std::size_t open_at = pos_ - 1;
            const std::size_t at = pos_;
            const std::string_view raw = raw_until_close(open_at);
            Exponent exp = exponent_text(raw, at, true);
            ++pos_;
            auto e = std::const_pointer_cast<Expr>(node(ExprKind::monomial, begin, {}));
            e->exponent = std::move(exp);
            return e;
        }
        pos_ = save;
        if (!group_.archimedean())
            fail_at("bare t is ambiguous in group " + group_.selector() + "; write t^(a, b)", begin);
        auto e = std::const_pointer_cast<Expr>(node(ExprKind::monomial, begin, {}));
        e->exponent = Exponent::unit(group_);
        return e;
    }

    ExprPtr call(const std::string& name, std::size_t begin)
    {
        static const std::pair<const char*, Function> table[] = {
            {"trunc", Function::trunc}, {"sp", Function::sp},     {"v", Function::v},
            {"lead", Function::lead},   {"term", Function::term}, {"inv", Function::inv},
        };
        std::optional<Function> fn;
        for (const auto& [n, f] : table)
            if (name == n)
                fn = f;
        if (!fn)
            fail_at("unknown function '" + name + "' (expected trunc, sp, v, lead, term or inv)", begin);

        expect('(');
        const std::size_t open_at = pos_ - 1;
        ExprPtr arg = expr();
        std::optional<Exponent> exp;
        if (*fn == Function::trunc || *fn == Function::term) {
            expect(',');
            const std::size_t at = pos_;
            const std::string_view raw = raw_until_close(open_at);
            exp = exponent_text(raw, at, false);
        }
        expect(')');
        auto e = std::const_pointer_cast<Expr>(node(ExprKind::call, begin, {arg}));
        e->function = *fn;
        e->exponent = std::move(exp);
        return e;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Group group_;
    Field field_;
};

} // namespace

ExprPtr parse_expr(std::string_view input, const Group& group, const Field& field)
{
    return Parser(input, group, field).parse();
}

} // namespace hahn
