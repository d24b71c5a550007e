#include "hahn/eval.hpp"

#include "hahn/error.hpp"

namespace hahn {

namespace {

constexpr long max_power = 4096;

struct Evaluator {
    const EvalContext& ctx;

    [[noreturn]] static void fail(const Expr& e, const std::string& msg) { throw EvalError(msg, e.begin, e.end); }

    Value run(const Expr& e)
    {
        try {
            return step(e);
        } catch (const EvalError&) {
            throw;
        } catch (const std::exception& ex) {
            fail(e, ex.what());
        }
    }

    const FiniteSeries* finite(const Value& v) { return std::get_if<FiniteSeries>(&v); }

    GridSeries grid(const Expr& at, const Value& v)
    {
        if (const auto* f = finite(v))
            return GridSeries::from_finite(*f);
        if (const auto* g = std::get_if<GridSeries>(&v))
            return *g;
        fail(at, "expected a series operand");
    }

    void require_series(const Expr& at, const Value& v)
    {
        if (!std::holds_alternative<FiniteSeries>(v) && !std::holds_alternative<GridSeries>(v))
            fail(at, "expected a series operand");
    }

    void require_archimedean(const Expr& at)
    {
        if (!ctx.group.archimedean())
            fail(at, "division by a non-monomial needs an archimedean group; " + ctx.group.selector() + " is not");
    }

    Value inverse(const Expr& at, const Value& v)
    {
        require_series(at, v);
        if (const auto* f = finite(v)) {
            if (f->is_zero())
                throw DivisionByZero();
            if (f->is_monomial())
                return f->invert_monomial();
            require_archimedean(at);
            return GridSeries::invert(GridSeries::from_finite(*f), ctx.search_points);
        }
        return GridSeries::invert(std::get<GridSeries>(v), ctx.search_points);
    }

    template <class FiniteOp, class GridOp>
    Value binary(const Expr& e, FiniteOp fop, GridOp gop)
    {
        const Value a = run(*e.args[0]);
        const Value b = run(*e.args[1]);
        require_series(*e.args[0], a);
        require_series(*e.args[1], b);
        if (finite(a) && finite(b))
            return fop(*finite(a), *finite(b));
        return gop(grid(*e.args[0], a), grid(*e.args[1], b));
    }

    Value multiply(const Value& a, const Value& b, const Expr& e)
    {
        if (finite(a) && finite(b))
            return *finite(a) * *finite(b);
        return grid(e, a) * grid(e, b);
    }

    Value power(const Expr& e)
    {
        if (e.power > max_power || e.power < -max_power)
            fail(e, "power exceeds " + std::to_string(max_power));
        Value base = run(*e.args[0]);
        require_series(*e.args[0], base);
        long k = e.power;
        if (k < 0) {
            base = inverse(e, base);
            k = -k;
        }
        if (const auto* f = finite(base))
            return f->pow(k);
        Value result = FiniteSeries::constant(Coefficient::one(ctx.field), ctx.group);
        while (k) {
            if (k & 1)
                result = multiply(result, base, e);
            k >>= 1;
            if (k)
                base = multiply(base, base, e);
        }
        return result;
    }

    Value call(const Expr& e)
    {
        const Value arg = run(*e.args[0]);
        require_series(*e.args[0], arg);
        const FiniteSeries* f = finite(arg);
        const GridSeries* g = std::get_if<GridSeries>(&arg);

        switch (e.function) {
        case Function::trunc:
            return f ? f->truncate(*e.exponent) : g->truncate_below(*e.exponent);
        case Function::sp:
            if (g)
                fail(e, "sp of a grid series is infinite in general; use sp(trunc(e, a))");
            return SupportSet{f->support()};
        case Function::v:
            if (f)
                return f->valuation();
            if (auto lead = g->leading_exponent(ctx.search_points))
                return ExtendedExponent(*lead);
            if (g->generators().empty())
                return ExtendedExponent(Infinity{});
            throw Undetermined("valuation not found within " + std::to_string(ctx.search_points) + " grid points");
        case Function::lead:
            if (f)
                return f->leading_term();
            if (auto lead = g->leading_exponent(ctx.search_points))
                return FiniteSeries::monomial(g->coeff_at(*lead), *lead);
            if (g->generators().empty())
                return FiniteSeries::zero(ctx.group, ctx.field);
            throw Undetermined("leading term not found within " + std::to_string(ctx.search_points) + " grid points");
        case Function::term: {
            if (f)
                return f->gamma_term(*e.exponent);
            const Coefficient c = g->coeff_at(*e.exponent);
            return c.is_zero() ? FiniteSeries::zero(ctx.group, ctx.field) : FiniteSeries::monomial(c, *e.exponent);
        }
        case Function::inv:
            return inverse(e, arg);
        }
        fail(e, "unknown function");
    }

    Value step(const Expr& e)
    {
        switch (e.kind) {
        case ExprKind::number:
            return FiniteSeries::constant(*e.number, ctx.group);
        case ExprKind::monomial:
            return FiniteSeries::monomial(Coefficient::one(ctx.field), *e.exponent);
        case ExprKind::add:
            return binary(
                e, [](const FiniteSeries& a, const FiniteSeries& b) { return a + b; },
                [](const GridSeries& a, const GridSeries& b) { return a + b; });
        case ExprKind::sub:
            return binary(
                e, [](const FiniteSeries& a, const FiniteSeries& b) { return a - b; },
                [](const GridSeries& a, const GridSeries& b) { return a - b; });
        case ExprKind::mul:
            return binary(
                e, [](const FiniteSeries& a, const FiniteSeries& b) { return a * b; },
                [](const GridSeries& a, const GridSeries& b) { return a * b; });
        case ExprKind::div: {
            const Value num = run(*e.args[0]);
            require_series(*e.args[0], num);
            const Value den = inverse(*e.args[1], run(*e.args[1]));
            return multiply(num, den, e);
        }
        case ExprKind::neg: {
            const Value a = run(*e.args[0]);
            require_series(*e.args[0], a);
            if (const auto* f = finite(a))
                return -*f;
            return -std::get<GridSeries>(a);
        }
        case ExprKind::pow:
            return power(e);
        case ExprKind::call:
            return call(e);
        }
        fail(e, "unknown expression");
    }
};

std::string support_str(const std::vector<Exponent>& pts)
{
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            out += ", ";
        out += pts[i].str();
    }
    return out + "}";
}

} // namespace

Value evaluate(const Expr& e, const EvalContext& ctx)
{
    return Evaluator{ctx}.run(e);
}

std::string render(const Value& v, const EvalContext& ctx)
{
    if (const auto* f = std::get_if<FiniteSeries>(&v))
        return f->str();
    if (const auto* g = std::get_if<GridSeries>(&v))
        return g->truncate_below(ctx.display_bound).str() + " (truncated below " + ctx.display_bound.str() + ")";
    if (const auto* s = std::get_if<SupportSet>(&v))
        return support_str(s->points);
    return to_string(std::get<ExtendedExponent>(v));
}

Json value_json(const Value& v, const EvalContext& ctx)
{
    if (const auto* f = std::get_if<FiniteSeries>(&v))
        return to_json(*f);
    if (const auto* g = std::get_if<GridSeries>(&v)) {
        Json j = to_json(g->truncate_below(ctx.display_bound));
        j["truncated_below"] = ctx.display_bound.str();
        return j;
    }
    Json j{{"group", ctx.group.selector()}, {"coeff", ctx.field.selector()}};
    if (const auto* s = std::get_if<SupportSet>(&v)) {
        Json pts = Json::array();
        for (const auto& p : s->points)
            pts.push_back(p.str());
        j["sp"] = std::move(pts);
        return j;
    }
    j["valuation"] = to_json(std::get<ExtendedExponent>(v));
    return j;
}

} // namespace hahn
