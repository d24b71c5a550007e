#include "hahn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>

#include "hahn/checker.hpp"
#include "hahn/embedding.hpp"
#include "hahn/error.hpp"
#include "hahn/eval.hpp"
#include "hahn/models.hpp"

namespace hahn {

namespace {

struct Options {
    std::string group = "q";
    std::string coeff = "q";
    std::optional<std::string> bound;
    std::optional<std::size_t> max_terms;
    std::size_t samples = 200;
    std::optional<std::uint64_t> seed;
    bool json = false;
    std::string model = "hahn";
    std::string input;
};

// A usage problem (bad flag value, unknown model, ...), reported with exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void report_at(std::ostream& err, const std::string& msg, std::string_view input, std::size_t offset)
{
    err << "error: " << msg << " (offset " << offset << ")\n";
    err << "  " << input << "\n";
    err << "  " << std::string(std::min(offset, input.size()), ' ') << "^\n";
}

Group parse_group(const Options& o)
{
    try {
        return Group::parse(o.group);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

Field parse_field(const Options& o)
{
    try {
        return Field::parse(o.coeff);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::uint64_t resolve_seed(const Options& o)
{
    if (o.seed)
        return *o.seed;
    const char* env = std::getenv("HAHN_SEED");
    if (!env || !*env)
        return 0;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string_view(env).size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw UsageError("HAHN_SEED must be a non-negative integer, got '" + std::string(env) + "'");
    }
}

Exponent parse_bound(const std::string& text, const Group& g)
{
    try {
        return Exponent::parse(text, g);
    } catch (const ParseError& e) {
        throw UsageError("invalid --bound '" + text + "': " + e.what());
    }
}

// Parses and evaluates; parse and evaluation errors are printed here.
std::optional<Value> evaluate_input(const Options& o, const EvalContext& ctx, std::ostream& err)
{
    try {
        const ExprPtr e = parse_expr(o.input, ctx.group, ctx.field);
        return evaluate(*e, ctx);
    } catch (const ParseError& e) {
        report_at(err, std::string("parse error: ") + e.what(), o.input, e.offset());
    } catch (const EvalError& e) {
        const std::string_view input(o.input);
        report_at(err,
                  std::string("evaluation error in '") + std::string(input.substr(e.begin(), e.end() - e.begin())) +
                      "': " + e.what(),
                  input, e.begin());
    }
    return std::nullopt;
}

EvalContext make_context(const Options& o)
{
    const Group g = parse_group(o);
    const Field f = parse_field(o);
    const Exponent bound = o.bound ? parse_bound(*o.bound, g) : 10L * Exponent::unit(g);
    return EvalContext{g, f, bound};
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err)
{
    const EvalContext ctx = make_context(o);
    const auto v = evaluate_input(o, ctx, err);
    if (!v)
        return exit_usage;
    if (o.json)
        out << value_json(*v, ctx).dump() << "\n";
    else
        out << render(*v, ctx) << "\n";
    return exit_ok;
}

template <class S>
int emit_report(const S& model, const Options& o, std::ostream& out)
{
    const auto samples = make_series_samples(model.group(), model.field(), o.samples, resolve_seed(o));
    const CheckReport report = check_all(model, samples);
    if (o.json)
        out << report.to_json().dump(2) << "\n";
    else
        out << report.to_text();
    return report.all_passed() ? exit_ok : exit_check_failed;
}

int cmd_check(const Options& o, std::ostream& out)
{
    const Group g = parse_group(o);
    const Field f = parse_field(o);
    if (o.samples == 0)
        throw UsageError("--samples must be positive");
    if (is_twisted_selector(o.model)) {
        if (!(g == Group::integers()))
            throw UsageError("model twisted needs --group z");
        return emit_report(TwistedModel(f), o, out);
    }
    Mutation m;
    try {
        m = parse_mutation(o.model);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return emit_report(HahnModel(g, f, m), o, out);
}

std::string pairs_str(const FiniteSeries& f)
{
    std::string out = "[";
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first)
            out += ",";
        first = false;
        out += "(" + t.exponent.str() + "," + t.coeff.str() + ")";
    }
    return out + "]";
}

void print_embedding(const EmbeddingResult& r, const Options& o, std::ostream& out)
{
    if (o.json) {
        Json j = to_json(r.series);
        j["exhausted"] = r.exhausted;
        j["stop"] = stop_str(r.stop);
        j["terms_emitted"] = r.terms_emitted;
        j["residual_valuation"] = r.residual_valuation ? to_json(*r.residual_valuation) : Json(nullptr);
        out << j.dump() << "\n";
        return;
    }
    out << pairs_str(r.series) << (r.exhausted ? " exhausted" : " not exhausted") << "\n";
}

int cmd_embed(const Options& o, std::ostream& out, std::ostream& err)
{
    EvalContext ctx = make_context(o);
    if (o.max_terms && *o.max_terms == 0 && !o.bound)
        throw UsageError("--max-terms 0 removes the term limit, so --bound is required");

    const bool twisted = is_twisted_selector(o.model);
    Mutation m = Mutation::none;
    if (!twisted) {
        try {
            m = parse_mutation(o.model);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    } else if (!(ctx.group == Group::integers())) {
        throw UsageError("model twisted needs --group z");
    }

    const auto v = evaluate_input(o, ctx, err);
    if (!v)
        return exit_usage;

    // Without flags: up to 1000 terms, and for grid inputs only the terms
    // below the display bound.
    Budget budget;
    if (o.bound || (!o.max_terms && std::holds_alternative<GridSeries>(*v)))
        budget.exponent_bound = ctx.display_bound;
    if (!o.max_terms)
        budget.max_terms = 1000;
    else if (*o.max_terms > 0)
        budget.max_terms = *o.max_terms;

    try {
        if (const auto* f = std::get_if<FiniteSeries>(&*v)) {
            const EmbeddingResult r =
                twisted ? embed(TwistedModel(ctx.field), *f, budget) : embed(HahnModel(ctx.group, ctx.field, m), *f, budget);
            print_embedding(r, o, out);
            return exit_ok;
        }
        if (const auto* g = std::get_if<GridSeries>(&*v)) {
            if (twisted || m != Mutation::none)
                throw UsageError("grid-series input can only be embedded with model hahn");
            print_embedding(embed(GridModel(ctx.group, ctx.field), *g, budget), o, out);
            return exit_ok;
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        err << "error: embedding failed: " << e.what() << "\n";
        return exit_usage;
    }
    throw UsageError("embed needs a series expression");
}

void add_common(CLI::App* sub, Options& o)
{
    sub->add_option("--group", o.group, "value group: z, q, q2lex or qnlex:n");
    sub->add_option("--coeff", o.coeff, "coefficient field: q or gf:p");
    sub->add_flag("--json", o.json, "machine-readable output");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact Hahn series arithmetic, truncation-structure checks and embeddings", "hahn"};
    app.require_subcommand(1, 1);

    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression");
    eval->add_option("expr", o.input, "expression, e.g. \"(1+t)*(1-t)\"")->required();
    add_common(eval, o);
    eval->add_option("--bound", o.bound, "show grid series truncated below this exponent (default 10)");

    CLI::App* check = app.add_subcommand("check", "check the truncation axioms and lemmas on a model");
    check->add_option("model", o.model,
                      "hahn, twisted, mutant:le-trunc, mutant:bad-tau-hom, mutant:bad-tau-sp or "
                      "mutant:nonadditive-trunc");
    add_common(check, o);
    check->add_option("--samples", o.samples, "number of sample elements (default 200)");
    check->add_option("--seed", o.seed, "RNG seed (default: $HAHN_SEED, else 0)");

    CLI::App* emb = app.add_subcommand("embed", "read off the series representation of an element");
    emb->add_option("expr", o.input, "expression")->required();
    add_common(emb, o);
    emb->add_option("--model", o.model, "structure to embed from (default hahn)");
    emb->add_option("--bound", o.bound, "only produce terms below this exponent");
    emb->add_option("--max-terms", o.max_terms, "term budget (default 1000; 0 = unlimited, needs --bound)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (eval->parsed())
            return cmd_eval(o, out, err);
        if (check->parsed())
            return cmd_check(o, out);
        return cmd_embed(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace hahn
