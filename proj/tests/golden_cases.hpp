#pragma once

// Shared CLI golden corpus. Each case's combined output lives in
// HAHN_GOLDEN_DIR/<name>.out; set HAHN_UPDATE_GOLDEN=1 to rewrite them.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hahn/cli.hpp"

namespace golden {

struct Case {
    std::string name;
    std::vector<std::string> args;
    int exit_code;
};

inline const std::vector<Case>& corpus()
{
    static const std::vector<Case> cases = {
        {"eval_product", {"eval", "(1+t)*(1-t)"}, 0},
        {"eval_product_json", {"eval", "(1+t)*(1-t)", "--json"}, 0},
        {"eval_geometric_bound4", {"eval", "1/(1-t)", "--bound", "4"}, 0},
        {"eval_geometric_json", {"eval", "1/(1-t)", "--bound", "4", "--json"}, 0},
        {"eval_support", {"eval", "sp(t^(-1) + t^2)"}, 0},
        {"eval_support_json", {"eval", "sp(t^(-1) + t^2)", "--json"}, 0},
        {"eval_inverse_cubic", {"eval", "inv(1+t+t^2)"}, 0},
        {"eval_puiseux_inverse", {"eval", "1/(1 - t^(1/2) - t^(1/3))", "--bound", "3/2"}, 0},
        {"eval_rational_power", {"eval", "(t^(1/2) + 2)^3"}, 0},
        {"eval_negative_leading", {"eval", "--", "-t^2 + 1"}, 0},
        {"eval_valuation", {"eval", "v(t^(-3/2) + 5)"}, 0},
        {"eval_valuation_zero", {"eval", "v(t - t)"}, 0},
        {"eval_valuation_json", {"eval", "v(3*t^(2/3))", "--json"}, 0},
        {"eval_trunc", {"eval", "trunc(1 + t + t^2 + t^3, 2)"}, 0},
        {"eval_term", {"eval", "term((1+t)^4, 2)"}, 0},
        {"eval_lead", {"eval", "lead(t^3 + 7*t^(-1))"}, 0},
        {"eval_gf5", {"eval", "(2+3*t)*(4+t)", "--coeff", "gf:5"}, 0},
        {"eval_gf5_json", {"eval", "(2+3*t)*(4+t)", "--coeff", "gf:5", "--json"}, 0},
        {"eval_gf5_inverse", {"eval", "1/(1+t+t^2)", "--coeff", "gf:5", "--bound", "5"}, 0},
        {"eval_z_group", {"eval", "t^-2 * (1 + t)^2", "--group", "z"}, 0},
        {"eval_lex", {"eval", "(t^(1, 0) + t^(0, 1))^2", "--group", "q2lex"}, 0},
        {"eval_lex_monomial_division", {"eval", "(t^(1,0) + 1)/t^(0,1/2)", "--group", "q2lex", "--json"}, 0},
        {"eval_lex_bare_t", {"eval", "1 + t", "--group", "q2lex"}, 2},
        {"eval_lex_division", {"eval", "1/(1 - t^(1, 0))", "--group", "q2lex"}, 2},
        {"eval_parse_zero_denominator", {"eval", "t^(1/0)"}, 2},
        {"eval_parse_unbalanced", {"eval", "(1 + t"}, 2},
        {"eval_unknown_function", {"eval", "sin(t)"}, 2},
        {"eval_division_by_zero", {"eval", "1/(t - t)"}, 2},
        {"eval_support_grid", {"eval", "sp(1/(1-t))"}, 2},
        {"eval_bad_group", {"eval", "t", "--group", "r"}, 2},
        {"check_hahn", {"check", "hahn", "--samples", "40", "--seed", "7"}, 0},
        {"check_hahn_lex_gf5_json", {"check", "hahn", "--group", "q2lex", "--coeff", "gf:5", "--samples", "20", "--seed", "3", "--json"}, 0},
        {"check_twisted", {"check", "twisted", "--group", "z", "--samples", "30", "--seed", "2"}, 0},
        {"check_le_trunc", {"check", "mutant:le-trunc", "--samples", "30", "--seed", "7", "--json"}, 1},
        {"check_bad_tau_hom", {"check", "mutant:bad-tau-hom", "--samples", "30", "--seed", "7", "--json"}, 1},
        {"check_bad_tau_sp", {"check", "mutant:bad-tau-sp", "--samples", "30", "--seed", "7"}, 1},
        {"check_nonadditive_trunc", {"check", "mutant:nonadditive-trunc", "--samples", "30", "--seed", "7"}, 1},
        {"check_unknown_model", {"check", "mutant:nope"}, 2},
        {"check_twisted_wrong_group", {"check", "twisted", "--group", "q"}, 2},
        {"embed_self", {"embed", "2 + t^(1/2)"}, 0},
        {"embed_self_json", {"embed", "2 + t^(1/2)", "--json"}, 0},
        {"embed_zero", {"embed", "0"}, 0},
        {"embed_geometric_prefix", {"embed", "1/(1-t)", "--max-terms", "3"}, 0},
        {"embed_geometric_bound_json", {"embed", "1/(1-t)", "--bound", "5/2", "--json"}, 0},
        {"embed_geometric_default", {"embed", "1/(1-t)"}, 0},
        {"embed_twisted", {"embed", "t^3 + 2", "--model", "twisted", "--group", "z"}, 0},
        {"embed_twisted_gf5", {"embed", "t^3", "--model", "twisted", "--group", "z", "--coeff", "gf:5"}, 0},
        {"embed_lex_json", {"embed", "t^(0,1) + 3*t^(1,-1)", "--group", "q2lex", "--json"}, 0},
        {"embed_unlimited_without_bound", {"embed", "1/(1-t)", "--max-terms", "0"}, 2},
        {"embed_grid_mutant", {"embed", "1/(1-t)", "--model", "mutant:le-trunc"}, 2},
        {"no_subcommand", {}, 2},
    };
    return cases;
}

struct Outcome {
    int exit_code;
    std::string text;
};

inline Outcome run(const Case& c)
{
    std::ostringstream out, err;
    const int code = hahn::run_cli(c.args, out, err);
    std::string text = "$ hahn";
    for (const auto& a : c.args)
        text += " '" + a + "'";
    text += "\n--- stdout\n" + out.str() + "--- stderr\n" + err.str() + "--- exit " + std::to_string(code) + "\n";
    return {code, text};
}

inline std::string path(const Case& c) { return std::string(HAHN_GOLDEN_DIR) + "/" + c.name + ".out"; }

inline bool read(const Case& c, std::string& text)
{
    std::ifstream in(path(c), std::ios::binary);
    if (!in)
        return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    return true;
}

inline void write(const Case& c, const std::string& text)
{
    std::ofstream(path(c), std::ios::binary) << text;
}

inline bool updating()
{
    const char* v = std::getenv("HAHN_UPDATE_GOLDEN");
    return v && std::string(v) == "1";
}

} // namespace golden
