#pragma once

// Exact evaluation of parsed expressions.
//
// Values stay finite-support series as long as possible. Dividing by a
// non-monomial (or a negative power of one) produces a grid series, which is
// only possible over archimedean groups.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hahn/expr.hpp"
#include "hahn/grid_series.hpp"
#include "hahn/json_io.hpp"
#include "hahn/series.hpp"

namespace hahn {

struct SupportSet {
    std::vector<Exponent> points;
};

using Value = std::variant<FiniteSeries, GridSeries, SupportSet, ExtendedExponent>;

// An evaluation failure inside the sub-expression at [begin, end).
class EvalError : public std::runtime_error {
public:
    EvalError(const std::string& what, std::size_t begin, std::size_t end)
        : std::runtime_error(what), begin_(begin), end_(end) {}

    std::size_t begin() const noexcept { return begin_; }
    std::size_t end() const noexcept { return end_; }

private:
    std::size_t begin_, end_;
};

struct EvalContext {
    Group group;
    Field field;
    // Grid values are shown truncated below this exponent.
    Exponent display_bound;
    std::size_t search_points = GridSeries::default_search_points;
};

Value evaluate(const Expr& e, const EvalContext& ctx);

std::string render(const Value& v, const EvalContext& ctx);
Json value_json(const Value& v, const EvalContext& ctx);

} // namespace hahn
