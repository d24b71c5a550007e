#pragma once

// Lazily evaluated series whose support lies in a grid s + <g_1, ..., g_k>,
// the shift s plus the monoid generated by finitely many strictly positive
// exponents. Over an archimedean group every bound has finitely many grid
// points below it, so truncations are exact finite series.
//
// Values are immutable handles onto shared expression nodes. Coefficients and
// grid enumerations are memoized inside the nodes behind a mutex; concurrent
// readers observe the same values as a single-threaded evaluation would.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "hahn/series.hpp"

namespace hahn {

namespace detail {
class GridNode;
}

class GridSeries {
public:
    // Limit on grid points scanned when looking for a leading term.
    static constexpr std::size_t default_search_points = 4096;

    static GridSeries from_finite(const FiniteSeries& f);

    // 1/f. For f = c t^g (1 + e) with v(e) > 0 this is
    // c^{-1} t^{-g} (1 - e + e^2 - ...), evaluated coefficientwise.
    static GridSeries invert(const GridSeries& f, std::size_t search_points = default_search_points);
    static GridSeries invert(const FiniteSeries& f);

    const Group& group() const;
    const Field& field() const;
    const Exponent& shift() const;
    const std::vector<Exponent>& generators() const;

    // Grid points strictly below beta, ascending.
    std::vector<Exponent> grid_points_below(const Exponent& beta) const;

    // Exact coefficient; zero off the grid.
    Coefficient coeff_at(const Exponent& gamma) const;

    // f|_beta as a finite series.
    FiniteSeries truncate_below(const Exponent& beta) const;

    bool eq_below(const GridSeries& other, const Exponent& beta) const;

    // First exponent with a nonzero coefficient among the first
    // search_points grid points, if any.
    std::optional<Exponent> leading_exponent(std::size_t search_points = default_search_points) const;

    // Valuation restricted to exponents below beta; nullopt if every
    // coefficient below beta vanishes.
    std::optional<Exponent> valuation_below(const Exponent& beta) const;

    GridSeries scale(const Coefficient& c) const;

    friend GridSeries operator+(const GridSeries& a, const GridSeries& b);
    friend GridSeries operator-(const GridSeries& a, const GridSeries& b);
    friend GridSeries operator-(const GridSeries& a);
    friend GridSeries operator*(const GridSeries& a, const GridSeries& b);

private:
    explicit GridSeries(std::shared_ptr<const detail::GridNode> node) : node_(std::move(node)) {}

    std::shared_ptr<const detail::GridNode> node_;
};

// Largest exponent d with every generator an integer multiple of d.
Exponent lattice_gcd(const std::vector<Exponent>& gens);

} // namespace hahn
