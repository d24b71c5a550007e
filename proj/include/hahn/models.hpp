#pragma once

// Built-in truncation structures.
//
//  HahnModel    finite-support series with the usual truncation and
//               tau^g = t^g; optionally broken by one Mutation.
//  TwistedModel Gamma = Z, the usual truncation, tau^n = b^n t^n for a unit b.
//               A genuine truncation structure whose embedding is not the
//               identity on the carrier.
//  GridModel    grid series under the usual truncation; used for embedding
//               elements with infinite support (no finite sp-probe).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hahn/grid_series.hpp"
#include "hahn/series.hpp"
#include "hahn/structure.hpp"

namespace hahn {

enum class Mutation {
    none,
    le_trunc,          // f|_a keeps the term at a
    bad_tau_hom,       // tau^g = 2 t^g
    bad_tau_sp,        // tau^g = t^g + t^{g+u}
    nonadditive_trunc, // (1 + t^u)|_a gets an extra t^a for a > 0
};

std::string mutation_selector(Mutation m);

class HahnModel {
public:
    using element_type = FiniteSeries;

    HahnModel(Group group, Field field, Mutation mutation = Mutation::none);

    const Group& group() const { return group_; }
    const Field& field() const { return field_; }
    Mutation mutation() const { return mutation_; }
    std::string name() const;

    FiniteSeries add(const FiniteSeries& f, const FiniteSeries& g) const { return f + g; }
    FiniteSeries neg(const FiniteSeries& f) const { return -f; }
    FiniteSeries mul(const FiniteSeries& f, const FiniteSeries& g) const { return f * g; }
    // Only elements of P are invertible inside finite supports.
    FiniteSeries inv(const FiniteSeries& f) const { return f.invert_monomial(); }
    FiniteSeries constant(const Coefficient& c) const { return FiniteSeries::constant(c, group_); }
    bool equal(const FiniteSeries& f, const FiniteSeries& g) const { return f == g; }
    bool is_zero(const FiniteSeries& f) const { return f.is_zero(); }

    ExtendedExponent value(const FiniteSeries& f) const { return f.valuation(); }
    Coefficient residue(const FiniteSeries& f) const;
    FiniteSeries trunc(const FiniteSeries& f, const Exponent& alpha) const;
    FiniteSeries tau(const Exponent& gamma) const;

    std::vector<Exponent> sp_probe(const FiniteSeries& f) const { return f.support(); }
    bool sp_probe_exact() const { return true; }
    bool concurrent_safe() const { return true; }

    std::string render(const FiniteSeries& f) const { return f.str(); }

    // The input the non-additive mutant treats specially.
    FiniteSeries special_input() const;

private:
    Group group_;
    Field field_;
    Mutation mutation_;
};

class TwistedModel {
public:
    using element_type = FiniteSeries;

    // base must be a unit of the coefficient field; the group is Z.
    TwistedModel(Field field, Coefficient base);
    explicit TwistedModel(Field field) : TwistedModel(field, Coefficient::from_int(2, field)) {}

    Group group() const { return Group::integers(); }
    const Field& field() const { return base_model_.field(); }
    std::string name() const { return "twisted"; }
    const Coefficient& base() const { return base_; }

    FiniteSeries add(const FiniteSeries& f, const FiniteSeries& g) const { return f + g; }
    FiniteSeries neg(const FiniteSeries& f) const { return -f; }
    FiniteSeries mul(const FiniteSeries& f, const FiniteSeries& g) const { return f * g; }
    FiniteSeries inv(const FiniteSeries& f) const { return f.invert_monomial(); }
    FiniteSeries constant(const Coefficient& c) const { return base_model_.constant(c); }
    bool equal(const FiniteSeries& f, const FiniteSeries& g) const { return f == g; }
    bool is_zero(const FiniteSeries& f) const { return f.is_zero(); }

    ExtendedExponent value(const FiniteSeries& f) const { return f.valuation(); }
    Coefficient residue(const FiniteSeries& f) const { return base_model_.residue(f); }
    FiniteSeries trunc(const FiniteSeries& f, const Exponent& alpha) const { return f.truncate(alpha); }
    FiniteSeries tau(const Exponent& gamma) const;

    std::vector<Exponent> sp_probe(const FiniteSeries& f) const { return f.support(); }
    bool sp_probe_exact() const { return true; }
    bool concurrent_safe() const { return true; }

    std::string render(const FiniteSeries& f) const { return f.str(); }

private:
    HahnModel base_model_;
    Coefficient base_;
};

class GridModel {
public:
    using element_type = GridSeries;

    GridModel(Group group, Field field, std::size_t search_points = GridSeries::default_search_points);

    const Group& group() const { return group_; }
    const Field& field() const { return field_; }
    std::string name() const { return "hahn-grid"; }

    GridSeries add(const GridSeries& f, const GridSeries& g) const { return f + g; }
    GridSeries neg(const GridSeries& f) const { return -f; }
    GridSeries mul(const GridSeries& f, const GridSeries& g) const { return f * g; }
    GridSeries inv(const GridSeries& f) const { return GridSeries::invert(f, search_points_); }
    GridSeries constant(const Coefficient& c) const;
    // Decidable only up to the search limit; see is_zero.
    bool equal(const GridSeries& f, const GridSeries& g) const { return is_zero(f - g); }
    // True iff no nonzero coefficient occurs among the first search_points
    // grid points.
    bool is_zero(const GridSeries& f) const { return !f.leading_exponent(search_points_).has_value(); }

    // Throws Undetermined when the leading term lies beyond the search limit.
    ExtendedExponent value(const GridSeries& f) const;
    Coefficient residue(const GridSeries& f) const;
    GridSeries trunc(const GridSeries& f, const Exponent& alpha) const;
    GridSeries tau(const Exponent& gamma) const;

    std::string render(const GridSeries& f) const;

private:
    Group group_;
    Field field_;
    std::size_t search_points_;
};

// Selectors: "hahn", "twisted", "mutant:le-trunc", "mutant:bad-tau-hom",
// "mutant:bad-tau-sp", "mutant:nonadditive-trunc".
bool is_twisted_selector(std::string_view selector);
Mutation parse_mutation(std::string_view selector);

// Random carrier series plus the distinguished elements 0, 1, t^u, 1 + t^u
// (u the group's unit) at the front.
SampleSet<FiniteSeries> make_series_samples(const Group& group, const Field& field, std::size_t count,
                                            std::uint64_t seed, std::size_t max_terms = 5);

} // namespace hahn
