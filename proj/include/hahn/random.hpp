#pragma once

// Deterministic generators for property tests and the axiom checker.
// Draws go through raw mt19937_64 output (no std distributions) so a seed
// reproduces the same values on every standard library.

#include <cstddef>
#include <cstdint>
#include <random>

#include "hahn/series.hpp"

namespace hahn {

class SampleGen {
public:
    SampleGen(Group group, Field field, std::uint64_t seed) : group_(group), field_(field), rng_(seed) {}

    const Group& group() const noexcept { return group_; }
    const Field& field() const noexcept { return field_; }

    std::uint64_t next() { return rng_(); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
    long in_range(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool chance(unsigned percent) { return below(100) < percent; }

    // Small exponents; spread widens the range (used for long series).
    Exponent exponent(long spread = 1);
    Exponent positive_exponent();

    Coefficient coefficient();     // nonzero
    Coefficient any_coefficient(); // may be zero

    // A random canonical series with at most max_terms terms (cancellation
    // can leave fewer).
    FiniteSeries series(std::size_t max_terms, long spread = 1);

private:
    Group group_;
    Field field_;
    std::mt19937_64 rng_;
};

// Mixes a base seed with a stream index (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace hahn
