#pragma once

// Convolution kernels for finite-support series. multiply_serial is the
// reference implementation; multiply_parallel splits the rows of the left
// factor across OpenMP threads and reduces the partial products by a
// pairwise sorted merge. Both are exact and return identical results.

#include <cstddef>
#include <span>
#include <vector>

#include "hahn/series.hpp"

namespace hahn::kernels {

// Sorted merge of two canonical term lists, adding coefficients on equal
// exponents and dropping cancellations.
std::vector<Term> merge_add(std::span<const Term> a, std::span<const Term> b);

// Product of the canonical term lists, computed as a heap-driven k-way merge
// of the rows a_i * b (each row is already sorted).
std::vector<Term> convolve_rows(std::span<const Term> a, std::span<const Term> b);

FiniteSeries multiply_serial(const FiniteSeries& a, const FiniteSeries& b);
FiniteSeries multiply_parallel(const FiniteSeries& a, const FiniteSeries& b);

// Below this many term pairs the parallel kernel falls back to serial.
inline constexpr std::size_t parallel_threshold = 4096;

// Dispatching entry point used by operator*.
FiniteSeries multiply(const FiniteSeries& a, const FiniteSeries& b);

int max_threads();

} // namespace hahn::kernels
