#include "hahn/kernels.hpp"

#include <algorithm>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hahn::kernels {

std::vector<Term> merge_add(std::span<const Term> a, std::span<const Term> b)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const auto c = a[i].exponent <=> b[j].exponent;
        if (c < 0) {
            out.push_back(a[i++]);
        } else if (c > 0) {
            out.push_back(b[j++]);
        } else {
            Coefficient s = a[i].coeff + b[j].coeff;
            if (!s.is_zero())
                out.push_back(Term{a[i].exponent, std::move(s)});
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

namespace {

struct Cursor {
    Exponent sum;
    std::size_t row;
    std::size_t col;
};

struct LaterFirst {
    bool operator()(const Cursor& x, const Cursor& y) const { return x.sum > y.sum; }
};

} // namespace

std::vector<Term> convolve_rows(std::span<const Term> a, std::span<const Term> b)
{
    std::vector<Term> out;
    if (a.empty() || b.empty())
        return out;

    std::priority_queue<Cursor, std::vector<Cursor>, LaterFirst> heap;
    for (std::size_t i = 0; i < a.size(); ++i)
        heap.push(Cursor{a[i].exponent + b[0].exponent, i, 0});

    while (!heap.empty()) {
        Cursor c = heap.top();
        heap.pop();
        Coefficient prod = a[c.row].coeff * b[c.col].coeff;
        if (!out.empty() && out.back().exponent == c.sum) {
            out.back().coeff += prod;
        } else {
            if (!out.empty() && out.back().coeff.is_zero())
                out.pop_back();
            out.push_back(Term{c.sum, std::move(prod)});
        }
        if (c.col + 1 < b.size())
            heap.push(Cursor{a[c.row].exponent + b[c.col + 1].exponent, c.row, c.col + 1});
    }
    if (!out.empty() && out.back().coeff.is_zero())
        out.pop_back();
    return out;
}

FiniteSeries multiply_serial(const FiniteSeries& a, const FiniteSeries& b)
{
    require_compatible(a, b);
    return FiniteSeries::from_canonical(a.group(), a.field(), convolve_rows(a.terms(), b.terms()));
}

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

FiniteSeries multiply_parallel(const FiniteSeries& a, const FiniteSeries& b)
{
    require_compatible(a, b);
    const auto lhs = a.terms();
    const auto rhs = b.terms();
    if (lhs.empty() || rhs.empty())
        return FiniteSeries::zero(a.group(), a.field());

    const std::size_t chunks = std::min<std::size_t>(lhs.size(), static_cast<std::size_t>(max_threads()) * 4);
    const std::size_t per = (lhs.size() + chunks - 1) / chunks;
    std::vector<std::vector<Term>> parts(chunks);

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(chunks); ++k) {
        const std::size_t begin = static_cast<std::size_t>(k) * per;
        if (begin >= lhs.size())
            continue;
        const std::size_t len = std::min(per, lhs.size() - begin);
        parts[static_cast<std::size_t>(k)] = convolve_rows(lhs.subspan(begin, len), rhs);
    }

    while (parts.size() > 1) {
        const std::size_t half = parts.size() / 2;
        std::vector<std::vector<Term>> next((parts.size() + 1) / 2);
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(half); ++k) {
            const auto i = static_cast<std::size_t>(k);
            next[i] = merge_add(parts[2 * i], parts[2 * i + 1]);
        }
        if (parts.size() % 2)
            next.back() = std::move(parts.back());
        parts = std::move(next);
    }
    return FiniteSeries::from_canonical(a.group(), a.field(), std::move(parts.front()));
}

FiniteSeries multiply(const FiniteSeries& a, const FiniteSeries& b)
{
    if (a.size() * b.size() < parallel_threshold || max_threads() == 1)
        return multiply_serial(a, b);
    return multiply_parallel(a, b);
}

} // namespace hahn::kernels
