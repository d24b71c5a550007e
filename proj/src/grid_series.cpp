#include "hahn/grid_series.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <queue>
#include <set>

#include "hahn/error.hpp"

namespace hahn {

namespace detail {

namespace {

constexpr long monoid_search_limit = 20000;

// Whether x is a nonnegative integer combination of gens (all positive).
// Answers false when the search would exceed the limit; keeping a redundant
// generator only costs time.
bool in_monoid(const std::vector<Exponent>& gens, const Exponent& x)
{
    if (gens.empty())
        return false;
    mpz_class den = x.scalar().get_den();
    for (const auto& g : gens)
        den = lcm(den, g.scalar().get_den());
    const mpq_class target = x.scalar() * den;
    if (target > monoid_search_limit)
        return false;
    const long n = target.get_num().get_si();
    std::vector<long> steps;
    for (const auto& g : gens) {
        const mpq_class v = g.scalar() * den;
        if (v <= n)
            steps.push_back(v.get_num().get_si());
    }
    std::vector<char> reach(static_cast<std::size_t>(n + 1), 0);
    reach[0] = 1;
    for (long i = 1; i <= n; ++i)
        for (long st : steps)
            if (st <= i && reach[static_cast<std::size_t>(i - st)]) {
                reach[static_cast<std::size_t>(i)] = 1;
                break;
            }
    return reach[static_cast<std::size_t>(n)] != 0;
}

std::vector<Exponent> reduce_generators(std::vector<Exponent> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> kept;
    for (auto& g : gens)
        if (!in_monoid(kept, g))
            kept.push_back(std::move(g));
    return kept;
}

} // namespace

class GridNode {
public:
    GridNode(Group group, Field field, Exponent shift, std::vector<Exponent> gens)
        : group_(group), field_(field), shift_(std::move(shift)), gens_(reduce_generators(std::move(gens)))
    {
        frontier_.push(shift_);
        seen_.insert(shift_);
    }

    virtual ~GridNode() = default;

    GridNode(const GridNode&) = delete;
    GridNode& operator=(const GridNode&) = delete;

    const Group& group() const { return group_; }
    const Field& field() const { return field_; }
    const Exponent& shift() const { return shift_; }
    const std::vector<Exponent>& generators() const { return gens_; }

    std::vector<Exponent> points_below(const Exponent& beta) const
    {
        std::lock_guard lock(enum_mutex_);
        extend_through(beta);
        const auto end = std::lower_bound(points_.begin(), points_.end(), beta);
        return {points_.begin(), end};
    }

    std::vector<Exponent> points_through(const Exponent& gamma) const
    {
        std::lock_guard lock(enum_mutex_);
        extend_through(gamma);
        const auto end = std::upper_bound(points_.begin(), points_.end(), gamma);
        return {points_.begin(), end};
    }

    // Number of grid points <= gamma; they are point(0) .. point(n - 1).
    std::size_t count_through(const Exponent& gamma) const
    {
        std::lock_guard lock(enum_mutex_);
        extend_through(gamma);
        return static_cast<std::size_t>(std::upper_bound(points_.begin(), points_.end(), gamma) - points_.begin());
    }

    // Stable: enumerated points are never moved or removed.
    const Exponent& point(std::size_t i) const
    {
        std::lock_guard lock(enum_mutex_);
        return points_[i];
    }

    // The i-th grid point in increasing order, or null past the end of a
    // finite grid.
    const Exponent* nth_point(std::size_t i) const
    {
        std::lock_guard lock(enum_mutex_);
        while (points_.size() <= i && !frontier_.empty())
            pop_frontier();
        return i < points_.size() ? &points_[i] : nullptr;
    }

    bool on_grid(const Exponent& gamma) const
    {
        if (gamma < shift_)
            return false;
        std::lock_guard lock(enum_mutex_);
        extend_through(gamma);
        return std::binary_search(points_.begin(), points_.end(), gamma);
    }

    Coefficient coeff(const Exponent& gamma) const
    {
        require_same_group(group_, gamma.group());
        {
            std::lock_guard lock(memo_mutex_);
            if (const auto it = memo_.find(gamma); it != memo_.end())
                return it->second;
        }
        if (!on_grid(gamma))
            return Coefficient::zero(field_);
        Coefficient c = compute(gamma);
        std::lock_guard lock(memo_mutex_);
        return memo_.try_emplace(gamma, std::move(c)).first->second;
    }

protected:
    // Called only for on-grid gamma; must be a pure function of gamma.
    virtual Coefficient compute(const Exponent& gamma) const = 0;

private:
    void pop_frontier() const
    {
        Exponent p = frontier_.top();
        frontier_.pop();
        for (const auto& g : gens_) {
            Exponent q = p + g;
            if (seen_.insert(q).second)
                frontier_.push(std::move(q));
        }
        points_.push_back(std::move(p));
    }

    void extend_through(const Exponent& gamma) const
    {
        while (!frontier_.empty() && frontier_.top() <= gamma)
            pop_frontier();
    }

    Group group_;
    Field field_;
    Exponent shift_;
    std::vector<Exponent> gens_;

    mutable std::mutex enum_mutex_;
    mutable std::deque<Exponent> points_;
    mutable std::priority_queue<Exponent, std::vector<Exponent>, std::greater<>> frontier_;
    mutable std::set<Exponent> seen_;

    mutable std::mutex memo_mutex_;
    mutable std::map<Exponent, Coefficient> memo_;
};

namespace {

using NodePtr = std::shared_ptr<const GridNode>;

std::vector<Exponent> merged_generators(const std::vector<Exponent>& a, const std::vector<Exponent>& b)
{
    std::vector<Exponent> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

class FiniteNode final : public GridNode {
public:
    explicit FiniteNode(FiniteSeries f)
        : GridNode(f.group(), f.field(), grid_shift(f), grid_generators(f)), series_(std::move(f))
    {
    }

protected:
    Coefficient compute(const Exponent& gamma) const override { return series_.coefficient(gamma); }

private:
    static Exponent grid_shift(const FiniteSeries& f)
    {
        return f.is_zero() ? Exponent::zero(f.group()) : f.terms().front().exponent;
    }

    // Differences to the least exponent: every term is shift + one generator.
    static std::vector<Exponent> grid_generators(const FiniteSeries& f)
    {
        std::vector<Exponent> gens;
        for (std::size_t i = 1; i < f.size(); ++i)
            gens.push_back(f.terms()[i].exponent - f.terms()[0].exponent);
        return gens;
    }

    FiniteSeries series_;
};

class SumNode final : public GridNode {
public:
    SumNode(NodePtr a, NodePtr b)
        : GridNode(a->group(), a->field(), std::min(a->shift(), b->shift()), sum_generators(*a, *b)),
          a_(std::move(a)), b_(std::move(b))
    {
    }

protected:
    Coefficient compute(const Exponent& gamma) const override { return a_->coeff(gamma) + b_->coeff(gamma); }

private:
    static std::vector<Exponent> sum_generators(const GridNode& a, const GridNode& b)
    {
        auto gens = merged_generators(a.generators(), b.generators());
        if (a.shift() != b.shift())
            gens.push_back(a.shift() < b.shift() ? b.shift() - a.shift() : a.shift() - b.shift());
        return gens;
    }

    NodePtr a_, b_;
};

class ScaleNode final : public GridNode {
public:
    ScaleNode(NodePtr a, Coefficient c)
        : GridNode(a->group(), a->field(), a->shift(), a->generators()), a_(std::move(a)), c_(std::move(c))
    {
    }

protected:
    Coefficient compute(const Exponent& gamma) const override { return a_->coeff(gamma) * c_; }

private:
    NodePtr a_;
    Coefficient c_;
};

class ProductNode final : public GridNode {
public:
    ProductNode(NodePtr a, NodePtr b)
        : GridNode(a->group(), a->field(), a->shift() + b->shift(),
                   merged_generators(a->generators(), b->generators())),
          a_(std::move(a)), b_(std::move(b))
    {
    }

protected:
    // Finitely many grid points alpha of a satisfy alpha <= delta - shift(b);
    // the sum runs over whichever factor has fewer such points.
    Coefficient compute(const Exponent& delta) const override
    {
        const std::size_t na = a_->count_through(delta - b_->shift());
        const std::size_t nb = b_->count_through(delta - a_->shift());
        const GridNode& outer = na <= nb ? *a_ : *b_;
        const GridNode& inner = na <= nb ? *b_ : *a_;
        Coefficient sum = Coefficient::zero(field());
        for (std::size_t i = 0, n = std::min(na, nb); i < n; ++i) {
            const Exponent& alpha = outer.point(i);
            const Coefficient x = outer.coeff(alpha);
            if (x.is_zero())
                continue;
            const Coefficient y = inner.coeff(delta - alpha);
            if (!y.is_zero())
                sum += x * y;
        }
        return sum;
    }

private:
    NodePtr a_, b_;
};

// h = 1/f where f has leading term c t^lead. From f h = 1:
//   h(d) = c^{-1} ([d = -lead] - sum_{lead < a <= d + 2 lead} f(a) h(d + lead - a)).
class InverseNode final : public GridNode {
public:
    InverseNode(NodePtr f, Exponent lead, Coefficient c, std::vector<Exponent> gens)
        : GridNode(f->group(), f->field(), -lead, std::move(gens)), f_(std::move(f)), lead_(std::move(lead)),
          inv_c_(c.inverse())
    {
    }

protected:
    Coefficient compute(const Exponent& delta) const override
    {
        // Fill lower coefficients in increasing order so recursion stays shallow.
        for (std::size_t i = 0, n = count_through(delta); i < n && point(i) < delta; ++i)
            (void)coeff(point(i));

        Coefficient acc = delta == shift() ? Coefficient::one(field()) : Coefficient::zero(field());
        for (std::size_t i = 0, n = f_->count_through(delta + lead_ + lead_); i < n; ++i) {
            const Exponent& a = f_->point(i);
            if (a <= lead_)
                continue;
            const Coefficient fa = f_->coeff(a);
            if (fa.is_zero())
                continue;
            const Coefficient h = coeff(delta + lead_ - a);
            if (!h.is_zero())
                acc = acc - fa * h;
        }
        return acc * inv_c_;
    }

private:
    NodePtr f_;
    Exponent lead_;
    Coefficient inv_c_;
};

} // namespace

} // namespace detail

namespace {

void require_archimedean(const Group& g)
{
    if (!g.archimedean())
        throw UnsupportedGroup("grid series need an archimedean value group; " + g.selector() + " is not");
}

} // namespace

Exponent lattice_gcd(const std::vector<Exponent>& gens)
{
    if (gens.empty())
        throw std::invalid_argument("lattice_gcd of an empty generator set");
    mpq_class d = abs(gens.front().scalar());
    for (std::size_t i = 1; i < gens.size(); ++i) {
        const mpq_class& x = gens[i].scalar();
        // gcd(p/q, r/s) = gcd(p s, r q) / (q s)
        mpq_class next(gcd(d.get_num() * x.get_den(), x.get_num() * d.get_den()), d.get_den() * x.get_den());
        next.canonicalize();
        d = next;
    }
    const Group& g = gens.front().group();
    return g.kind() == GroupKind::integer ? Exponent::integer(d.get_num()) : Exponent::rational(d);
}

GridSeries GridSeries::from_finite(const FiniteSeries& f)
{
    require_archimedean(f.group());
    return GridSeries(std::make_shared<detail::FiniteNode>(f));
}

GridSeries GridSeries::invert(const FiniteSeries& f)
{
    return invert(from_finite(f));
}

GridSeries GridSeries::invert(const GridSeries& f, std::size_t search_points)
{
    const auto lead = f.leading_exponent(search_points);
    if (!lead) {
        if (f.generators().empty())
            throw DivisionByZero("inverse of the zero series");
        throw Undetermined("no nonzero coefficient among the first " + std::to_string(search_points) +
                           " grid points; cannot locate the leading term");
    }
    const Coefficient c = f.coeff_at(*lead);
    if (f.generators().empty())
        return from_finite(FiniteSeries::monomial(c, *lead).invert_monomial());

    // With shift = lead the correction e lies in <gens>; otherwise its
    // exponents are positive elements of the lattice spanned by the
    // generators, which is cyclic in Z and Q.
    std::vector<Exponent> gens = f.shift() == *lead ? f.generators()
                                                    : std::vector<Exponent>{lattice_gcd(f.generators())};
    return GridSeries(std::make_shared<detail::InverseNode>(f.node_, *lead, c, std::move(gens)));
}

const Group& GridSeries::group() const { return node_->group(); }
const Field& GridSeries::field() const { return node_->field(); }
const Exponent& GridSeries::shift() const { return node_->shift(); }
const std::vector<Exponent>& GridSeries::generators() const { return node_->generators(); }

std::vector<Exponent> GridSeries::grid_points_below(const Exponent& beta) const
{
    require_same_group(group(), beta.group());
    return node_->points_below(beta);
}

Coefficient GridSeries::coeff_at(const Exponent& gamma) const
{
    return node_->coeff(gamma);
}

FiniteSeries GridSeries::truncate_below(const Exponent& beta) const
{
    std::vector<Term> terms;
    for (auto& p : grid_points_below(beta)) {
        Coefficient c = node_->coeff(p);
        if (!c.is_zero())
            terms.push_back(Term{std::move(p), std::move(c)});
    }
    return FiniteSeries::from_canonical(group(), field(), std::move(terms));
}

bool GridSeries::eq_below(const GridSeries& other, const Exponent& beta) const
{
    return truncate_below(beta) == other.truncate_below(beta);
}

std::optional<Exponent> GridSeries::leading_exponent(std::size_t search_points) const
{
    for (std::size_t i = 0; i < search_points; ++i) {
        const Exponent* p = node_->nth_point(i);
        if (!p)
            break;
        if (!node_->coeff(*p).is_zero())
            return *p;
    }
    return std::nullopt;
}

std::optional<Exponent> GridSeries::valuation_below(const Exponent& beta) const
{
    for (auto& p : grid_points_below(beta))
        if (!node_->coeff(p).is_zero())
            return std::move(p);
    return std::nullopt;
}

GridSeries GridSeries::scale(const Coefficient& c) const
{
    require_same_field(field(), c.field());
    return GridSeries(std::make_shared<detail::ScaleNode>(node_, c));
}

GridSeries operator+(const GridSeries& a, const GridSeries& b)
{
    require_same_group(a.group(), b.group());
    require_same_field(a.field(), b.field());
    return GridSeries(std::make_shared<detail::SumNode>(a.node_, b.node_));
}

GridSeries operator-(const GridSeries& a)
{
    return a.scale(-Coefficient::one(a.field()));
}

GridSeries operator-(const GridSeries& a, const GridSeries& b)
{
    return a + (-b);
}

GridSeries operator*(const GridSeries& a, const GridSeries& b)
{
    require_same_group(a.group(), b.group());
    require_same_field(a.field(), b.field());
    return GridSeries(std::make_shared<detail::ProductNode>(a.node_, b.node_));
}

} // namespace hahn
