#include "fcost/regev_cost.hpp"

#include "fcost/errors.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace fcost {
namespace {

std::int64_t pow10(int places)
{
    std::int64_t p = 1;
    for (int i = 0; i < places; ++i) {
        p *= 10;
    }
    return p;
}

double require_finite_log2_gamma(const ReductionModel& model)
{
    auto lg = log2_gamma(model);
    if (std::holds_alternative<PerfectLimit>(lg)) {
        throw std::invalid_argument("perfect reduction has no finite m; use perfect_params");
    }
    return std::get<double>(lg);
}

} // namespace

double FixedDecimal::value() const
{
    return static_cast<double>(units) / static_cast<double>(pow10(places));
}

std::string FixedDecimal::str() const
{
    const std::int64_t scale = pow10(places);
    const std::int64_t whole = std::llabs(units) / scale;
    std::string frac = std::to_string(std::llabs(units) % scale);
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    std::string out = (units < 0 ? "-" : "") + std::to_string(whole);
    if (places > 0) {
        out += "." + frac;
    }
    return out;
}

FixedDecimal FixedDecimal::strictly_above(double x, int places)
{
    const double scaled = x * static_cast<double>(pow10(places));
    return FixedDecimal{static_cast<std::int64_t>(std::floor(scaled)) + 1, places};
}

double c_lower_bound(int n, int d, std::int64_t m, double log2_gamma)
{
    const double root_n = std::sqrt(static_cast<double>(n));
    return root_n / d + log2_gamma * static_cast<double>(m + d) / root_n + root_n / static_cast<double>(m);
}

FixedDecimal min_c(int n, int d, std::int64_t m, double log2_gamma)
{
    return FixedDecimal::strictly_above(c_lower_bound(n, d, m, log2_gamma), 2);
}

bool post_processing_feasible(int n, int d, std::int64_t m, double kappa, double log2_gamma,
                              double c)
{
    const double md = static_cast<double>(m + d);
    const double lhs = 0.5 * std::log2(md) + md * log2_gamma +
                       0.5 * std::log2(static_cast<double>(m) + 1.0) + kappa * n / d;
    const double rhs = 0.5 + c * std::sqrt(static_cast<double>(n)) - std::log2(6.0 * d) -
                       static_cast<double>(n) / static_cast<double>(m);
    return lhs < rhs;
}

int log_d_of(double c, int n, int d)
{
    if (!(c > 0.0)) {
        throw std::invalid_argument("C must be positive");
    }
    const double bits = c * std::sqrt(static_cast<double>(n)) + std::log2(2.0 * std::sqrt(static_cast<double>(d)));
    return static_cast<int>(std::ceil(bits));
}

bool is_power_of_two(std::int64_t x)
{
    return x > 0 && std::has_single_bit(static_cast<std::uint64_t>(x));
}

std::int64_t f_cost(int r, int s)
{
    if (r < 1 || !is_power_of_two(s) || r % s != 0) {
        throw std::invalid_argument("f(r, s) needs s a power of two dividing r");
    }
    const int log_s = std::countr_zero(static_cast<unsigned>(s));
    return 2 * (3 * (r / s) + 4 * log_s + 7);
}

int select_s(int r)
{
    if (r < 1) {
        throw std::invalid_argument("r must be >= 1");
    }
    if (r == 1) {
        return 1;
    }
    if (is_power_of_two(r)) {
        return r / 2;
    }
    return r & -r;
}

RegevParameterization make_parameterization(int n, int d, std::optional<std::int64_t> m,
                                            FixedDecimal c, int r, int k, int w,
                                            ElementStyle style)
{
    if (n < 1 || d < 1 || r < 1 || k < 0 || w < 1 || (m && *m < 1)) {
        throw std::invalid_argument("invalid Regev parameterization");
    }
    RegevParameterization p;
    p.n = n;
    p.d = d;
    p.m = m;
    p.c = c;
    p.r = r;
    p.s = select_s(r);
    p.k = k;
    p.w = w;
    p.style = style;
    p.log_d = log_d_of(c.value(), n, d);
    p.k_fib = k_max(r, p.log_d);
    return p;
}

CostBreakdown per_run_ops(const RegevParameterization& p)
{
    CostBreakdown cost;
    cost.fib_part = p.k_fib == 0 ? 0 : f_cost(p.r, p.s) * p.k_fib;
    if (p.k > 0) {
        const std::int64_t bits = static_cast<std::int64_t>(p.k) * p.log_d;
        cost.k_part = 2 * ((bits + p.w - 1) / p.w);
    }
    cost.per_run_ops = cost.fib_part + cost.k_part;
    if (p.m) {
        cost.overall_ops = cost.per_run_ops * *p.m;
    }
    return cost;
}

RegevParameterization optimize(int n, const ReductionModel& model, ElementStyle style, int k,
                               int w, RRange r_range)
{
    if (r_range.first < 1 || r_range.last < r_range.first) {
        throw std::invalid_argument("empty r candidate range");
    }
    const double lg = require_finite_log2_gamma(model);
    const std::int64_t m = std::llround(std::sqrt(static_cast<double>(n) / lg));

    std::optional<RegevParameterization> best;
    std::tuple<std::int64_t, int, int> best_key{};
    for (int r = r_range.first; r <= r_range.last; ++r) {
        const int d = static_cast<int>(std::min<std::int64_t>(d_max(n, r, style), m));
        if (d < 1) {
            continue;
        }
        auto p = make_parameterization(n, d, m, min_c(n, d, m, lg), r, k, w, style);
        if (p.d > d_max(n, p.r, style)) {
            throw InvariantViolation("optimize chose d above d_max");
        }
        std::tuple key{per_run_ops(p).fib_part, p.r, p.log_d};
        if (!best || key < best_key) {
            best = p;
            best_key = key;
        }
    }
    if (!best) {
        throw std::invalid_argument("no admissible r in the candidate range");
    }
    return *best;
}

RegevParameterization perfect_params(int n, ElementStyle style, int k, int w)
{
    const int d = d_max(n, 1, style);
    const auto c = FixedDecimal::strictly_above(std::sqrt(static_cast<double>(n)) / d, 3);
    return make_parameterization(n, d, std::nullopt, c, 1, k, w, style);
}

RegevParameterization baseline_params(int n, const ReductionModel& model, int r,
                                      ElementStyle style, int k, int w)
{
    const double lg = require_finite_log2_gamma(model);
    const int d = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    const std::int64_t m = d + 4;
    return make_parameterization(n, d, m, min_c(n, d, m, lg), r, k, w, style);
}

} // namespace fcost
