#pragma once

#include "fcost/lattice_model.hpp"
#include "fcost/number_theory.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace fcost {

/// A decimal held as an integer count of 10^-places units, so that C = 0.67
/// is exactly 67 hundredths and prints back as "0.67".
struct FixedDecimal {
    std::int64_t units = 0;
    int places = 2;

    double value() const;
    std::string str() const;

    /// Smallest multiple of 10^-places strictly greater than x.
    static FixedDecimal strictly_above(double x, int places);

    friend bool operator==(const FixedDecimal&, const FixedDecimal&) = default;
};

struct RegevParameterization {
    int n = 0;
    int d = 0;
    std::optional<std::int64_t> m; ///< nullopt: unbounded (perfect reduction)
    FixedDecimal c;
    int log_d = 0;
    int r = 1;
    int s = 1;
    int k_fib = 0;  ///< K^(r)
    int k = 0;      ///< arbitrary (non-small) elements
    int w = 10;     ///< window for the k-part
    ElementStyle style = ElementStyle::EgrPrimes;
};

struct CostBreakdown {
    std::int64_t fib_part = 0;
    std::int64_t k_part = 0;
    std::int64_t per_run_ops = 0;
    std::optional<std::int64_t> overall_ops; ///< nullopt when m is unbounded
};

/// sqrt(n)/d + log2gamma*(m+d)/sqrt(n) + sqrt(n)/m, the o(1) term dropped.
double c_lower_bound(int n, int d, std::int64_t m, double log2_gamma);

/// Smallest multiple of 0.01 strictly above c_lower_bound.
FixedDecimal min_c(int n, int d, std::int64_t m, double log2_gamma);

/// Regev's post-processing condition with the GSA factor gamma^(m+d),
/// T = 2^(kappa n/d), R = 2^(C sqrt n), det L = 2^n; evaluated in log2 form.
bool post_processing_feasible(int n, int d, std::int64_t m, double kappa,
                              double log2_gamma, double c);

/// ceil(C sqrt(n) + log2(2 sqrt(d))).
int log_d_of(double c, int n, int d);

/// Ragavan's per-step cost f(r, s) = 2 (3r/s + 4 log2 s + 7).
std::int64_t f_cost(int r, int s);

bool is_power_of_two(std::int64_t x);

/// s minimizing f(r, s): 1 for r = 1, r/2 for other powers of two,
/// otherwise the largest power of two dividing r.
int select_s(int r);

/// Fills in log_d, k_fib and s from (n, d, m, C, r, k, w, style).
RegevParameterization make_parameterization(int n, int d, std::optional<std::int64_t> m,
                                            FixedDecimal c, int r, int k, int w,
                                            ElementStyle style);

CostBreakdown per_run_ops(const RegevParameterization& p);

struct RRange {
    int first = 1;
    int last = 16;
};

/// Exhaustive search over r. For each r: d = min(d_max, round(sqrt(n/log2 gamma))),
/// m = round(sqrt(n/log2 gamma)), C = min_c. Minimizes the Fibonacci part of the
/// cost; ties go to smaller r, then smaller log D. Model must not be Perfect.
RegevParameterization optimize(int n, const ReductionModel& model, ElementStyle style,
                               int k, int w, RRange r_range = {});

/// gamma -> 1 limit with r = 1: d = d_max(n, 1, style), C the smallest
/// multiple of 0.001 above sqrt(n)/d, m unbounded.
RegevParameterization perfect_params(int n, ElementStyle style, int k = 0, int w = 10);

/// Regev's original choice d = ceil(sqrt n), m = d + 4, with the 0.01-quantized
/// minimum C for the given model.
RegevParameterization baseline_params(int n, const ReductionModel& model, int r,
                                      ElementStyle style, int k = 0, int w = 10);

} // namespace fcost
