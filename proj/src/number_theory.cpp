#include "fcost/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace fcost {

std::vector<std::uint64_t> first_primes(std::size_t d)
{
    std::vector<std::uint64_t> primes;
    if (d == 0) {
        return primes;
    }
    // p_d < d (ln d + ln ln d) for d >= 6.
    std::size_t limit = 16;
    if (d >= 6) {
        double x = static_cast<double>(d);
        limit = static_cast<std::size_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
    }
    for (;;) {
        std::vector<bool> composite(limit + 1, false);
        primes.clear();
        for (std::size_t i = 2; i <= limit && primes.size() < d; ++i) {
            if (composite[i]) {
                continue;
            }
            primes.push_back(i);
            for (std::size_t j = i * i; j <= limit; j += i) {
                composite[j] = true;
            }
        }
        if (primes.size() == d) {
            return primes;
        }
        limit *= 2;
    }
}

int d_max(int n, int r, ElementStyle style)
{
    if (n < 1 || r < 1) {
        throw std::invalid_argument("d_max needs n >= 1 and r >= 1");
    }
    const unsigned long exponent = static_cast<unsigned long>(exponent_multiplier(style) * r);
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 2, static_cast<unsigned long>(n));

    // Each prime contributes at least exponent bits, so n / exponent primes suffice.
    auto primes = first_primes(static_cast<std::size_t>(n) / exponent + 2);
    mpz_class product = 1;
    int d = 0;
    for (auto p : primes) {
        mpz_class factor;
        mpz_ui_pow_ui(factor.get_mpz_t(), p, exponent);
        mpz_class next = product * factor;
        if (next >= bound) {
            break;
        }
        product = std::move(next);
        ++d;
    }
    return d;
}

GenFibSequence::GenFibSequence(int r)
    : r_(r)
{
    if (r < 1) {
        throw std::invalid_argument("generalized Fibonacci needs r >= 1");
    }
    values_.emplace_back(1);
    values_.emplace_back(1);
}

const mpz_class& GenFibSequence::operator[](std::size_t j)
{
    while (values_.size() <= j) {
        const auto n = values_.size();
        mpz_class next = r_ * values_[n - 1] + values_[n - 2];
        values_.push_back(std::move(next));
    }
    return values_[j];
}

int GenFibSequence::largest_index_not_exceeding(const mpz_class& bound)
{
    if (bound < 1) {
        throw std::invalid_argument("bound must be >= 1");
    }
    std::size_t j = 1;
    while ((*this)[j + 1] <= bound) {
        ++j;
    }
    return static_cast<int>(j);
}

int k_max(int r, int log_d)
{
    if (log_d < 0) {
        throw std::invalid_argument("log D must be non-negative");
    }
    mpz_class big_d;
    mpz_ui_pow_ui(big_d.get_mpz_t(), 2, static_cast<unsigned long>(log_d));
    GenFibSequence g(r);
    return g.largest_index_not_exceeding(big_d);
}

FibBasis::FibBasis(int r, int k)
    : r_(r)
    , k_(k)
{
    if (r < 1) {
        throw std::invalid_argument("r must be >= 1");
    }
    if (k < 1) {
        throw std::invalid_argument("K must be >= 1");
    }
    GenFibSequence g(r);
    g_.reserve(static_cast<std::size_t>(k) + 2);
    g64_.reserve(static_cast<std::size_t>(k) + 2);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(k) + 1; ++j) {
        g_.push_back(g[j]);
        g64_.push_back(mpz_sizeinbase(g[j].get_mpz_t(), 2) <= 64
                           ? static_cast<std::uint64_t>(mpz_get_ui(g[j].get_mpz_t()))
                           : std::numeric_limits<std::uint64_t>::max());
    }
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
}

void FibBasis::decompose(const mpz_class& x, std::span<int> digits) const
{
    if (digits.size() != static_cast<std::size_t>(k_)) {
        throw std::invalid_argument("digit buffer must hold K entries");
    }
    if (x < 0 || x >= limit()) {
        throw std::range_error("value outside [0, G_{K+1}) for the generalized Fibonacci basis");
    }
    if (mpz_fits_ulong_p(x.get_mpz_t()) != 0) {
        decompose(static_cast<std::uint64_t>(mpz_get_ui(x.get_mpz_t())), digits);
        return;
    }
    mpz_class rest = x;
    mpz_class q;
    for (int j = k_; j >= 1; --j) {
        const mpz_class& gj = g_[static_cast<std::size_t>(j)];
        mpz_tdiv_q(q.get_mpz_t(), rest.get_mpz_t(), gj.get_mpz_t());
        const int digit = q > r_ ? r_ : static_cast<int>(q.get_si());
        digits[static_cast<std::size_t>(j - 1)] = digit;
        rest -= digit * gj;
    }
    if (rest != 0) {
        throw std::range_error("greedy generalized Fibonacci decomposition left a remainder");
    }
}

void FibBasis::decompose(std::uint64_t x, std::span<int> digits) const
{
    if (digits.size() != static_cast<std::size_t>(k_)) {
        throw std::invalid_argument("digit buffer must hold K entries");
    }
    // A saturated bound means G_{K+1} exceeds every 64-bit value.
    if (x >= g64_.back()) {
        throw std::range_error("value outside [0, G_{K+1}) for the generalized Fibonacci basis");
    }
    std::uint64_t rest = x;
    for (int j = k_; j >= 1; --j) {
        const std::uint64_t gj = g64_[static_cast<std::size_t>(j)];
        const std::uint64_t q = rest / gj;
        const int digit = q > static_cast<std::uint64_t>(r_) ? r_ : static_cast<int>(q);
        digits[static_cast<std::size_t>(j - 1)] = digit;
        rest -= static_cast<std::uint64_t>(digit) * gj;
    }
    if (rest != 0) {
        throw std::range_error("greedy generalized Fibonacci decomposition left a remainder");
    }
}

mpz_class FibBasis::reconstruct(std::span<const int> digits) const
{
    if (digits.size() > static_cast<std::size_t>(k_) + 1) {
        throw std::invalid_argument("more digits than basis elements");
    }
    mpz_class total = 0;
    for (std::size_t j = 1; j <= digits.size(); ++j) {
        const int digit = digits[j - 1];
        if (digit < 0 || digit > r_) {
            throw std::invalid_argument("generalized Fibonacci digit outside [0, r]");
        }
        total += digit * g_[j];
    }
    return total;
}

std::vector<int> fib_decompose(const mpz_class& x, int r, int k)
{
    FibBasis basis(r, k);
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    basis.decompose(x, digits);
    return digits;
}

mpz_class fib_reconstruct(std::span<const int> digits, int r)
{
    FibBasis basis(r, std::max<int>(1, static_cast<int>(digits.size())));
    return basis.reconstruct(digits);
}

} // namespace fcost
