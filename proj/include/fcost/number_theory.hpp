#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace fcost {

/// Small elements a_1..a_d: EGR uses the first d primes, Regev's original
/// algorithm their squares.
enum class ElementStyle { EgrPrimes, RegevSquaredPrimes };

inline int exponent_multiplier(ElementStyle style)
{
    return style == ElementStyle::EgrPrimes ? 1 : 2;
}

/// First d primes, ascending.
std::vector<std::uint64_t> first_primes(std::size_t d);

/// Greatest d with prod_{i<=d} p_i^(e*r) < 2^n, e = 1 (EGR) or 2 (Regev).
int d_max(int n, int r, ElementStyle style);

/// Generalized Fibonacci numbers G_0 = G_1 = 1, G_j = r*G_{j-1} + G_{j-2}.
/// Terms are generated on demand and cached; not thread-safe to share a
/// single instance across threads while it grows.
class GenFibSequence {
public:
    explicit GenFibSequence(int r);

    int r() const { return r_; }

    /// G_j, extending the cache as needed.
    const mpz_class& operator[](std::size_t j);

    /// Largest K with G_K <= bound (K >= 1 since G_1 = 1).
    int largest_index_not_exceeding(const mpz_class& bound);

private:
    int r_;
    std::vector<mpz_class> values_;
};

/// Largest K with G_K^(r) <= 2^logD.
int k_max(int r, int log_d);

/// Greedy digits (z_1..z_K) with sum z_j G_j = x and 0 <= z_j <= r.
/// digits[j-1] holds z_j. Requires 0 <= x < G_{K+1}; throws std::range_error.
std::vector<int> fib_decompose(const mpz_class& x, int r, int k);

/// sum_j digits[j-1] * G_j^(r). Throws std::invalid_argument on a digit
/// outside [0, r].
mpz_class fib_reconstruct(std::span<const int> digits, int r);

/// Precomputed basis G_1..G_{K+1} for repeated decompositions with fixed
/// (r, K). Values below 2^64 take a word-sized path.
class FibBasis {
public:
    FibBasis(int r, int k);

    int r() const { return r_; }
    int k() const { return k_; }
    /// G_{K+1}: exclusive upper bound on decomposable values.
    const mpz_class& limit() const { return g_.back(); }

    void decompose(const mpz_class& x, std::span<int> digits) const;
    void decompose(std::uint64_t x, std::span<int> digits) const;
    mpz_class reconstruct(std::span<const int> digits) const;

private:
    int r_;
    int k_;
    std::vector<mpz_class> g_;      ///< g_[j] = G_j, j = 0..K+1
    std::vector<std::uint64_t> g64_; ///< same, saturated at UINT64_MAX
};

} // namespace fcost
