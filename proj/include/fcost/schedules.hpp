#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace fcost {

/// Classical stand-in for the black-box circuit |u, v, t> -> |u, v, (t + u v) mod N>.
/// Every call is counted; u and v must be units mod N.
class CountingMultOracle {
public:
    explicit CountingMultOracle(mpz_class modulus);

    /// (t + u*v) mod N. Throws OracleError if u or v is not invertible.
    mpz_class operator()(const mpz_class& t, const mpz_class& u, const mpz_class& v);

    const mpz_class& modulus() const { return modulus_; }
    std::int64_t calls() const { return calls_; }

private:
    mpz_class modulus_;
    std::int64_t calls_ = 0;
};

struct ScheduleResult {
    mpz_class result;
    std::int64_t calls = 0;
    int peak_registers = 0;
};

/// Regev's square-and-multiply over c_0..c_{l-1}: forward pass into fresh
/// registers, copy-out, reverse pass clearing the intermediates.
/// Result is prod c_j^(2^j) mod N with 4(l-1) calls and l + 1 live registers.
ScheduleResult emulate_binary_schedule(std::span<const mpz_class> c_values, const mpz_class& modulus);

/// Controlled multiplication by v_i^(c_i), grouped into windows of w control
/// bits whose products come from a classical lookup. 2 ceil(n_e/w) calls.
ScheduleResult emulate_ehs_schedule(std::span<const mpz_class> v_values,
                                    const std::vector<bool>& control_bits,
                                    const mpz_class& modulus, int w);

/// Checks prod a_i^(z_i + D/2) == prod_j c_j^(G_j) (mod N) where
/// c_j = prod_i a_i^(z_ij) and z_ij are the generalized Fibonacci digits of
/// z_i + D/2. D must be a power of two; z_i in [-D/2, D/2).
bool verify_fib_product_identity(std::span<const mpz_class> a_values,
                                 std::span<const std::int64_t> z_values,
                                 int r, std::int64_t big_d, const mpz_class& modulus);

inline std::int64_t binary_schedule_calls(std::int64_t l) { return 4 * (l - 1); }

inline std::int64_t ehs_schedule_calls(std::int64_t n_e, int w)
{
    return 2 * ((n_e + w - 1) / w);
}

} // namespace fcost
