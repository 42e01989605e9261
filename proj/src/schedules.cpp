#include "fcost/schedules.hpp"

#include "fcost/errors.hpp"
#include "fcost/number_theory.hpp"
#include "fcost/regev_cost.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace fcost {
namespace {

bool is_unit(const mpz_class& x, const mpz_class& modulus)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return g == 1;
}

mpz_class reduce(const mpz_class& x, const mpz_class& modulus)
{
    mpz_class out;
    mpz_mod(out.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

mpz_class inverse(const mpz_class& x, const mpz_class& modulus)
{
    mpz_class out;
    if (mpz_invert(out.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw OracleError("element " + x.get_str() + " is not invertible mod " + modulus.get_str());
    }
    return out;
}

mpz_class power(const mpz_class& base, const mpz_class& exponent, const mpz_class& modulus)
{
    mpz_class out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

} // namespace

CountingMultOracle::CountingMultOracle(mpz_class modulus)
    : modulus_(std::move(modulus))
{
    if (modulus_ < 2) {
        throw std::invalid_argument("modulus must be >= 2");
    }
}

mpz_class CountingMultOracle::operator()(const mpz_class& t, const mpz_class& u, const mpz_class& v)
{
    if (!is_unit(u, modulus_) || !is_unit(v, modulus_)) {
        throw OracleError("multiplication operands must be invertible mod " + modulus_.get_str());
    }
    ++calls_;
    return reduce(t + u * v, modulus_);
}

ScheduleResult emulate_binary_schedule(std::span<const mpz_class> c_values, const mpz_class& modulus)
{
    const auto l = c_values.size();
    if (l < 2) {
        throw std::invalid_argument("binary schedule needs l >= 2");
    }
    CountingMultOracle oracle(modulus);

    // registers[0] holds c_{l-1}; registers[i] holds registers[i-1]^2 * c_{l-1-i}.
    std::vector<mpz_class> registers;
    registers.reserve(l);
    registers.push_back(reduce(c_values[l - 1], modulus));
    int live = 1;
    int peak = 1;

    for (std::size_t i = 1; i < l; ++i) {
        const mpz_class& c = c_values[l - 1 - i];
        mpz_class fresh = oracle(0, registers.back(), registers.back());
        ++live;
        peak = std::max(peak, live);
        fresh = oracle(0, fresh, c);
        registers.push_back(std::move(fresh));
    }

    const mpz_class result = registers.back();
    ++live; // copy-out register
    peak = std::max(peak, live);

    for (std::size_t i = l - 1; i >= 1; --i) {
        const mpz_class& c = c_values[l - 1 - i];
        const mpz_class& previous = registers[i - 1];
        mpz_class& slot = registers[i];
        slot = oracle(0, slot, inverse(reduce(c, modulus), modulus));
        slot = oracle(slot, reduce(modulus - previous, modulus), previous);
        if (slot != 0) {
            throw InvariantViolation("binary schedule failed to uncompute register " + std::to_string(i));
        }
        --live;
    }

    return ScheduleResult{result, oracle.calls(), peak};
}

ScheduleResult emulate_ehs_schedule(std::span<const mpz_class> v_values,
                                    const std::vector<bool>& control_bits, const mpz_class& modulus,
                                    int w)
{
    if (w < 1) {
        throw std::invalid_argument("window size must be >= 1");
    }
    if (control_bits.size() != v_values.size()) {
        throw std::invalid_argument("one control bit per element required");
    }
    CountingMultOracle oracle(modulus);
    mpz_class acc = 1;
    const std::size_t n_e = v_values.size();

    for (std::size_t start = 0; start < n_e; start += static_cast<std::size_t>(w)) {
        const std::size_t stop = std::min(n_e, start + static_cast<std::size_t>(w));
        // Classical lookup table entry for this window's control bits.
        mpz_class window = 1;
        for (std::size_t i = start; i < stop; ++i) {
            if (!is_unit(v_values[i], modulus)) {
                throw OracleError("element " + v_values[i].get_str() + " is not invertible mod " +
                                  modulus.get_str());
            }
            if (control_bits[i]) {
                window = reduce(window * v_values[i], modulus);
            }
        }
        const mpz_class negated_inverse = reduce(modulus - inverse(window, modulus), modulus);

        mpz_class product = oracle(0, acc, window);
        mpz_class cleared = oracle(acc, negated_inverse, product);
        if (cleared != 0) {
            throw InvariantViolation("EHS schedule failed to clear the input register");
        }
        acc = std::move(product);
    }
    // Input register, output register and the loaded window constant.
    return ScheduleResult{acc, oracle.calls(), 3};
}

bool verify_fib_product_identity(std::span<const mpz_class> a_values,
                                 std::span<const std::int64_t> z_values, int r, std::int64_t big_d,
                                 const mpz_class& modulus)
{
    if (a_values.size() != z_values.size()) {
        throw std::invalid_argument("one exponent per element required");
    }
    if (!is_power_of_two(big_d)) {
        throw std::invalid_argument("D must be a power of two");
    }
    const int log_d = std::countr_zero(static_cast<std::uint64_t>(big_d));
    const int k = k_max(r, log_d);

    std::vector<std::vector<int>> digits;
    digits.reserve(a_values.size());
    mpz_class lhs = 1;
    for (std::size_t i = 0; i < a_values.size(); ++i) {
        const std::int64_t z = z_values[i];
        if (z < -big_d / 2 || z >= big_d / 2) {
            throw std::range_error("z outside [-D/2, D/2)");
        }
        const mpz_class exponent = static_cast<long>(z + big_d / 2);
        digits.push_back(fib_decompose(exponent, r, k));
        lhs = reduce(lhs * power(a_values[i], exponent, modulus), modulus);
    }

    GenFibSequence g(r);
    mpz_class rhs = 1;
    for (int j = 1; j <= k; ++j) {
        mpz_class c = 1;
        for (std::size_t i = 0; i < a_values.size(); ++i) {
            const int zij = digits[i][static_cast<std::size_t>(j - 1)];
            c = reduce(c * power(a_values[i], zij, modulus), modulus);
        }
        rhs = reduce(rhs * power(c, g[static_cast<std::size_t>(j)], modulus), modulus);
    }
    return lhs == rhs;
}

} // namespace fcost
