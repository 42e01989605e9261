#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace fcost {

// Lattice-reduction quality assumptions. The GSA slope gamma = delta^2 drives
// the lower bound on Regev's constant C.

struct Lll {};

struct Bkz {
    int block = 2;
};

/// gamma -> 1: no finite delta, the number of runs m grows without bound.
struct Perfect {};

struct ExplicitDelta {
    double delta = 1.0;
};

using ReductionModel = std::variant<Lll, Bkz, Perfect, ExplicitDelta>;

/// Marker returned by log2_gamma for Perfect reduction.
struct PerfectLimit {
    friend bool operator==(PerfectLimit, PerfectLimit) = default;
};

using Log2Gamma = std::variant<double, PerfectLimit>;

/// delta matching the m column of the BKZ-200 tables exactly.
inline constexpr double kPaperBkz200Delta = 1.0060966;

/// Root-Hermite factor of LLL (the beta = 2 small-block anchor).
inline constexpr double kLllDelta = 1.0219;

/// Validates invariants (BKZ block >= 2, explicit delta > 1); throws
/// std::invalid_argument.
ReductionModel make_bkz(int block);
ReductionModel make_explicit_delta(double delta);

/// Chen's asymptotic root-Hermite factor for BKZ-beta.
double chen_delta(int block);

/// delta for a non-Perfect model. BKZ with block <= 40 goes through the
/// small-block anchor table (linear interpolation), larger blocks use Chen.
double root_hermite(const ReductionModel& model);

double gamma_from_delta(double delta);

Log2Gamma log2_gamma(const ReductionModel& model);

bool is_perfect(const ReductionModel& model);

/// Accepts "lll", "bkz:<beta>", "perfect", "delta:<value>" and the named
/// preset "paper-bkz200". Throws ConfigError on anything else.
ReductionModel parse_reduction_model(std::string_view text);

/// Inverse of parse_reduction_model (presets come back as "delta:<value>").
std::string to_string(const ReductionModel& model);

} // namespace fcost
