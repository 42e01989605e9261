#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fcost {

enum class ProblemKind { RsaIfp, DlpSafePrimeGeneral, DlpSafePrimeShort, DlpSchnorr };

enum class ShorAlgorithm { Ehs, Es };

enum class ShorMode { SingleRun, Tradeoff };

std::string_view to_string(ProblemKind kind);
std::string_view to_string(ShorAlgorithm algorithm);
std::string_view to_string(ShorMode mode);

/// Accepts "rsa", "dlp-general", "dlp-short", "dlp-schnorr" (plus the enum
/// spellings used in tradeoff files). Throws ConfigError.
ProblemKind parse_problem_kind(std::string_view text);
ShorAlgorithm parse_shor_algorithm(std::string_view text);
ShorMode parse_shor_mode(std::string_view text);

/// NIST strength level for the tabulated modulus sizes.
std::optional<int> builtin_strength_level(int n);

struct ProblemInstance {
    ProblemKind kind = ProblemKind::RsaIfp;
    int n = 2048;
    std::optional<int> z;

    /// z from the argument, else from the built-in lookup.
    static ProblemInstance make(ProblemKind kind, int n, std::optional<int> z = std::nullopt);
};

/// EHS for RSA and short DLP, ES for general DLP and Schnorr groups.
ShorAlgorithm default_algorithm(ProblemKind kind);

/// RSA: n/2 - 1; short DLP and Schnorr: 2z; general DLP: n - 1.
/// Throws ConfigError when a DLP kind lacks z.
std::int64_t exponent_bound(const ProblemInstance& instance);

struct ShorParameterization {
    ShorAlgorithm algorithm = ShorAlgorithm::Ehs;
    ShorMode mode = ShorMode::SingleRun;
    std::int64_t m = 0;
    std::optional<int> s;  ///< tradeoff factor; absent for single runs
    std::int64_t ell = 0;
    std::int64_t varsigma = 0;
    std::int64_t runs = 1;
    int w = 10;
};

/// Window-free single-run offset: ell = m - Delta for EHS.
inline constexpr std::int64_t kEhsDelta = 30;

/// 2 * ceil((m + 2 ell) / w).
std::int64_t per_run_ops_ehs(const ShorParameterization& p);
/// 2 * ceil((m + varsigma + ell) / w).
std::int64_t per_run_ops_es(const ShorParameterization& p);
/// Dispatches on p.algorithm.
std::int64_t per_run_ops(const ShorParameterization& p);
std::int64_t overall_ops(const ShorParameterization& p);

struct TradeoffEntry {
    int s = 0;
    std::int64_t ell = 0;
    std::int64_t runs = 0;
    std::int64_t varsigma = 0;
    std::optional<int> z; ///< strength level supplied alongside the entry, if any
};

/// (kind, n) -> (s, ell, runs, varsigma). Built-in entries cover
/// n in {2048, 3072, 4096, 6144, 8192}; files add or replace entries.
class TradeoffTable {
public:
    static TradeoffTable builtin();

    /// One record per line: kind, n, s, ell, runs, varsigma [, z]. Fields are
    /// comma or whitespace separated; '#' starts a comment. Every record with a
    /// computable m is checked for ell == ceil(m/s). Throws ConfigError.
    static TradeoffTable parse(std::istream& in);
    static TradeoffTable load(const std::string& path);

    void set(ProblemKind kind, int n, TradeoffEntry entry);
    /// Entries from `other` override ours.
    void merge(const TradeoffTable& other);

    std::optional<TradeoffEntry> find(ProblemKind kind, int n) const;

    /// Throws InvariantViolation naming the first entry with ell != ceil(m/s).
    void audit() const;

    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::pair<ProblemKind, int>, TradeoffEntry> entries_;
};

/// EHS: ell = m - 30; ES: varsigma = 0, ell = m; one run.
ShorParameterization single_run_params(const ProblemInstance& instance, ShorAlgorithm algorithm,
                                       int w = 10);

/// From the table; throws ConfigError naming (kind, n) when missing.
ShorParameterization tradeoff_params(const ProblemInstance& instance, ShorAlgorithm algorithm,
                                     const TradeoffTable& table, int w = 10);

ShorParameterization shor_params(const ProblemInstance& instance, ShorAlgorithm algorithm,
                                 ShorMode mode, const TradeoffTable& table, int w = 10);

} // namespace fcost
