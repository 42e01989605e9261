#include "fcost/shor_cost.hpp"

#include "fcost/errors.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fcost {
namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return (a + b - 1) / b;
}

std::string describe(ProblemKind kind, int n)
{
    return "(" + std::string(to_string(kind)) + ", n=" + std::to_string(n) + ")";
}

std::optional<std::int64_t> exponent_bound_or_none(ProblemKind kind, int n, std::optional<int> z)
{
    if (!z) {
        z = builtin_strength_level(n);
    }
    switch (kind) {
    case ProblemKind::RsaIfp:
    case ProblemKind::DlpSafePrimeGeneral:
        return exponent_bound(ProblemInstance{kind, n, z});
    case ProblemKind::DlpSafePrimeShort:
    case ProblemKind::DlpSchnorr:
        if (z) {
            return exponent_bound(ProblemInstance{kind, n, z});
        }
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

std::string_view to_string(ProblemKind kind)
{
    switch (kind) {
    case ProblemKind::RsaIfp: return "rsa";
    case ProblemKind::DlpSafePrimeGeneral: return "dlp-general";
    case ProblemKind::DlpSafePrimeShort: return "dlp-short";
    case ProblemKind::DlpSchnorr: return "dlp-schnorr";
    }
    return "?";
}

std::string_view to_string(ShorAlgorithm algorithm)
{
    return algorithm == ShorAlgorithm::Ehs ? "ehs" : "es";
}

std::string_view to_string(ShorMode mode)
{
    return mode == ShorMode::SingleRun ? "single" : "tradeoff";
}

ProblemKind parse_problem_kind(std::string_view text)
{
    if (text == "rsa" || text == "RsaIfp") return ProblemKind::RsaIfp;
    if (text == "dlp-general" || text == "DlpSafePrimeGeneral") return ProblemKind::DlpSafePrimeGeneral;
    if (text == "dlp-short" || text == "DlpSafePrimeShort") return ProblemKind::DlpSafePrimeShort;
    if (text == "dlp-schnorr" || text == "DlpSchnorr") return ProblemKind::DlpSchnorr;
    throw ConfigError("unknown problem kind '" + std::string(text) +
                      "' (expected rsa, dlp-general, dlp-short or dlp-schnorr)");
}

ShorAlgorithm parse_shor_algorithm(std::string_view text)
{
    if (text == "ehs") return ShorAlgorithm::Ehs;
    if (text == "es") return ShorAlgorithm::Es;
    throw ConfigError("unknown algorithm '" + std::string(text) + "' (expected ehs or es)");
}

ShorMode parse_shor_mode(std::string_view text)
{
    if (text == "single") return ShorMode::SingleRun;
    if (text == "tradeoff") return ShorMode::Tradeoff;
    throw ConfigError("unknown mode '" + std::string(text) + "' (expected single or tradeoff)");
}

std::optional<int> builtin_strength_level(int n)
{
    switch (n) {
    case 2048: return 112;
    case 3072: return 128;
    case 4096: return 152;
    case 6144: return 176;
    case 8192: return 200;
    default: return std::nullopt;
    }
}

ProblemInstance ProblemInstance::make(ProblemKind kind, int n, std::optional<int> z)
{
    if (n < 16) {
        throw ConfigError("modulus bit length must be >= 16");
    }
    return ProblemInstance{kind, n, z ? z : builtin_strength_level(n)};
}

ShorAlgorithm default_algorithm(ProblemKind kind)
{
    switch (kind) {
    case ProblemKind::RsaIfp:
    case ProblemKind::DlpSafePrimeShort:
        return ShorAlgorithm::Ehs;
    case ProblemKind::DlpSafePrimeGeneral:
    case ProblemKind::DlpSchnorr:
        return ShorAlgorithm::Es;
    }
    return ShorAlgorithm::Ehs;
}

std::int64_t exponent_bound(const ProblemInstance& instance)
{
    switch (instance.kind) {
    case ProblemKind::RsaIfp:
        return instance.n / 2 - 1;
    case ProblemKind::DlpSafePrimeGeneral:
        return instance.n - 1;
    case ProblemKind::DlpSafePrimeShort:
    case ProblemKind::DlpSchnorr:
        if (!instance.z) {
            throw ConfigError("strength level z unknown for " + describe(instance.kind, instance.n));
        }
        return 2 * static_cast<std::int64_t>(*instance.z);
    }
    return 0;
}

std::int64_t per_run_ops_ehs(const ShorParameterization& p)
{
    return 2 * ceil_div(p.m + 2 * p.ell, p.w);
}

std::int64_t per_run_ops_es(const ShorParameterization& p)
{
    return 2 * ceil_div(p.m + p.varsigma + p.ell, p.w);
}

std::int64_t per_run_ops(const ShorParameterization& p)
{
    return p.algorithm == ShorAlgorithm::Ehs ? per_run_ops_ehs(p) : per_run_ops_es(p);
}

std::int64_t overall_ops(const ShorParameterization& p)
{
    return per_run_ops(p) * p.runs;
}

TradeoffTable TradeoffTable::builtin()
{
    TradeoffTable t;
    using K = ProblemKind;
    // (n, s, ell, runs, varsigma)
    const struct {
        K kind;
        int n, s;
        std::int64_t ell, runs, varsigma;
    } rows[] = {
        {K::RsaIfp, 2048, 17, 61, 20, 0},
        {K::RsaIfp, 3072, 21, 74, 24, 0},
        {K::RsaIfp, 4096, 24, 86, 27, 0},
        {K::RsaIfp, 6144, 31, 100, 34, 0},
        {K::RsaIfp, 8192, 34, 121, 37, 0},
        {K::DlpSafePrimeGeneral, 2048, 24, 86, 27, 11},
        {K::DlpSafePrimeGeneral, 3072, 31, 100, 34, 12},
        {K::DlpSafePrimeGeneral, 4096, 34, 121, 37, 12},
        {K::DlpSafePrimeGeneral, 6144, 37, 167, 40, 12},
        {K::DlpSafePrimeGeneral, 8192, 40, 205, 43, 12},
        {K::DlpSafePrimeShort, 2048, 7, 32, 10, 0},
        {K::DlpSafePrimeShort, 3072, 8, 32, 11, 0},
        {K::DlpSafePrimeShort, 4096, 9, 34, 12, 0},
        {K::DlpSafePrimeShort, 6144, 10, 36, 13, 0},
        {K::DlpSafePrimeShort, 8192, 11, 37, 14, 0},
        {K::DlpSchnorr, 2048, 7, 32, 10, 9},
        {K::DlpSchnorr, 3072, 8, 32, 11, 9},
        {K::DlpSchnorr, 4096, 9, 34, 12, 10},
        {K::DlpSchnorr, 6144, 10, 36, 13, 10},
        {K::DlpSchnorr, 8192, 11, 37, 14, 10},
    };
    for (const auto& row : rows) {
        t.set(row.kind, row.n, TradeoffEntry{row.s, row.ell, row.runs, row.varsigma, std::nullopt});
    }
    t.audit();
    return t;
}

TradeoffTable TradeoffTable::parse(std::istream& in)
{
    TradeoffTable t;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        for (auto& ch : line) {
            if (ch == ',') {
                ch = ' ';
            }
        }
        std::istringstream fields(line);
        std::string kind_text;
        if (!(fields >> kind_text)) {
            continue;
        }
        const std::string where = "tradeoff file line " + std::to_string(line_no);
        ProblemKind kind;
        try {
            kind = parse_problem_kind(kind_text);
        } catch (const ConfigError& e) {
            throw ConfigError(where + ": " + e.what());
        }
        long long n = 0, s = 0, ell = 0, runs = 0, varsigma = 0;
        if (!(fields >> n >> s >> ell >> runs >> varsigma)) {
            throw ConfigError(where + ": expected kind, n, s, ell, runs, varsigma [, z]");
        }
        TradeoffEntry entry{static_cast<int>(s), ell, runs, varsigma, std::nullopt};
        long long z = 0;
        if (fields >> z) {
            entry.z = static_cast<int>(z);
        }
        std::string extra;
        if (fields >> extra) {
            throw ConfigError(where + ": trailing field '" + extra + "'");
        }
        if (n < 16 || s < 1 || ell < 1 || runs < s || varsigma < 0) {
            throw ConfigError(where + ": need n >= 16, s >= 1, ell >= 1, runs >= s, varsigma >= 0");
        }
        t.set(kind, static_cast<int>(n), entry);
    }
    try {
        t.audit();
    } catch (const InvariantViolation& e) {
        throw ConfigError(e.what());
    }
    return t;
}

TradeoffTable TradeoffTable::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open tradeoff file '" + path + "'");
    }
    return parse(in);
}

void TradeoffTable::set(ProblemKind kind, int n, TradeoffEntry entry)
{
    entries_[{kind, n}] = entry;
}

void TradeoffTable::merge(const TradeoffTable& other)
{
    for (const auto& [key, entry] : other.entries_) {
        entries_[key] = entry;
    }
}

std::optional<TradeoffEntry> TradeoffTable::find(ProblemKind kind, int n) const
{
    auto it = entries_.find({kind, n});
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void TradeoffTable::audit() const
{
    for (const auto& [key, entry] : entries_) {
        auto m = exponent_bound_or_none(key.first, key.second, entry.z);
        if (m && entry.ell != ceil_div(*m, entry.s)) {
            throw InvariantViolation("tradeoff entry " + describe(key.first, key.second) +
                                     " has ell=" + std::to_string(entry.ell) + " but ceil(m/s)=" +
                                     std::to_string(ceil_div(*m, entry.s)));
        }
    }
}

ShorParameterization single_run_params(const ProblemInstance& instance, ShorAlgorithm algorithm,
                                       int w)
{
    if (w < 1) {
        throw std::invalid_argument("window size must be >= 1");
    }
    ShorParameterization p;
    p.algorithm = algorithm;
    p.mode = ShorMode::SingleRun;
    p.m = exponent_bound(instance);
    p.ell = algorithm == ShorAlgorithm::Ehs ? p.m - kEhsDelta : p.m;
    p.varsigma = 0;
    p.runs = 1;
    p.w = w;
    return p;
}

ShorParameterization tradeoff_params(const ProblemInstance& instance, ShorAlgorithm algorithm,
                                     const TradeoffTable& table, int w)
{
    if (w < 1) {
        throw std::invalid_argument("window size must be >= 1");
    }
    auto entry = table.find(instance.kind, instance.n);
    if (!entry) {
        throw ConfigError("no tradeoff parameters for " + describe(instance.kind, instance.n));
    }
    ProblemInstance inst = instance;
    if (!inst.z && entry->z) {
        inst.z = entry->z;
    }
    ShorParameterization p;
    p.algorithm = algorithm;
    p.mode = ShorMode::Tradeoff;
    p.m = exponent_bound(inst);
    p.s = entry->s;
    p.ell = entry->ell;
    p.varsigma = algorithm == ShorAlgorithm::Es ? entry->varsigma : 0;
    p.runs = entry->runs;
    p.w = w;
    return p;
}

ShorParameterization shor_params(const ProblemInstance& instance, ShorAlgorithm algorithm,
                                 ShorMode mode, const TradeoffTable& table, int w)
{
    return mode == ShorMode::SingleRun ? single_run_params(instance, algorithm, w)
                                       : tradeoff_params(instance, algorithm, table, w);
}

} // namespace fcost
