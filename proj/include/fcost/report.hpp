#pragma once

#include "fcost/lattice_model.hpp"
#include "fcost/regev_cost.hpp"
#include "fcost/shor_cost.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fcost {

/// Exact non-negative ratio of operation counts.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// Three significant figures, rounded half up.
    std::string str() const;

    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);
    friend bool operator==(const Ratio& a, const Ratio& b);
};

enum class RegevMode {
    Optimize,  ///< optimal d, m, r over the r range
    Baseline,  ///< d = ceil(sqrt n), m = d + 4
    Perfect,   ///< gamma -> 1, m unbounded
};

struct RegevConfig {
    RegevMode mode = RegevMode::Optimize;
    ReductionModel reduction = ExplicitDelta{kPaperBkz200Delta};
    ElementStyle style = ElementStyle::EgrPrimes;
    int k = 0;
    int w = 10;
    RRange r_range{};
};

struct ShorConfig {
    std::optional<ShorAlgorithm> algorithm; ///< default_algorithm(kind) when absent
    ShorMode mode = ShorMode::Tradeoff;
    int w = 10;
};

RegevParameterization resolve_regev(int n, const RegevConfig& config);

struct ComparisonRow {
    ProblemInstance instance;
    RegevParameterization regev;
    CostBreakdown regev_cost;
    ShorParameterization shor;
    std::int64_t shor_per_run = 0;
    std::int64_t shor_overall = 0;
    Ratio adv_per_run;
    std::optional<Ratio> adv_overall; ///< nullopt: unbounded
};

/// Throws ConfigError naming (kind, n) if the Shor side needs a tradeoff tuple
/// the table does not have.
ComparisonRow build_comparison(const ProblemInstance& instance, const RegevConfig& regev_config,
                               const ShorConfig& shor_config,
                               const TradeoffTable& tradeoffs = TradeoffTable::builtin());

struct PaperTable {
    int number = 0;
    std::string id;     ///< "1".."8", or "5-perfect"
    std::string title;
    bool perfect = false;
    bool dlp = false;
    bool regev_shows_r = false;
    std::vector<ComparisonRow> rows;
};

/// Regenerates the comparison tables for n in {2048, ..., 8192}. Table 5
/// yields two sections: BKZ-200 with optimal r, and perfect reduction.
std::vector<PaperTable> reproduce_paper_tables(const std::set<int>& which,
                                               const ReductionModel& bkz200 = ExplicitDelta{kPaperBkz200Delta});

std::string render_markdown(const std::vector<PaperTable>& tables);
std::string render_csv(const std::vector<PaperTable>& tables);

using TradeoffProvider = std::function<std::optional<TradeoffEntry>(ProblemKind, int)>;

TradeoffProvider table_provider(TradeoffTable table);

struct CrossoverPoint {
    int n = 0;
    std::int64_t regev_per_run = 0;
    std::int64_t shor_per_run = 0;
    Ratio adv_per_run;
};

struct CrossoverResult {
    std::optional<int> crossover_n; ///< smallest probed n with adv_per_run < 1
    std::vector<CrossoverPoint> trajectory;
};

/// Probes n = n_start, n_start + step, ... <= n_limit and reports where the
/// Regev-side per-run cost first drops below the Shor side. Throws ConfigError
/// naming the first n the provider has no tuple for (tradeoff mode only).
CrossoverResult crossover_search(ProblemKind kind, const RegevConfig& regev_config,
                                 const ShorConfig& shor_config, const TradeoffProvider& provider,
                                 int n_start, int n_step, int n_limit);

} // namespace fcost
