#include "fcost/report.hpp"

#include "fcost/errors.hpp"

#include <gmpxx.h>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fcost {
namespace {

constexpr int kTableSizes[] = {2048, 3072, 4096, 6144, 8192};

mpz_class pow10(int k)
{
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return p;
}

// floor(a / b + 1/2) for a, b > 0.
mpz_class round_half_up(const mpz_class& a, const mpz_class& b)
{
    mpz_class q = (2 * a + b) / (2 * b);
    return q;
}

std::string fixed(const Ratio& ratio, int places)
{
    mpz_class scaled = round_half_up(mpz_class(static_cast<long>(ratio.num)) * pow10(places),
                                     mpz_class(static_cast<long>(ratio.den)));
    std::string digits = scaled.get_str();
    if (places == 0) {
        return digits;
    }
    if (digits.size() <= static_cast<std::size_t>(places)) {
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    return digits;
}

std::string ops_or_dash(const std::optional<std::int64_t>& v)
{
    return v ? std::to_string(*v) : std::string("--");
}

struct TableSpec {
    int number;
    std::string id;
    std::string title;
    ProblemKind kind;
    RegevConfig regev;
    std::vector<ShorConfig> shor_rows;
    std::vector<ElementStyle> styles;  ///< perfect table: one Regev row per style
    bool shows_r;
};

std::vector<TableSpec> table_specs(const ReductionModel& bkz200)
{
    const ShorConfig single{std::nullopt, ShorMode::SingleRun, 10};
    const ShorConfig tradeoff{std::nullopt, ShorMode::Tradeoff, 10};
    const std::vector<ShorConfig> both{single, tradeoff};

    std::vector<TableSpec> specs;
    {
        RegevConfig c{RegevMode::Baseline, Lll{}, ElementStyle::EgrPrimes, 0, 10, {1, 1}};
        specs.push_back({1, "1", "RSA IFP: Regev (LLL, r = 1, d = ceil(sqrt n), m = d + 4) vs EHS (w = 1)",
                         ProblemKind::RsaIfp, c,
                         {ShorConfig{std::nullopt, ShorMode::SingleRun, 1},
                          ShorConfig{std::nullopt, ShorMode::Tradeoff, 1}},
                         {}, false});
    }
    {
        RegevConfig c{RegevMode::Optimize, Lll{}, ElementStyle::EgrPrimes, 0, 10, {1, 1}};
        specs.push_back({2, "2", "RSA IFP: EGR (LLL, r = 1, optimal d and m) vs EHS (w = 10)",
                         ProblemKind::RsaIfp, c, both, {}, false});
    }
    {
        RegevConfig c{RegevMode::Optimize, bkz200, ElementStyle::EgrPrimes, 0, 10, {1, 1}};
        specs.push_back({3, "3", "RSA IFP: EGR (BKZ-200, r = 1, optimal d and m) vs EHS (w = 10)",
                         ProblemKind::RsaIfp, c, both, {}, false});
    }
    {
        RegevConfig c{RegevMode::Optimize, Lll{}, ElementStyle::EgrPrimes, 0, 10, {1, 16}};
        specs.push_back({4, "4", "RSA IFP: EGR (LLL, optimal r, d and m) vs EHS (w = 10)",
                         ProblemKind::RsaIfp, c, both, {}, true});
    }
    {
        RegevConfig c{RegevMode::Optimize, bkz200, ElementStyle::EgrPrimes, 0, 10, {1, 16}};
        specs.push_back({5, "5", "RSA IFP: EGR (BKZ-200, optimal r, d and m) vs EHS (w = 10)",
                         ProblemKind::RsaIfp, c, both, {}, true});
        RegevConfig p{RegevMode::Perfect, Perfect{}, ElementStyle::EgrPrimes, 0, 10, {1, 1}};
        specs.push_back({5, "5-perfect",
                         "RSA IFP: Regev / EGR (perfect reduction, r = 1, m unbounded) vs EHS (w = 10)",
                         ProblemKind::RsaIfp, p, {tradeoff},
                         {ElementStyle::RegevSquaredPrimes, ElementStyle::EgrPrimes}, false});
    }
    const RegevConfig dlp{RegevMode::Optimize, bkz200, ElementStyle::EgrPrimes, 1, 10, {1, 16}};
    specs.push_back({6, "6", "General DLP in safe-prime groups: EGR (BKZ-200, k = 1) vs ES (w = 10)",
                     ProblemKind::DlpSafePrimeGeneral, dlp, both, {}, true});
    specs.push_back({7, "7", "Short DLP in safe-prime groups: EGR (BKZ-200, k = 1) vs EHS (w = 10)",
                     ProblemKind::DlpSafePrimeShort, dlp, both, {}, true});
    specs.push_back({8, "8", "DLP in Schnorr groups: EGR (BKZ-200, k = 1) vs ES (w = 10)",
                     ProblemKind::DlpSchnorr, dlp, both, {}, true});
    return specs;
}

std::string shor_s_cell(const ShorParameterization& p)
{
    if (p.s) {
        return std::to_string(*p.s);
    }
    return p.algorithm == ShorAlgorithm::Es ? "1" : "--";
}

} // namespace

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b)
{
    const mpz_class lhs = mpz_class(static_cast<long>(a.num)) * static_cast<long>(b.den);
    const mpz_class rhs = mpz_class(static_cast<long>(b.num)) * static_cast<long>(a.den);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool operator==(const Ratio& a, const Ratio& b)
{
    return (a <=> b) == std::strong_ordering::equal;
}

std::string Ratio::str() const
{
    if (den <= 0 || num < 0) {
        throw std::invalid_argument("ratio must be non-negative with positive denominator");
    }
    if (num == 0) {
        return "0.00";
    }
    const mpz_class a = static_cast<long>(num);
    const mpz_class b = static_cast<long>(den);
    // Find k with 100 <= a/b * 10^k < 1000.
    int k = 0;
    auto scaled = [&](int kk) {
        return kk >= 0 ? round_half_up(a * pow10(kk), b) : round_half_up(a, b * pow10(-kk));
    };
    mpz_class v = scaled(k);
    while (v < 100) {
        v = scaled(++k);
    }
    while (v >= 1000) {
        v = scaled(--k);
    }
    std::string digits = v.get_str();
    if (k <= 0) {
        return digits + std::string(static_cast<std::size_t>(-k), '0');
    }
    if (digits.size() <= static_cast<std::size_t>(k)) {
        digits.insert(0, static_cast<std::size_t>(k) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(k), ".");
    return digits;
}

RegevParameterization resolve_regev(int n, const RegevConfig& config)
{
    switch (config.mode) {
    case RegevMode::Optimize:
        return optimize(n, config.reduction, config.style, config.k, config.w, config.r_range);
    case RegevMode::Baseline:
        return baseline_params(n, config.reduction, config.r_range.first, config.style, config.k, config.w);
    case RegevMode::Perfect:
        return perfect_params(n, config.style, config.k, config.w);
    }
    throw std::invalid_argument("unknown Regev mode");
}

ComparisonRow build_comparison(const ProblemInstance& instance, const RegevConfig& regev_config,
                               const ShorConfig& shor_config, const TradeoffTable& tradeoffs)
{
    ComparisonRow row;
    row.instance = instance;
    row.regev = resolve_regev(instance.n, regev_config);
    row.regev_cost = per_run_ops(row.regev);

    const ShorAlgorithm algorithm = shor_config.algorithm.value_or(default_algorithm(instance.kind));
    row.shor = shor_params(instance, algorithm, shor_config.mode, tradeoffs, shor_config.w);
    row.shor_per_run = per_run_ops(row.shor);
    row.shor_overall = overall_ops(row.shor);

    if (row.shor_per_run <= 0 || row.regev_cost.per_run_ops <= 0) {
        throw InvariantViolation("operation counts must be positive");
    }
    row.adv_per_run = Ratio{row.regev_cost.per_run_ops, row.shor_per_run};
    if (row.regev_cost.overall_ops) {
        row.adv_overall = Ratio{*row.regev_cost.overall_ops, row.shor_overall};
    }
    return row;
}

std::vector<PaperTable> reproduce_paper_tables(const std::set<int>& which, const ReductionModel& bkz200)
{
    const TradeoffTable tradeoffs = TradeoffTable::builtin();
    std::vector<PaperTable> out;
    for (const auto& spec : table_specs(bkz200)) {
        if (!which.contains(spec.number)) {
            continue;
        }
        PaperTable table;
        table.number = spec.number;
        table.id = spec.id;
        table.title = spec.title;
        table.perfect = spec.regev.mode == RegevMode::Perfect;
        table.dlp = spec.kind != ProblemKind::RsaIfp;
        table.regev_shows_r = spec.shows_r;
        for (int n : kTableSizes) {
            const auto instance = ProblemInstance::make(spec.kind, n);
            if (spec.styles.empty()) {
                for (const auto& shor : spec.shor_rows) {
                    table.rows.push_back(build_comparison(instance, spec.regev, shor, tradeoffs));
                }
            } else {
                for (auto style : spec.styles) {
                    RegevConfig regev = spec.regev;
                    regev.style = style;
                    table.rows.push_back(build_comparison(instance, regev, spec.shor_rows.front(), tradeoffs));
                }
            }
        }
        out.push_back(std::move(table));
    }
    return out;
}

std::string render_markdown(const std::vector<PaperTable>& tables)
{
    using Cells = std::vector<std::string>;
    auto emit = [](std::ostream& os, const Cells& cells) {
        os << "|";
        for (const auto& c : cells) {
            os << " " << c << " |";
        }
        os << "\n";
    };

    std::ostringstream os;
    for (const auto& t : tables) {
        os << "### Table " << t.id << ": " << t.title << "\n\n";
        const bool es_columns = t.dlp && t.rows.front().shor.algorithm == ShorAlgorithm::Es;

        Cells header{"ceil(log N)"};
        if (t.dlp) {
            header.push_back("z");
        }
        if (t.perfect) {
            header.insert(header.end(), {"d", "C", "log D", "K", "#ops/run"});
        } else {
            header.insert(header.end(), {"d", "m", "C", "log D"});
            header.push_back(t.regev_shows_r ? "K^(r)" : "K");
            if (t.regev_shows_r) {
                header.push_back("r");
            }
            header.insert(header.end(), {"#ops/run", "#ops overall"});
        }
        const std::size_t regev_columns = header.size();
        header.insert(header.end(), {"m", "s"});
        if (es_columns) {
            header.push_back("ς");
        }
        header.insert(header.end(), {"l", "n", "#ops/run", "adv/run"});
        if (!t.perfect) {
            header.insert(header.end(), {"#ops overall", "adv overall"});
        }
        emit(os, header);
        emit(os, Cells(header.size(), "---"));

        int previous_n = 0;
        for (const auto& row : t.rows) {
            const bool first = row.instance.n != previous_n;
            previous_n = row.instance.n;
            const auto& g = row.regev;
            const auto& s = row.shor;

            Cells cells;
            // Regev columns repeat only on the first row of each n, except in
            // the perfect table where each row is a different Regev variant.
            if (first || t.perfect) {
                cells.push_back(first ? std::to_string(row.instance.n) : "");
                if (t.dlp) {
                    cells.push_back(row.instance.z ? std::to_string(*row.instance.z) : "");
                }
                cells.push_back(std::to_string(g.d));
                if (!t.perfect) {
                    cells.push_back(ops_or_dash(g.m));
                }
                cells.push_back(g.c.str());
                cells.push_back(std::to_string(g.log_d));
                cells.push_back(std::to_string(g.k_fib));
                if (t.regev_shows_r) {
                    cells.push_back(std::to_string(g.r));
                }
                cells.push_back(std::to_string(row.regev_cost.per_run_ops));
                if (!t.perfect) {
                    cells.push_back(ops_or_dash(row.regev_cost.overall_ops));
                }
            } else {
                cells.assign(regev_columns, "");
            }

            if (t.perfect && !first) {
                cells.insert(cells.end(), 5, "");
            } else {
                cells.push_back(first ? std::to_string(s.m) : "");
                cells.push_back(shor_s_cell(s));
                if (es_columns) {
                    cells.push_back(std::to_string(s.varsigma));
                }
                cells.push_back(std::to_string(s.ell));
                cells.push_back(std::to_string(s.runs));
                cells.push_back(std::to_string(row.shor_per_run));
            }
            cells.push_back(row.adv_per_run.str());
            if (!t.perfect) {
                cells.push_back(std::to_string(row.shor_overall));
                cells.push_back(row.adv_overall ? row.adv_overall->str() : std::string("inf"));
            }
            emit(os, cells);
        }
        os << "\n";
    }
    return os.str();
}

std::string render_csv(const std::vector<PaperTable>& tables)
{
    if (tables.empty()) {
        return {};
    }
    std::ostringstream os;
    os << "table,problem,n,z,regev_style,d,m,C,log_d,K,r,s_regev,k,regev_per_run,regev_overall,"
          "shor_algorithm,shor_mode,shor_m,s,varsigma,ell,runs,w,shor_per_run,shor_overall,"
          "adv_per_run,adv_overall\n";
    for (const auto& t : tables) {
        for (const auto& row : t.rows) {
            const auto& g = row.regev;
            const auto& s = row.shor;
            os << t.id << ',' << to_string(row.instance.kind) << ',' << row.instance.n << ','
               << (row.instance.z ? std::to_string(*row.instance.z) : "") << ','
               << (g.style == ElementStyle::EgrPrimes ? "egr" : "regev") << ',' << g.d << ','
               << (g.m ? std::to_string(*g.m) : "inf") << ',' << g.c.str() << ',' << g.log_d << ','
               << g.k_fib << ',' << g.r << ',' << g.s << ',' << g.k << ',' << row.regev_cost.per_run_ops
               << ',' << (row.regev_cost.overall_ops ? std::to_string(*row.regev_cost.overall_ops) : "")
               << ',' << to_string(s.algorithm) << ',' << to_string(s.mode) << ',' << s.m << ','
               << (s.s ? std::to_string(*s.s) : "") << ',' << s.varsigma << ',' << s.ell << ','
               << s.runs << ',' << s.w << ',' << row.shor_per_run << ',' << row.shor_overall << ','
               << fixed(row.adv_per_run, 6) << ','
               << (row.adv_overall ? fixed(*row.adv_overall, 6) : std::string("inf")) << '\n';
        }
    }
    return os.str();
}

TradeoffProvider table_provider(TradeoffTable table)
{
    return [table = std::move(table)](ProblemKind kind, int n) { return table.find(kind, n); };
}

CrossoverResult crossover_search(ProblemKind kind, const RegevConfig& regev_config,
                                 const ShorConfig& shor_config, const TradeoffProvider& provider,
                                 int n_start, int n_step, int n_limit)
{
    if (n_step < 1 || n_start < 16 || n_limit < n_start) {
        throw ConfigError("crossover range needs n_start >= 16, step >= 1 and limit >= start");
    }
    CrossoverResult result;
    for (int n = n_start; n <= n_limit; n += n_step) {
        TradeoffTable single;
        std::optional<int> z;
        if (shor_config.mode == ShorMode::Tradeoff) {
            auto entry = provider(kind, n);
            if (!entry) {
                throw ConfigError("tradeoff provider has no entry for (" + std::string(to_string(kind)) +
                                  ", n=" + std::to_string(n) + ")");
            }
            z = entry->z;
            single.set(kind, n, *entry);
        }
        const auto row = build_comparison(ProblemInstance::make(kind, n, z), regev_config, shor_config, single);
        result.trajectory.push_back({n, row.regev_cost.per_run_ops, row.shor_per_run, row.adv_per_run});
        if (!result.crossover_n && row.adv_per_run < Ratio{1, 1}) {
            result.crossover_n = n;
        }
    }
    return result;
}

} // namespace fcost
