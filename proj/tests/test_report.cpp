#include "fcost/errors.hpp"
#include "fcost/report.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace fcost;

TEST(Ratio, ThreeSignificantFigures)
{
    EXPECT_EQ((Ratio{1480, 602}).str(), "2.46");
    EXPECT_EQ((Ratio{267880, 602}).str(), "445");
    EXPECT_EQ((Ratio{736, 54}).str(), "13.6");
    EXPECT_EQ((Ratio{2760, 6018}).str(), "0.459");
    EXPECT_EQ((Ratio{1, 1}).str(), "1.00");
    EXPECT_EQ((Ratio{123456, 1}).str(), "123000");
    EXPECT_EQ((Ratio{9995, 1000}).str(), "10.0");
}

TEST(Ratio, ExactOrdering)
{
    EXPECT_EQ((Ratio{2, 4}), (Ratio{1, 2}));
    EXPECT_LT((Ratio{999999, 1000000}), (Ratio{1, 1}));
    EXPECT_GT((Ratio{1000001, 1000000}), (Ratio{1, 1}));
}

TEST(Comparison, Table2Row)
{
    RegevConfig regev;
    regev.reduction = Lll{};
    regev.r_range = {1, 1};
    ShorConfig shor;
    shor.mode = ShorMode::SingleRun;
    const auto row = build_comparison(ProblemInstance::make(ProblemKind::RsaIfp, 2048), regev, shor);
    EXPECT_EQ(row.regev_cost.per_run_ops, 1480);
    EXPECT_EQ(row.shor_per_run, 602);
    EXPECT_NEAR(row.adv_per_run.value(), 2.45, 0.02);
    ASSERT_TRUE(row.adv_overall.has_value());
    EXPECT_NEAR(row.adv_overall->value(), 444, 1.0);
    EXPECT_EQ(row.adv_per_run, (Ratio{1480, 602}));
}

TEST(Comparison, Table8TradeoffRow)
{
    RegevConfig regev;
    regev.k = 1;
    const auto row = build_comparison(ProblemInstance::make(ProblemKind::DlpSchnorr, 2048), regev, ShorConfig{});
    EXPECT_EQ(row.regev_cost.per_run_ops, 736);
    EXPECT_EQ(row.shor_per_run, 54);
    EXPECT_EQ(row.adv_per_run.str(), "13.6");
}

TEST(Comparison, PerfectIsUnbounded)
{
    RegevConfig regev;
    regev.mode = RegevMode::Perfect;
    regev.reduction = Perfect{};
    const auto row = build_comparison(ProblemInstance::make(ProblemKind::RsaIfp, 2048), regev, ShorConfig{});
    EXPECT_FALSE(row.adv_overall.has_value());
    EXPECT_EQ(row.regev_cost.per_run_ops, 400);
}

TEST(Comparison, MissingTradeoffIsConfigError)
{
    try {
        build_comparison(ProblemInstance::make(ProblemKind::RsaIfp, 5120), RegevConfig{}, ShorConfig{});
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("5120"), std::string::npos);
    }
}

TEST(Tables, EmptySelection)
{
    const auto tables = reproduce_paper_tables({});
    EXPECT_TRUE(tables.empty());
    EXPECT_EQ(render_markdown(tables), "");
}

TEST(Tables, Table1PerRunColumn)
{
    const auto tables = reproduce_paper_tables({1});
    ASSERT_EQ(tables.size(), 1u);
    std::vector<std::int64_t> per_run;
    for (const auto& row : tables[0].rows) {
        if (row.shor.mode == ShorMode::SingleRun) {
            per_run.push_back(row.regev_cost.per_run_ops);
        }
    }
    EXPECT_EQ(per_run, (std::vector<std::int64_t>{2760, 3400, 3980, 4820, 5560}));
}

TEST(Tables, Table5IncludesPerfectComparison)
{
    const auto tables = reproduce_paper_tables({5});
    ASSERT_EQ(tables.size(), 2u);
    EXPECT_EQ(tables[1].id, "5-perfect");
    EXPECT_TRUE(tables[1].perfect);
    EXPECT_EQ(tables[1].rows.size(), 10u);
    const auto md = render_markdown(tables);
    EXPECT_NE(md.find("0.346"), std::string::npos);
}

TEST(Tables, MarkdownRowsHaveHeaderWidth)
{
    const auto md = render_markdown(reproduce_paper_tables({1, 2, 3, 4, 5, 6, 7, 8}));
    std::istringstream in(md);
    std::string line;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] != '|') {
            width = 0;
            continue;
        }
        const auto cells = static_cast<std::size_t>(std::count(line.begin(), line.end(), '|'));
        if (width == 0) {
            width = cells;
        }
        EXPECT_EQ(cells, width) << line;
    }
}

TEST(Tables, CsvHasExactIntegers)
{
    const auto csv = render_csv(reproduce_paper_tables({1}));
    EXPECT_EQ(csv.rfind("table,problem,n,", 0), 0u);
    EXPECT_NE(csv.find(",2760,138000,"), std::string::npos);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
}

TEST(Crossover, ScanOracleSignChangesAtMostOnce)
{
    // A synthetic provider: EHS with a tradeoff s = n/128 everywhere.
    TradeoffProvider provider = [](ProblemKind kind, int n) -> std::optional<TradeoffEntry> {
        const std::int64_t m = exponent_bound(ProblemInstance::make(kind, n));
        const int s = n / 128;
        return TradeoffEntry{s, (m + s - 1) / s, s + 3, 0, std::nullopt};
    };
    RegevConfig r1;
    r1.r_range = {1, 1};
    const ShorConfig shor{ShorAlgorithm::Ehs, ShorMode::Tradeoff, 10};
    for (const auto& config : {r1, RegevConfig{}}) {
        const auto result = crossover_search(ProblemKind::RsaIfp, config, shor, provider, 2048, 1024, 40960);
        ASSERT_EQ(result.trajectory.size(), 39u);
        int changes = 0;
        std::optional<int> first_below;
        for (std::size_t i = 0; i < result.trajectory.size(); ++i) {
            const bool below = result.trajectory[i].adv_per_run < Ratio{1, 1};
            if (below && !first_below) {
                first_below = result.trajectory[i].n;
            }
            if (i > 0 && below != (result.trajectory[i - 1].adv_per_run < Ratio{1, 1})) {
                ++changes;
            }
        }
        EXPECT_LE(changes, 1);
        EXPECT_EQ(result.crossover_n, first_below);
    }
}

TEST(Crossover, ProviderGapIsNamed)
{
    const auto provider = table_provider(TradeoffTable::builtin());
    try {
        crossover_search(ProblemKind::RsaIfp, RegevConfig{}, ShorConfig{}, provider, 2048, 1024, 9216);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("5120"), std::string::npos) << e.what();
    }
    const auto ok = crossover_search(ProblemKind::RsaIfp, RegevConfig{}, ShorConfig{}, provider, 2048, 2048, 8192);
    EXPECT_EQ(ok.trajectory.size(), 4u);
    EXPECT_FALSE(ok.crossover_n.has_value());
}
