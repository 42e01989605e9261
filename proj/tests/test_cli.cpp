#include "fcost/cli.hpp"
#include "fcost/errors.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = fcost::cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string value_of(const std::string& text, const std::string& key)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key + ": ", 0) == 0) {
            return line.substr(key.size() + 2);
        }
    }
    return {};
}

std::string run_binary(const std::string& args)
{
    std::string output;
    FILE* pipe = popen((std::string(FCOST_CLI_PATH) + " " + args + " 2>&1").c_str(), "r");
    if (pipe == nullptr) {
        return {};
    }
    std::array<char, 4096> buffer{};
    while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
        output += buffer.data();
    }
    pclose(pipe);
    return output;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST(Cli, TablesCsv)
{
    const auto r = run({"tables", "--which", "1", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_NE(row.find(",2048,"), std::string::npos);
    EXPECT_NE(row.find(",2760,"), std::string::npos);
    EXPECT_NE(row.find(",138000,"), std::string::npos);
}

TEST(Cli, EstimateRegevTable2)
{
    const auto r = run({"estimate-regev", "--n", "2048", "--reduction", "lll", "--r", "1", "--style", "egr"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(value_of(r.out, "d"), "181");
    EXPECT_EQ(value_of(r.out, "m"), "181");
    EXPECT_EQ(value_of(r.out, "C"), "1.01");
    EXPECT_EQ(value_of(r.out, "per_run_ops"), "1480");
}

TEST(Cli, EmulateBinaryClosedForm)
{
    const auto r = run({"emulate", "--schedule", "binary", "--bits", "16", "--seed", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const int l = std::stoi(value_of(r.out, "l"));
    EXPECT_EQ(std::stoi(value_of(r.out, "calls")), 4 * (l - 1));
    EXPECT_EQ(value_of(r.out, "result"), value_of(r.out, "direct"));
}

TEST(Cli, EmulateOtherSchedules)
{
    const auto ehs = run({"emulate", "--schedule", "ehs", "--bits", "1145", "--w", "10", "--seed", "3"});
    ASSERT_EQ(ehs.code, 0) << ehs.err;
    EXPECT_EQ(value_of(ehs.out, "calls"), "230");
    const auto fib = run({"emulate", "--schedule", "fib-identity", "--bits", "12", "--r", "4"});
    ASSERT_EQ(fib.code, 0) << fib.err;
    EXPECT_EQ(value_of(fib.out, "identity"), "holds");
}

TEST(Cli, EstimateShorAndCompare)
{
    const auto shor = run({"estimate-shor", "--n", "2048", "--problem", "dlp-schnorr", "--mode", "tradeoff"});
    ASSERT_EQ(shor.code, 0) << shor.err;
    EXPECT_EQ(value_of(shor.out, "per_run_ops"), "54");
    const auto cmp = run({"compare", "--n", "2048,8192", "--problem", "rsa"});
    ASSERT_EQ(cmp.code, 0) << cmp.err;
    EXPECT_NE(cmp.out.find("728"), std::string::npos);
    EXPECT_NE(cmp.out.find("1156"), std::string::npos);
}

TEST(Cli, ConfigurationErrorsExitOne)
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"estimate-regev", "--n", "2048", "--bogus"},
             {"estimate-regev", "--n", "2048", "--reduction", "bkz:x"},
             {"estimate-regev", "--n", "2048", "--style", "rsa"},
             {"estimate-shor", "--n", "5120", "--mode", "tradeoff"},
             {"tables", "--which", "9"},
             {"tables", "--format", "xml"},
             {"crossover", "--limit", "9216"},
             {"emulate", "--schedule", "quantum"},
             {"compare", "--config", "/nonexistent/scenario.cfg"},
             {"nonsense"},
             {}}) {
        const auto r = run(args);
        EXPECT_EQ(r.code, 1) << (args.empty() ? "<none>" : args[0]) << ": " << r.out;
        EXPECT_FALSE(r.err.empty());
    }
}

TEST(Cli, FailureMapping)
{
    std::ostringstream err;
    EXPECT_EQ(fcost::report_failure(std::make_exception_ptr(fcost::InvariantViolation("x")), err), 2);
    EXPECT_EQ(fcost::report_failure(std::make_exception_ptr(fcost::ConfigError("x")), err), 1);
    EXPECT_EQ(fcost::report_failure(std::make_exception_ptr(fcost::OracleError("x")), err), 1);
    EXPECT_EQ(fcost::report_failure(std::make_exception_ptr(std::invalid_argument("x")), err), 1);
    EXPECT_NE(err.str().find("internal invariant violated"), std::string::npos);
}

TEST(Cli, ConfigFileMergesWithFlagsWinning)
{
    const auto path = write_temp("fcost_cli_test.cfg", "# scenario\nreduction = lll\nr = 1\nn = 4096\n");
    const auto from_file = run({"estimate-regev", "--config", path.string()});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(value_of(from_file.out, "n"), "4096");
    EXPECT_EQ(value_of(from_file.out, "d"), "256");

    const auto overridden = run({"estimate-regev", "--config", path.string(), "--n", "2048"});
    ASSERT_EQ(overridden.code, 0) << overridden.err;
    EXPECT_EQ(value_of(overridden.out, "n"), "2048");
    EXPECT_EQ(value_of(overridden.out, "d"), "181");

    const auto scenario = write_temp("fcost_cli_scenario.cfg", "n = 2048\nproblem = dlp-schnorr\nk = 1\n");
    const auto cmp = run({"compare", "--scenario", scenario.string()});
    ASSERT_EQ(cmp.code, 0) << cmp.err;
    EXPECT_NE(cmp.out.find("736"), std::string::npos);

    const auto bad = write_temp("fcost_cli_bad.cfg", "this line has no equals sign\n");
    EXPECT_EQ(run({"estimate-regev", "--config", bad.string()}).code, 1);
    std::filesystem::remove(path);
    std::filesystem::remove(scenario);
    std::filesystem::remove(bad);
}

TEST(Cli, TradeoffFileFeedsCrossover)
{
    const auto path = write_temp("fcost_cli_tradeoffs.txt", "rsa, 5120, 28, 92, 31, 0\n");
    const auto r = run({"crossover", "--start", "4096", "--step", "1024", "--limit", "6144", "--tradeoff-file",
                        path.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("| 5120 |"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, BinaryOutputIsDeterministic)
{
    for (const char* args : {"emulate --schedule binary --bits 24 --seed 99", "emulate --schedule ehs --bits 300 --seed 5",
                             "tables --which 1-8 --format csv"}) {
        const auto first = run_binary(args);
        EXPECT_FALSE(first.empty());
        EXPECT_EQ(first, run_binary(args)) << args;
    }
    EXPECT_NE(run_binary("emulate --schedule binary --bits 24 --seed 1"),
              run_binary("emulate --schedule binary --bits 24 --seed 2"));
}
