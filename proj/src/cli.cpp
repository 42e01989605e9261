#include "fcost/cli.hpp"

#include "fcost/errors.hpp"
#include "fcost/lattice_model.hpp"
#include "fcost/number_theory.hpp"
#include "fcost/regev_cost.hpp"
#include "fcost/report.hpp"
#include "fcost/schedules.hpp"
#include "fcost/shor_cost.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcost {
namespace {

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Flat `key = value` file, '#' comments. Keys are flag names without dashes.
std::vector<std::pair<std::string, std::string>> read_key_values(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key = value");
        }
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": empty key");
        }
        out.emplace_back(key, value);
    }
    return out;
}

/// Expands --config/--scenario into flags placed before the user's own flags,
/// so that explicit flags override the file (options take the last value).
std::vector<std::string> expand_config(std::span<const std::string> args)
{
    std::vector<std::string> out(args.begin(), args.end());
    if (out.empty()) {
        return out;
    }
    std::string path;
    for (std::size_t i = 1; i < out.size(); ++i) {
        const auto& a = out[i];
        for (const std::string flag : {"--config", "--scenario"}) {
            if (a == flag && i + 1 < out.size()) {
                path = out[i + 1];
            } else if (a.rfind(flag + "=", 0) == 0) {
                path = a.substr(flag.size() + 1);
            }
        }
    }
    if (path.empty()) {
        return out;
    }
    std::vector<std::string> injected;
    for (const auto& [key, value] : read_key_values(path)) {
        if (key == "config" || key == "scenario") {
            continue;
        }
        injected.push_back("--" + key);
        injected.push_back(value);
    }
    out.insert(out.begin() + 1, injected.begin(), injected.end());
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what)
{
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            continue;
        }
        auto dash = item.find('-', 1);
        try {
            if (dash != std::string::npos) {
                int lo = std::stoi(item.substr(0, dash));
                int hi = std::stoi(item.substr(dash + 1));
                for (int v = lo; v <= hi; ++v) {
                    out.push_back(v);
                }
            } else {
                std::size_t used = 0;
                out.push_back(std::stoi(item, &used));
                if (used != item.size()) {
                    throw std::invalid_argument(item);
                }
            }
        } catch (const std::logic_error&) {
            throw ConfigError("invalid " + what + " list '" + text + "'");
        }
    }
    return out;
}

ElementStyle parse_style(const std::string& text)
{
    if (text == "egr") return ElementStyle::EgrPrimes;
    if (text == "regev") return ElementStyle::RegevSquaredPrimes;
    throw ConfigError("unknown style '" + text + "' (expected egr or regev)");
}

std::string_view style_name(ElementStyle style)
{
    return style == ElementStyle::EgrPrimes ? "egr" : "regev";
}

/// Regev-side flags shared by estimate-regev, compare and crossover.
struct RegevFlags {
    std::string reduction = "paper-bkz200";
    std::string style = "egr";
    std::string r = "auto";
    int r_max = 16;
    int k = 0;
    int w = 10;
    std::string mode = "optimize";

    void add_to(CLI::App* app)
    {
        app->add_option("--reduction", reduction, "lll, bkz:<beta>, perfect, delta:<value> or paper-bkz200")
            ->capture_default_str();
        app->add_option("--style", style, "egr (first d primes) or regev (their squares)")->capture_default_str();
        app->add_option("--r", r, "auto or a fixed r")->capture_default_str();
        app->add_option("--r-max", r_max, "largest r searched when --r auto")->capture_default_str();
        app->add_option("--k", k, "number of arbitrary elements")->capture_default_str();
        app->add_option("--w", w, "window size for the arbitrary-element part")->capture_default_str();
        app->add_option("--regev-mode", mode, "optimize or baseline (d = ceil(sqrt n), m = d + 4)")
            ->capture_default_str();
    }

    RegevConfig resolve() const
    {
        RegevConfig c;
        c.reduction = parse_reduction_model(reduction);
        c.style = parse_style(style);
        c.k = k;
        c.w = w;
        if (r == "auto") {
            c.r_range = {1, r_max};
        } else {
            int fixed = 0;
            try {
                fixed = std::stoi(r);
            } catch (const std::logic_error&) {
                throw ConfigError("invalid --r '" + r + "'");
            }
            c.r_range = {fixed, fixed};
        }
        if (c.r_range.first < 1 || c.r_range.last < c.r_range.first) {
            throw ConfigError("r must be >= 1");
        }
        if (k < 0 || w < 1) {
            throw ConfigError("need k >= 0 and w >= 1");
        }
        if (is_perfect(c.reduction)) {
            c.mode = RegevMode::Perfect;
        } else if (mode == "optimize") {
            c.mode = RegevMode::Optimize;
        } else if (mode == "baseline") {
            c.mode = RegevMode::Baseline;
        } else {
            throw ConfigError("unknown regev mode '" + mode + "'");
        }
        return c;
    }
};

/// Shor-side flags shared by estimate-shor, compare and crossover.
struct ShorFlags {
    std::string algorithm = "auto";
    std::string mode = "tradeoff";
    int w = 10;
    std::string tradeoff_file;

    void add_to(CLI::App* app, const std::string& window_flag)
    {
        app->add_option("--algorithm", algorithm, "ehs, es or auto (by problem kind)")->capture_default_str();
        app->add_option("--mode", mode, "single or tradeoff")->capture_default_str();
        app->add_option(window_flag, w, "window size for EHS/ES")->capture_default_str();
        app->add_option("--tradeoff-file", tradeoff_file, "extra (kind, n, s, l, runs, varsigma[, z]) records");
    }

    ShorConfig resolve() const
    {
        ShorConfig c;
        if (algorithm != "auto") {
            c.algorithm = parse_shor_algorithm(algorithm);
        }
        c.mode = parse_shor_mode(mode);
        if (w < 1) {
            throw ConfigError("window size must be >= 1");
        }
        c.w = w;
        return c;
    }

    TradeoffTable table() const
    {
        auto t = TradeoffTable::builtin();
        if (!tradeoff_file.empty()) {
            t.merge(TradeoffTable::load(tradeoff_file));
        }
        return t;
    }
};

void print_regev(std::ostream& out, const RegevParameterization& p, const ReductionModel& model)
{
    const auto cost = per_run_ops(p);
    out << "n: " << p.n << "\n";
    out << "reduction: " << to_string(model) << "\n";
    if (!is_perfect(model)) {
        out << std::setprecision(8) << "delta: " << root_hermite(model) << "\n";
        out << "log2_gamma: " << std::get<double>(log2_gamma(model)) << "\n";
    }
    out << "style: " << style_name(p.style) << "\n";
    out << "d: " << p.d << "\n";
    out << "m: " << (p.m ? std::to_string(*p.m) : "unbounded") << "\n";
    out << "C: " << p.c.str() << "\n";
    out << "log_d: " << p.log_d << "\n";
    out << "K: " << p.k_fib << "\n";
    out << "r: " << p.r << "\n";
    out << "s: " << p.s << "\n";
    out << "k: " << p.k << "\n";
    out << "w: " << p.w << "\n";
    out << "fib_part: " << cost.fib_part << "\n";
    out << "k_part: " << cost.k_part << "\n";
    out << "per_run_ops: " << cost.per_run_ops << "\n";
    out << "overall_ops: " << (cost.overall_ops ? std::to_string(*cost.overall_ops) : "unbounded") << "\n";
}

void print_shor(std::ostream& out, const ProblemInstance& inst, const ShorParameterization& p)
{
    out << "problem: " << to_string(inst.kind) << "\n";
    out << "n: " << inst.n << "\n";
    if (inst.z) {
        out << "z: " << *inst.z << "\n";
    }
    out << "algorithm: " << to_string(p.algorithm) << "\n";
    out << "mode: " << to_string(p.mode) << "\n";
    out << "m: " << p.m << "\n";
    out << "s: " << (p.s ? std::to_string(*p.s) : "--") << "\n";
    out << "ell: " << p.ell << "\n";
    out << "varsigma: " << p.varsigma << "\n";
    out << "runs: " << p.runs << "\n";
    out << "w: " << p.w << "\n";
    out << "per_run_ops: " << per_run_ops(p) << "\n";
    out << "overall_ops: " << overall_ops(p) << "\n";
}

std::string render_rows(const std::vector<ComparisonRow>& rows)
{
    std::ostringstream os;
    os << "| problem | n | d | m | C | log D | K | r | regev/run | regev overall | algorithm | mode | "
          "shor/run | shor overall | adv/run | adv overall |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& row : rows) {
        const auto& g = row.regev;
        os << "| " << to_string(row.instance.kind) << " | " << row.instance.n << " | " << g.d << " | "
           << (g.m ? std::to_string(*g.m) : "inf") << " | " << g.c.str() << " | " << g.log_d << " | "
           << g.k_fib << " | " << g.r << " | " << row.regev_cost.per_run_ops << " | "
           << (row.regev_cost.overall_ops ? std::to_string(*row.regev_cost.overall_ops) : "inf") << " | "
           << to_string(row.shor.algorithm) << " | " << to_string(row.shor.mode) << " | " << row.shor_per_run
           << " | " << row.shor_overall << " | " << row.adv_per_run.str() << " | "
           << (row.adv_overall ? row.adv_overall->str() : "inf") << " |\n";
    }
    return os.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw ConfigError("cannot write '" + path + "'");
    }
    file << text;
}

int run_emulate(const std::string& schedule, int bits, std::uint64_t seed, int w, int r,
                int elements, const std::string& modulus_text, std::ostream& out)
{
    mpz_class modulus;
    if (modulus.set_str(modulus_text, 10) != 0 || modulus < 3) {
        throw ConfigError("invalid modulus '" + modulus_text + "'");
    }
    if (bits < 1) {
        throw ConfigError("--bits must be >= 1");
    }
    std::mt19937_64 rng(seed);
    auto random_unit = [&] {
        for (;;) {
            mpz_class x = static_cast<unsigned long>(rng() >> 1);
            x %= modulus;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
            if (x != 0 && g == 1) {
                return x;
            }
        }
    };
    auto powm = [&](const mpz_class& b, const mpz_class& e) {
        mpz_class o;
        mpz_powm(o.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
        return o;
    };

    out << "schedule: " << schedule << "\n";
    out << "modulus: " << modulus.get_str() << "\n";
    out << "seed: " << seed << "\n";
    if (schedule == "binary") {
        if (bits < 2) {
            throw ConfigError("binary schedule needs --bits >= 2");
        }
        std::vector<mpz_class> c(static_cast<std::size_t>(bits));
        for (auto& x : c) {
            x = random_unit();
        }
        const auto res = emulate_binary_schedule(c, modulus);
        mpz_class direct = 1;
        for (std::size_t j = 0; j < c.size(); ++j) {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), 2, j);
            direct = direct * powm(c[j], e) % modulus;
        }
        out << "l: " << bits << "\n";
        out << "result: " << res.result.get_str() << "\n";
        out << "direct: " << direct.get_str() << "\n";
        out << "calls: " << res.calls << "\n";
        out << "predicted_calls: " << binary_schedule_calls(bits) << "\n";
        out << "peak_registers: " << res.peak_registers << "\n";
        if (res.result != direct || res.calls != binary_schedule_calls(bits) || res.peak_registers != bits + 1) {
            throw InvariantViolation("binary schedule disagrees with the closed form");
        }
    } else if (schedule == "ehs") {
        if (w < 1) {
            throw ConfigError("--w must be >= 1");
        }
        std::vector<mpz_class> v(static_cast<std::size_t>(bits));
        std::vector<bool> control(static_cast<std::size_t>(bits));
        mpz_class direct = 1;
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = random_unit();
            control[i] = (rng() & 1) != 0;
            if (control[i]) {
                direct = direct * v[i] % modulus;
            }
        }
        const auto res = emulate_ehs_schedule(v, control, modulus, w);
        out << "n_e: " << bits << "\n";
        out << "w: " << w << "\n";
        out << "result: " << res.result.get_str() << "\n";
        out << "direct: " << direct.get_str() << "\n";
        out << "calls: " << res.calls << "\n";
        out << "predicted_calls: " << ehs_schedule_calls(bits, w) << "\n";
        if (res.result != direct || res.calls != ehs_schedule_calls(bits, w)) {
            throw InvariantViolation("EHS schedule disagrees with the closed form");
        }
    } else if (schedule == "fib-identity") {
        if (bits > 62 || elements < 1 || r < 1) {
            throw ConfigError("fib-identity needs 1 <= --bits <= 62, --elements >= 1, --r >= 1");
        }
        const std::int64_t big_d = std::int64_t{1} << bits;
        const auto primes = first_primes(static_cast<std::size_t>(elements));
        std::vector<mpz_class> a;
        std::vector<std::int64_t> z;
        for (auto p : primes) {
            a.emplace_back(static_cast<unsigned long>(p));
            z.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(big_d)) - big_d / 2);
        }
        const bool ok = verify_fib_product_identity(a, z, r, big_d, modulus);
        out << "log_d: " << bits << "\n";
        out << "r: " << r << "\n";
        out << "K: " << k_max(r, bits) << "\n";
        out << "elements: " << elements << "\n";
        out << "identity: " << (ok ? "holds" : "FAILS") << "\n";
        if (!ok) {
            throw InvariantViolation("generalized Fibonacci product identity failed");
        }
    } else {
        throw ConfigError("unknown schedule '" + schedule + "' (expected binary, ehs or fib-identity)");
    }
    return 0;
}

} // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Multiplication-count cost model for Regev/EGR versus EHS/ES", "fcost"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string config_path;

    // estimate-regev
    auto* est_regev = app.add_subcommand("estimate-regev", "Optimal Regev/EGR parameters for one modulus size");
    est_regev->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    int regev_n = 0;
    RegevFlags regev_flags;
    regev_flags.reduction = "lll";
    est_regev->add_option("--n", regev_n, "modulus bit length")->required();
    regev_flags.add_to(est_regev);
    est_regev->add_option("--config", config_path, "key = value file");

    // estimate-shor
    auto* est_shor = app.add_subcommand("estimate-shor", "EHS/ES operation counts");
    est_shor->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    int shor_n = 0;
    std::optional<int> shor_z;
    std::string shor_problem = "rsa";
    ShorFlags shor_flags;
    shor_flags.mode = "single";
    est_shor->add_option("--n", shor_n, "modulus bit length")->required();
    est_shor->add_option("--problem", shor_problem, "rsa, dlp-general, dlp-short or dlp-schnorr")
        ->capture_default_str();
    est_shor->add_option("--z", shor_z, "strength level (defaults to the NIST value for tabulated n)");
    shor_flags.add_to(est_shor, "--w");
    est_shor->add_option("--config", config_path, "key = value file");

    // compare
    auto* compare = app.add_subcommand("compare", "Compare Regev/EGR against EHS/ES");
    compare->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string compare_n = "2048";
    std::string compare_problem = "rsa";
    std::string compare_z;
    RegevFlags compare_regev;
    ShorFlags compare_shor;
    compare->add_option("--n", compare_n, "comma-separated modulus sizes")->capture_default_str();
    compare->add_option("--problem", compare_problem, "problem kind")->capture_default_str();
    compare->add_option("--z", compare_z, "strength level (single n only)");
    compare_regev.add_to(compare);
    compare_shor.add_to(compare, "--shor-w");
    compare->add_option("--scenario", config_path, "key = value scenario file");
    compare->add_option("--config", config_path, "alias of --scenario");

    // tables
    auto* tables = app.add_subcommand("tables", "Regenerate the comparison tables");
    tables->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string which = "1-8";
    std::string format = "md";
    std::string out_path;
    std::string bkz200 = "paper-bkz200";
    tables->add_option("--which", which, "table numbers, e.g. 1,3 or 1-8")->capture_default_str();
    tables->add_option("--format", format, "md or csv")->capture_default_str();
    tables->add_option("--out", out_path, "write to file instead of stdout");
    tables->add_option("--bkz200", bkz200, "reduction model standing in for BKZ-200")->capture_default_str();
    tables->add_option("--config", config_path, "key = value file");

    // crossover
    auto* crossover = app.add_subcommand("crossover", "Smallest n where Regev/EGR wins per run");
    crossover->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string cross_problem = "rsa";
    int cross_start = 2048;
    int cross_step = 1024;
    int cross_limit = 8192;
    RegevFlags cross_regev;
    ShorFlags cross_shor;
    crossover->add_option("--problem", cross_problem, "problem kind")->capture_default_str();
    crossover->add_option("--start", cross_start, "first n probed")->capture_default_str();
    crossover->add_option("--step", cross_step, "n increment")->capture_default_str();
    crossover->add_option("--limit", cross_limit, "last n probed")->capture_default_str();
    cross_regev.add_to(crossover);
    cross_shor.add_to(crossover, "--shor-w");
    crossover->add_option("--config", config_path, "key = value file");

    // emulate
    auto* emulate = app.add_subcommand("emulate", "Classical emulation of the exponentiation schedules");
    emulate->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string schedule = "binary";
    int emu_bits = 16;
    std::uint64_t seed = 0;
    int emu_w = 1;
    int emu_r = 1;
    int emu_elements = 3;
    std::string emu_modulus = "4294967291";
    emulate->add_option("--schedule", schedule, "binary, ehs or fib-identity")->capture_default_str();
    emulate->add_option("--bits", emu_bits, "l (binary), n_e (ehs) or log2 D (fib-identity)")
        ->capture_default_str();
    emulate->add_option("--seed", seed, "64-bit RNG seed")->capture_default_str();
    emulate->add_option("--w", emu_w, "window size (ehs)")->capture_default_str();
    emulate->add_option("--r", emu_r, "generalized Fibonacci r (fib-identity)")->capture_default_str();
    emulate->add_option("--elements", emu_elements, "number of small primes (fib-identity)")
        ->capture_default_str();
    emulate->add_option("--modulus", emu_modulus, "toy modulus N")->capture_default_str();
    emulate->add_option("--config", config_path, "key = value file");

    try {
        const auto expanded = expand_config(args);
        std::vector<std::string> storage;
        storage.reserve(expanded.size() + 1);
        storage.emplace_back("fcost");
        storage.insert(storage.end(), expanded.begin(), expanded.end());
        std::vector<const char*> argv;
        for (const auto& s : storage) {
            argv.push_back(s.c_str());
        }
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return 0;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return 0;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << "\n";
            auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
            err << sub->help();
            return 1;
        }

        if (*est_regev) {
            const auto config = regev_flags.resolve();
            if (regev_n < 16) {
                throw ConfigError("--n must be >= 16");
            }
            print_regev(out, resolve_regev(regev_n, config), config.reduction);
        } else if (*est_shor) {
            const auto kind = parse_problem_kind(shor_problem);
            const auto inst = ProblemInstance::make(kind, shor_n, shor_z);
            const auto config = shor_flags.resolve();
            const auto p = shor_params(inst, config.algorithm.value_or(default_algorithm(kind)), config.mode,
                                       shor_flags.table(), config.w);
            print_shor(out, inst, p);
        } else if (*compare) {
            const auto kind = parse_problem_kind(compare_problem);
            const auto regev = compare_regev.resolve();
            const auto shor = compare_shor.resolve();
            const auto table = compare_shor.table();
            const auto sizes = parse_int_list(compare_n, "n");
            if (sizes.empty()) {
                throw ConfigError("no modulus sizes given");
            }
            std::optional<int> z;
            if (!compare_z.empty()) {
                if (sizes.size() != 1) {
                    throw ConfigError("--z needs a single --n");
                }
                z = parse_int_list(compare_z, "z").at(0);
            }
            std::vector<ComparisonRow> rows;
            for (int n : sizes) {
                rows.push_back(build_comparison(ProblemInstance::make(kind, n, z), regev, shor, table));
            }
            out << render_rows(rows);
        } else if (*tables) {
            const auto numbers = parse_int_list(which, "table");
            std::set<int> wanted;
            for (int t : numbers) {
                if (t < 1 || t > 8) {
                    throw ConfigError("table numbers run from 1 to 8");
                }
                wanted.insert(t);
            }
            const auto model = parse_reduction_model(bkz200);
            if (is_perfect(model)) {
                throw ConfigError("--bkz200 cannot be perfect");
            }
            const auto generated = reproduce_paper_tables(wanted, model);
            if (format == "md") {
                write_output(render_markdown(generated), out_path, out);
            } else if (format == "csv") {
                write_output(render_csv(generated), out_path, out);
            } else {
                throw ConfigError("unknown format '" + format + "' (expected md or csv)");
            }
        } else if (*crossover) {
            const auto kind = parse_problem_kind(cross_problem);
            const auto regev = cross_regev.resolve();
            const auto shor = cross_shor.resolve();
            const auto result = crossover_search(kind, regev, shor, table_provider(cross_shor.table()),
                                                 cross_start, cross_step, cross_limit);
            out << "| n | regev/run | shor/run | adv/run |\n|---|---|---|---|\n";
            for (const auto& pt : result.trajectory) {
                out << "| " << pt.n << " | " << pt.regev_per_run << " | " << pt.shor_per_run << " | "
                    << pt.adv_per_run.str() << " |\n";
            }
            out << "crossover: " << (result.crossover_n ? std::to_string(*result.crossover_n) : "none") << "\n";
        } else if (*emulate) {
            return run_emulate(schedule, emu_bits, seed, emu_w, emu_r, emu_elements, emu_modulus, out);
        }
        return 0;
    } catch (...) {
        return report_failure(std::current_exception(), err);
    }
}

int report_failure(std::exception_ptr failure, std::ostream& err)
{
    try {
        std::rethrow_exception(failure);
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace fcost
