#include "fcost/lattice_model.hpp"

#include "fcost/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fcost {
namespace {

// Small-block anchors (block size, delta) as used by the public lattice estimator.
constexpr std::array<std::pair<int, double>, 8> kSmallBlock{{
    {2, 1.0219},
    {5, 1.01862},
    {10, 1.01616},
    {15, 1.01485},
    {20, 1.01420},
    {25, 1.01342},
    {28, 1.01331},
    {40, 1.01295},
}};

double small_block_delta(int block)
{
    if (block <= kSmallBlock.front().first) {
        return kSmallBlock.front().second;
    }
    for (std::size_t i = 1; i < kSmallBlock.size(); ++i) {
        auto [b1, d1] = kSmallBlock[i];
        if (block <= b1) {
            auto [b0, d0] = kSmallBlock[i - 1];
            double t = static_cast<double>(block - b0) / static_cast<double>(b1 - b0);
            return d0 + t * (d1 - d0);
        }
    }
    return kSmallBlock.back().second;
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

} // namespace

ReductionModel make_bkz(int block)
{
    if (block < 2) {
        throw std::invalid_argument("BKZ block size must be >= 2");
    }
    return Bkz{block};
}

ReductionModel make_explicit_delta(double delta)
{
    if (!(delta > 1.0)) {
        throw std::invalid_argument("explicit delta must be > 1");
    }
    return ExplicitDelta{delta};
}

double chen_delta(int block)
{
    const double beta = block;
    const double base = beta / (2.0 * std::numbers::pi * std::numbers::e) *
                        std::pow(std::numbers::pi * beta, 1.0 / beta);
    return std::pow(base, 1.0 / (2.0 * (beta - 1.0)));
}

double root_hermite(const ReductionModel& model)
{
    return std::visit(Overloaded{
                          [](const Lll&) { return kLllDelta; },
                          [](const Bkz& b) {
                              if (b.block < 2) {
                                  throw std::invalid_argument("BKZ block size must be >= 2");
                              }
                              return b.block <= 40 ? small_block_delta(b.block) : chen_delta(b.block);
                          },
                          [](const Perfect&) -> double {
                              throw std::domain_error("delta undefined for perfect reduction");
                          },
                          [](const ExplicitDelta& e) {
                              if (!(e.delta > 1.0)) {
                                  throw std::invalid_argument("explicit delta must be > 1");
                              }
                              return e.delta;
                          },
                      },
                      model);
}

double gamma_from_delta(double delta)
{
    if (!(delta > 1.0)) {
        throw std::invalid_argument("delta must be > 1");
    }
    return delta * delta;
}

Log2Gamma log2_gamma(const ReductionModel& model)
{
    if (is_perfect(model)) {
        return PerfectLimit{};
    }
    return 2.0 * std::log2(root_hermite(model));
}

bool is_perfect(const ReductionModel& model)
{
    return std::holds_alternative<Perfect>(model);
}

ReductionModel parse_reduction_model(std::string_view text)
{
    if (text == "lll") {
        return Lll{};
    }
    if (text == "perfect") {
        return Perfect{};
    }
    if (text == "paper-bkz200") {
        return ExplicitDelta{kPaperBkz200Delta};
    }
    auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        auto head = text.substr(0, colon);
        auto tail = text.substr(colon + 1);
        try {
            if (head == "bkz") {
                int block = 0;
                auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), block);
                if (ec == std::errc{} && ptr == tail.data() + tail.size()) {
                    return make_bkz(block);
                }
            } else if (head == "delta") {
                std::size_t used = 0;
                std::string s(tail);
                double delta = std::stod(s, &used);
                if (used == s.size()) {
                    return make_explicit_delta(delta);
                }
            }
        } catch (const std::exception& e) {
            throw ConfigError("invalid reduction model '" + std::string(text) + "': " + e.what());
        }
    }
    throw ConfigError("unknown reduction model '" + std::string(text) +
                      "' (expected lll, bkz:<beta>, perfect, delta:<value> or paper-bkz200)");
}

std::string to_string(const ReductionModel& model)
{
    return std::visit(Overloaded{
                          [](const Lll&) { return std::string("lll"); },
                          [](const Bkz& b) { return "bkz:" + std::to_string(b.block); },
                          [](const Perfect&) { return std::string("perfect"); },
                          [](const ExplicitDelta& e) {
                              std::ostringstream os;
                              os.precision(10);
                              os << "delta:" << e.delta;
                              return os.str();
                          },
                      },
                      model);
}

} // namespace fcost
