#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "seqmine/errors.hpp"
#include "seqmine/transaction_db.hpp"

namespace seqmine {

/// Quest-style generator parameters.
struct SynthParams {
    std::size_t D = 400;            // customers
    double C = 15.0;                // mean transactions per customer
    std::size_t I = 1;              // items per transaction; only 1 is supported
    std::size_t N = 15;             // distinct items
    std::size_t pattern_pool_size = 0;  // 0 means N
    double corruption_prob = 0.25;
    std::uint64_t seed = 1;

    std::string label() const {
        char buf[96];
        std::snprintf(buf, sizeof buf, "C%g-I%zu-N%zu-D%zu", C, I, N, D);
        return buf;
    }
};

/// Mean length of pool patterns (geometric, support 1, 2, ...).
inline constexpr double kPoolPatternMeanLength = 4.0;
/// Fraction of emitted items that are uniform noise rather than pool splices.
inline constexpr double kNoiseFraction = 0.1;

inline const std::chrono::sys_days kSynthEpoch{std::chrono::year{2008} / 1 / 1};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Independent stream seed for stream `index` under `master`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ull));
}

/// 1 + Poisson(C - 1) for C >= 1, so the mean stays exactly C; Poisson(C)
/// clamped to 1 below that.
template <typename Rng>
std::size_t transaction_count(double mean, Rng& rng) {
    if (mean < 1.0) return std::max<std::size_t>(1, std::poisson_distribution<std::size_t>(mean)(rng));
    if (mean == 1.0) return 1;
    return 1 + std::poisson_distribution<std::size_t>(mean - 1.0)(rng);
}

inline void validate(const SynthParams& p) {
    if (!(p.C > 0.0) || !std::isfinite(p.C)) throw InvalidParams("C must be positive");
    if (p.N < 1) throw InvalidParams("N must be at least 1");
    if (p.I != 1) throw InvalidParams("only I = 1 (single-item events) is supported");
    if (!(p.corruption_prob >= 0.0 && p.corruption_prob <= 1.0))
        throw InvalidParams("corruption_prob must be in [0, 1]");
}

/// Generates a transaction database. Customers draw a Poisson-shaped number
/// of transactions with mean C (at least one) on consecutive days from
/// 2008-01-01; items come from spliced pool patterns, each item corrupted
/// to a uniform item with corruption_prob, mixed with uniform noise. Deterministic in params.seed
/// and independent of generation order across customers.
inline TransactionDb generate(const SynthParams& params) {
    validate(params);
    const std::size_t pool_size = params.pattern_pool_size ? params.pattern_pool_size : params.N;

    std::mt19937_64 pool_rng(derive_seed(params.seed, 0));
    std::uniform_int_distribution<std::uint32_t> any_item(0, static_cast<std::uint32_t>(params.N - 1));
    std::geometric_distribution<std::size_t> extra_length(1.0 / kPoolPatternMeanLength);
    std::exponential_distribution<double> weight(1.0);

    std::vector<std::vector<std::uint32_t>> pool(pool_size);
    std::vector<double> weights(pool_size);
    for (std::size_t i = 0; i < pool_size; ++i) {
        pool[i].resize(1 + extra_length(pool_rng));
        for (auto& item : pool[i]) item = any_item(pool_rng);
        weights[i] = weight(pool_rng);
    }

    std::vector<RawRecord> rows;
    rows.reserve(static_cast<std::size_t>(static_cast<double>(params.D) * params.C * 1.1));
    for (std::size_t customer = 0; customer < params.D; ++customer) {
        std::mt19937_64 rng(derive_seed(params.seed, customer + 1));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

        const std::size_t n = transaction_count(params.C, rng);
        std::vector<std::uint32_t> items;
        items.reserve(n);
        while (items.size() < n) {
            if (unit(rng) < kNoiseFraction) {
                items.push_back(any_item(rng));
                continue;
            }
            for (std::uint32_t item : pool[pick(rng)]) {
                if (items.size() == n) break;
                items.push_back(unit(rng) < params.corruption_prob ? any_item(rng) : item);
            }
        }

        const std::string object = std::to_string(customer + 1);
        for (std::size_t j = 0; j < n; ++j)
            rows.push_back({object, Timestamp{kSynthEpoch + std::chrono::days{static_cast<long>(j)}},
                            std::to_string(items[j])});
    }
    return TransactionDb::from_rows(std::move(rows));
}

}  // namespace seqmine
