#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poledefect/exact_rank.hpp"
#include "poledefect/modular_rank.hpp"
#include "poledefect/sparse_matrix.hpp"

namespace poledefect {

/// The ten 15-bit primes from the original C rank program.
inline constexpr std::uint32_t listing_primes[] = {32633, 32647, 32653, 32687, 32693,
                                                   32707, 32713, 32717, 32719, 32749};

struct RankConfig {
    std::vector<std::uint32_t> primes{listing_primes[0], listing_primes[1], listing_primes[2]};
    /// Always compute the exact rank as well.
    bool exact = false;
    /// Matrices with rows*cols at most this are certified exactly without being asked.
    std::uint64_t dense_threshold = 200'000;
    /// Run the per-prime eliminations on separate threads.
    bool parallel = true;
    ExactBudget exact_budget{};
    ModularOptions modular{};

    void validate() const {
        if (primes.empty()) throw std::invalid_argument("rank configuration needs at least one prime");
        std::set<std::uint32_t> seen;
        for (auto p : primes) {
            if (!is_prime(p) || p >= (1u << 31))
                throw std::invalid_argument(std::to_string(p) + " is not a prime below 2^31");
            if (!seen.insert(p).second) throw std::invalid_argument("duplicate prime " + std::to_string(p));
        }
    }
};

struct PrimeRank {
    std::uint32_t prime;
    std::size_t rank;

    bool operator==(const PrimeRank&) const = default;
};

struct RankReport {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<PrimeRank> per_prime;
    std::size_t consensus = 0;
    bool agreed = true;
    std::optional<std::size_t> exact_rank;
    bool certified = false;

    /// The exact rank when known, otherwise the consensus.
    std::size_t value() const noexcept { return exact_rank.value_or(consensus); }

    bool operator==(const RankReport&) const = default;
};

inline RankReport rank_multimodular(const SparseIntMatrix& a, const RankConfig& cfg = {}) {
    cfg.validate();
    RankReport rep;
    rep.rows = a.rows();
    rep.cols = a.cols();

    std::vector<std::size_t> ranks(cfg.primes.size(), 0);
    if (cfg.parallel && cfg.primes.size() > 1 && !a.empty()) {
        std::vector<std::future<std::size_t>> jobs;
        jobs.reserve(cfg.primes.size());
        for (auto p : cfg.primes)
            jobs.push_back(std::async(std::launch::async, [&a, p, &cfg] { return rank_mod_p(a, p, cfg.modular); }));
        for (std::size_t i = 0; i < jobs.size(); ++i) ranks[i] = jobs[i].get();
    } else {
        for (std::size_t i = 0; i < cfg.primes.size(); ++i) ranks[i] = rank_mod_p(a, cfg.primes[i], cfg.modular);
    }

    for (std::size_t i = 0; i < cfg.primes.size(); ++i) rep.per_prime.push_back({cfg.primes[i], ranks[i]});
    rep.consensus = *std::max_element(ranks.begin(), ranks.end());
    rep.agreed = std::all_of(ranks.begin(), ranks.end(), [&](std::size_t r) { return r == ranks.front(); });

    if (cfg.exact || static_cast<std::uint64_t>(a.rows()) * a.cols() <= cfg.dense_threshold) {
        rep.exact_rank = rank_exact(a, cfg.exact_budget);
        rep.certified = *rep.exact_rank == rep.consensus;
    }
    return rep;
}

} // namespace poledefect
