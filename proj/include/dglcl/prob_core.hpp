#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dglcl/rng.hpp"

namespace dglcl {

inline constexpr double kSumTolerance = 1e-9;

using Symbol = std::uint32_t;
using Histogram = std::vector<std::uint64_t>;

// Probability vector over symbols 0..|X|-1. Validated on construction and never renormalized.
class Distribution {
public:
    // Throws EmptyVector, NegativeEntry or SumNotOne.
    explicit Distribution(std::vector<double> probs);

    std::size_t alphabet_size() const noexcept { return probs_.size(); }
    std::span<const double> probs() const noexcept { return probs_; }
    double operator[](std::size_t a) const { return probs_[a]; }

    // Mass of the set of symbols flagged true in `mask`.
    double mass(std::span<const std::uint8_t> mask) const;

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    std::vector<double> probs_;
};

// Ordered, non-empty list of symbol indices (x^n or t^N).
class Sequence {
public:
    explicit Sequence(std::vector<Symbol> symbols);

    std::size_t length() const noexcept { return symbols_.size(); }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    Symbol operator[](std::size_t k) const { return symbols_[k]; }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<Symbol> symbols_;
};

struct ChernoffResult {
    double value = 0.0;        // bits
    double lambda_star = 0.5;  // argmin in [0, 1]
};

Distribution validate_distribution(std::vector<double> weights);

// Symbol counts of `seq`; throws SymbolOutOfRange.
Histogram histogram(const Sequence& seq, std::size_t alphabet_size);

Distribution empirical(const Sequence& seq, std::size_t alphabet_size);
Distribution empirical(std::span<const std::uint64_t> counts);

double total_variation(const Distribution& p, const Distribution& q);

// Minimum pairwise total variation over i != j. Requires at least two distributions.
double min_pairwise_tv(std::span<const Distribution> dists);

// Chernoff distance in bits. Throws DisjointSupport when P and Q share no symbol.
ChernoffResult chernoff(const Distribution& p, const Distribution& q, double tol = 1e-9);

// Inverse-CDF sampler with the cumulative vector precomputed once.
class Sampler {
public:
    explicit Sampler(const Distribution& dist);

    Symbol draw(Xoshiro256& rng) const noexcept;
    std::size_t alphabet_size() const noexcept { return cdf_.size(); }

private:
    std::vector<double> cdf_;
    Symbol last_positive_ = 0;
};

Sequence sample(const Distribution& p, std::size_t n, Xoshiro256& rng);

// Same draws as sample(), accumulated into counts instead of materialized.
Histogram sample_counts(const Sampler& sampler, std::size_t n, Xoshiro256& rng);

}  // namespace dglcl
