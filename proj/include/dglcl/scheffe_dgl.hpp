#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dglcl/prob_core.hpp"

namespace dglcl {

// Statistics closer than this are treated as equal; they differ only by rounding in the
// set-mass sums, and exact ties go to the lowest index.
inline constexpr double kTieTolerance = 1e-12;

// Lowest index whose statistic is within kTieTolerance of the minimum.
std::size_t argmin_with_ties(std::span<const double> statistics);

struct DglDecision {
    std::size_t chosen = 0;          // 0-based hypothesis index
    std::vector<double> statistics;  // max_A |T_j(A) - mu(A)| for each j
};

// The M nominals together with the M(M-1)/2 Scheffé sets A_{i,j} = {a : T_i(a) >= T_j(a)}
// and every nominal's mass on every set. Immutable once built.
class ScheffeSystem {
public:
    // Throws FewerThanTwoHypotheses or AlphabetMismatch.
    explicit ScheffeSystem(std::vector<Distribution> nominals);

    std::size_t hypotheses() const noexcept { return nominals_.size(); }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t set_count() const noexcept { return pairs_.size(); }

    const std::vector<Distribution>& nominals() const noexcept { return nominals_; }

    // Pair (i, j), i < j, that defines set s.
    std::pair<std::size_t, std::size_t> set_pair(std::size_t s) const { return pairs_.at(s); }
    std::size_t set_index(std::size_t i, std::size_t j) const;
    std::span<const std::uint8_t> mask(std::size_t s) const;

    // T_j(A_s).
    double nominal_mass(std::size_t j, std::size_t s) const;

    // max over sets of |T_j(A) - mu(A)|. Throws AlphabetMismatch or BadIndex.
    double statistic(std::size_t j, const Distribution& mu) const;

    // Decision from symbol counts; the sequence length is the sum of counts.
    DglDecision decide_histogram(std::span<const std::uint64_t> counts) const;

    DglDecision decide(const Sequence& x) const;

private:
    std::vector<double> statistics_from_set_masses(std::span<const double> mu_mass) const;

    std::vector<Distribution> nominals_;
    std::size_t alphabet_size_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::uint8_t> masks_;        // set_count x alphabet_size
    std::vector<double> nominal_mass_;       // hypotheses x set_count
};

inline ScheffeSystem build_scheffe_system(std::vector<Distribution> nominals) {
    return ScheffeSystem(std::move(nominals));
}

inline double dgl_statistic(const ScheffeSystem& system, std::size_t j, const Distribution& mu) {
    return system.statistic(j, mu);
}

inline DglDecision dgl_decide(const ScheffeSystem& system, const Sequence& x) {
    return system.decide(x);
}

}  // namespace dglcl
