#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dglcl/prob_core.hpp"
#include "dglcl/scheffe_dgl.hpp"

namespace dglcl {

inline constexpr std::uint64_t kDefaultHistogramCap = 10'000'000;

// C(n+k-1, k-1), saturating at UINT64_MAX.
std::uint64_t composition_count(std::uint64_t n, std::uint64_t k);

// All compositions of n into k non-negative parts, in descending lexicographic order
// starting from (n, 0, ..., 0).
class HistogramEnumeration {
public:
    // Throws BadParams for n or k of zero, TooLarge when the count exceeds `cap`.
    HistogramEnumeration(std::uint64_t n, std::size_t k, std::uint64_t cap = kDefaultHistogramCap);

    std::uint64_t count() const noexcept { return count_; }
    bool done() const noexcept { return done_; }
    std::span<const std::uint64_t> current() const noexcept { return current_; }
    void advance();

private:
    std::uint64_t count_ = 0;
    bool done_ = false;
    Histogram current_;
};

std::vector<Histogram> enumerate_histograms(std::uint64_t n, std::size_t k,
                                            std::uint64_t cap = kDefaultHistogramCap);

// ln of the multinomial probability of `counts` under p (-inf when impossible).
double multinomial_log_pmf(std::span<const std::uint64_t> counts, const Distribution& p);

using HistogramDecider = std::function<std::size_t(std::span<const std::uint64_t>)>;

// sum_i prior_i * sum_h Mult(h; n, P_i) * [decide(h) != i], exactly over every histogram.
double exact_error(const HistogramDecider& decide, std::span<const Distribution> truths,
                   std::span<const double> priors, std::uint64_t n,
                   std::uint64_t cap = kDefaultHistogramCap);

double exact_dgl_error(const ScheffeSystem& system, std::span<const Distribution> truths,
                       std::span<const double> priors, std::uint64_t n,
                       std::uint64_t cap = kDefaultHistogramCap);

double exact_map_error(std::span<const Distribution> truths, std::span<const double> priors,
                       std::uint64_t n, std::uint64_t cap = kDefaultHistogramCap);

// Total multinomial mass under each truth over the enumeration; each should be 1.
std::vector<double> enumeration_mass(std::span<const Distribution> truths, std::uint64_t n,
                                     std::uint64_t cap = kDefaultHistogramCap);

}  // namespace dglcl
