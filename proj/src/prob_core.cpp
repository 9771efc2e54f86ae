#include "dglcl/prob_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dglcl/error.hpp"

namespace dglcl {

namespace {

void require_same_alphabet(const Distribution& p, const Distribution& q) {
    if (p.alphabet_size() != q.alphabet_size()) {
        throw Error(ErrorCode::AlphabetMismatch,
                    "alphabet sizes differ: " + std::to_string(p.alphabet_size()) + " vs " +
                        std::to_string(q.alphabet_size()));
    }
}

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw Error(ErrorCode::EmptyVector, "distribution has no entries");
    for (std::size_t a = 0; a < probs_.size(); ++a) {
        if (!(probs_[a] >= 0.0) || !std::isfinite(probs_[a])) {
            throw Error(ErrorCode::NegativeEntry,
                        "entry " + std::to_string(a) + " is negative or not finite");
        }
    }
    const double sum = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw Error(ErrorCode::SumNotOne, "entries sum to " + std::to_string(sum));
    }
}

double Distribution::mass(std::span<const std::uint8_t> mask) const {
    if (mask.size() != probs_.size()) {
        throw Error(ErrorCode::AlphabetMismatch, "mask length differs from alphabet size");
    }
    double m = 0.0;
    for (std::size_t a = 0; a < probs_.size(); ++a) {
        if (mask[a]) m += probs_[a];
    }
    return m;
}

Sequence::Sequence(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw Error(ErrorCode::EmptyVector, "sequence is empty");
}

Distribution validate_distribution(std::vector<double> weights) {
    return Distribution(std::move(weights));
}

Histogram histogram(const Sequence& seq, std::size_t alphabet_size) {
    Histogram counts(alphabet_size, 0);
    for (Symbol s : seq.symbols()) {
        if (s >= alphabet_size) {
            throw Error(ErrorCode::SymbolOutOfRange,
                        "symbol " + std::to_string(s) + " outside alphabet of size " +
                            std::to_string(alphabet_size));
        }
        ++counts[s];
    }
    return counts;
}

Distribution empirical(const Sequence& seq, std::size_t alphabet_size) {
    return empirical(histogram(seq, alphabet_size));
}

Distribution empirical(std::span<const std::uint64_t> counts) {
    const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (total == 0) throw Error(ErrorCode::EmptyVector, "histogram has no observations");
    std::vector<double> probs(counts.size());
    const double n = static_cast<double>(total);
    for (std::size_t a = 0; a < counts.size(); ++a) probs[a] = static_cast<double>(counts[a]) / n;
    return Distribution(std::move(probs));
}

double total_variation(const Distribution& p, const Distribution& q) {
    require_same_alphabet(p, q);
    double l1 = 0.0;
    for (std::size_t a = 0; a < p.alphabet_size(); ++a) l1 += std::abs(p[a] - q[a]);
    return std::min(1.0, 0.5 * l1);
}

double min_pairwise_tv(std::span<const Distribution> dists) {
    if (dists.size() < 2) {
        throw Error(ErrorCode::FewerThanTwoHypotheses, "need at least two distributions");
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dists.size(); ++i) {
        for (std::size_t j = i + 1; j < dists.size(); ++j) {
            best = std::min(best, total_variation(dists[i], dists[j]));
        }
    }
    return best;
}

ChernoffResult chernoff(const Distribution& p, const Distribution& q, double tol) {
    require_same_alphabet(p, q);
    if (!(tol > 0.0)) throw Error(ErrorCode::BadParams, "chernoff tolerance must be positive");

    // Only symbols in the common support contribute for interior lambda; endpoints use the
    // continuous extension so the objective is convex on the closed interval.
    std::vector<double> log_p;
    std::vector<double> log_q;
    for (std::size_t a = 0; a < p.alphabet_size(); ++a) {
        if (p[a] > 0.0 && q[a] > 0.0) {
            log_p.push_back(std::log(p[a]));
            log_q.push_back(std::log(q[a]));
        }
    }
    if (log_p.empty()) {
        throw Error(ErrorCode::DisjointSupport, "supports do not intersect; distance is infinite");
    }

    // ln sum_a P(a)^l Q(a)^(1-l), evaluated with a max shift.
    const auto log_sum = [&](double lambda) {
        double shift = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < log_p.size(); ++k) {
            shift = std::max(shift, lambda * log_p[k] + (1.0 - lambda) * log_q[k]);
        }
        double s = 0.0;
        for (std::size_t k = 0; k < log_p.size(); ++k) {
            s += std::exp(lambda * log_p[k] + (1.0 - lambda) * log_q[k] - shift);
        }
        return shift + std::log(s);
    };

    constexpr int kGrid = 33;
    int best_k = 0;
    double best_f = log_sum(0.0);
    for (int k = 1; k < kGrid; ++k) {
        const double f = log_sum(static_cast<double>(k) / (kGrid - 1));
        if (f < best_f) {
            best_f = f;
            best_k = k;
        }
    }
    double best_lambda = static_cast<double>(best_k) / (kGrid - 1);

    double lo = static_cast<double>(std::max(best_k - 1, 0)) / (kGrid - 1);
    double hi = static_cast<double>(std::min(best_k + 1, kGrid - 1)) / (kGrid - 1);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = log_sum(x1);
    double f2 = log_sum(x2);
    while (hi - lo > tol) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = log_sum(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = log_sum(x2);
        }
    }
    const double mid = 0.5 * (lo + hi);
    const double f_mid = log_sum(mid);
    if (f_mid < best_f) {
        best_f = f_mid;
        best_lambda = mid;
    }

    return ChernoffResult{std::max(0.0, -best_f / std::log(2.0)), best_lambda};
}

Sampler::Sampler(const Distribution& dist) : cdf_(dist.alphabet_size()) {
    double acc = 0.0;
    for (std::size_t a = 0; a < cdf_.size(); ++a) {
        acc += dist[a];
        cdf_[a] = acc;
        if (dist[a] > 0.0) last_positive_ = static_cast<Symbol>(a);
    }
}

Symbol Sampler::draw(Xoshiro256& rng) const noexcept {
    const double u = rng.uniform();
    // First symbol whose cumulative mass exceeds u; zero-mass symbols are never selected.
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) return last_positive_;
    return static_cast<Symbol>(it - cdf_.begin());
}

Sequence sample(const Distribution& p, std::size_t n, Xoshiro256& rng) {
    if (n == 0) throw Error(ErrorCode::BadParams, "sample length must be at least 1");
    const Sampler sampler(p);
    std::vector<Symbol> out(n);
    for (auto& s : out) s = sampler.draw(rng);
    return Sequence(std::move(out));
}

Histogram sample_counts(const Sampler& sampler, std::size_t n, Xoshiro256& rng) {
    Histogram counts(sampler.alphabet_size(), 0);
    for (std::size_t k = 0; k < n; ++k) ++counts[sampler.draw(rng)];
    return counts;
}

}  // namespace dglcl
