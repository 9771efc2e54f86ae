#include "dglcl/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dglcl/classifier.hpp"
#include "dglcl/error.hpp"

namespace dglcl {

namespace {

// Neumaier's compensated sum.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void require_truths(std::span<const Distribution> truths, std::span<const double> priors) {
    if (truths.empty()) throw Error(ErrorCode::FewerThanTwoHypotheses, "no truths supplied");
    for (const auto& p : truths) {
        if (p.alphabet_size() != truths.front().alphabet_size()) {
            throw Error(ErrorCode::AlphabetMismatch, "truths have different alphabet sizes");
        }
    }
    validate_priors(priors, truths.size());
}

}  // namespace

std::uint64_t composition_count(std::uint64_t n, std::uint64_t k) {
    if (k == 0) return 0;
    // C(n+k-1, r) with r = min(k-1, n), built incrementally; each prefix is itself a binomial.
    const std::uint64_t r = std::min(k - 1, n);
    const std::uint64_t top = n + k - 1;
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        const std::uint64_t factor = top - r + i;
        if (c > std::numeric_limits<std::uint64_t>::max() / factor) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        c = c * factor / i;
    }
    return c;
}

HistogramEnumeration::HistogramEnumeration(std::uint64_t n, std::size_t k, std::uint64_t cap) {
    if (n == 0 || k == 0) throw Error(ErrorCode::BadParams, "enumeration needs n >= 1 and k >= 1");
    count_ = composition_count(n, k);
    if (count_ > cap) {
        throw Error(ErrorCode::TooLarge, std::to_string(count_) + " histograms exceed the cap of " +
                                             std::to_string(cap));
    }
    current_.assign(k, 0);
    current_[0] = n;
}

void HistogramEnumeration::advance() {
    if (done_) return;
    const std::size_t k = current_.size();
    const std::uint64_t tail = current_[k - 1];
    current_[k - 1] = 0;
    std::size_t i = k - 1;
    while (i > 0 && current_[i - 1] == 0) --i;
    if (i == 0) {
        done_ = true;
        return;
    }
    --current_[i - 1];
    current_[i] = tail + 1;
}

std::vector<Histogram> enumerate_histograms(std::uint64_t n, std::size_t k, std::uint64_t cap) {
    HistogramEnumeration e(n, k, cap);
    std::vector<Histogram> out;
    out.reserve(e.count());
    for (; !e.done(); e.advance()) out.emplace_back(e.current().begin(), e.current().end());
    return out;
}

double multinomial_log_pmf(std::span<const std::uint64_t> counts, const Distribution& p) {
    if (counts.size() != p.alphabet_size()) {
        throw Error(ErrorCode::AlphabetMismatch, "histogram length differs from alphabet size");
    }
    std::uint64_t n = 0;
    double log_pmf = 0.0;
    for (std::size_t a = 0; a < counts.size(); ++a) {
        if (counts[a] == 0) continue;
        if (p[a] == 0.0) return -std::numeric_limits<double>::infinity();
        n += counts[a];
        log_pmf += static_cast<double>(counts[a]) * std::log(p[a]) -
                   std::lgamma(static_cast<double>(counts[a]) + 1.0);
    }
    return log_pmf + std::lgamma(static_cast<double>(n) + 1.0);
}

double exact_error(const HistogramDecider& decide, std::span<const Distribution> truths,
                   std::span<const double> priors, std::uint64_t n, std::uint64_t cap) {
    require_truths(truths, priors);
    std::vector<CompensatedSum> miss(truths.size());
    for (HistogramEnumeration e(n, truths.front().alphabet_size(), cap); !e.done(); e.advance()) {
        const std::size_t chosen = decide(e.current());
        for (std::size_t i = 0; i < truths.size(); ++i) {
            if (i == chosen || priors[i] == 0.0) continue;
            const double lp = multinomial_log_pmf(e.current(), truths[i]);
            if (lp != -std::numeric_limits<double>::infinity()) miss[i].add(std::exp(lp));
        }
    }
    CompensatedSum total;
    for (std::size_t i = 0; i < truths.size(); ++i) total.add(priors[i] * miss[i].value());
    return total.value();
}

double exact_dgl_error(const ScheffeSystem& system, std::span<const Distribution> truths,
                       std::span<const double> priors, std::uint64_t n, std::uint64_t cap) {
    if (truths.size() != system.hypotheses()) {
        throw Error(ErrorCode::LengthMismatch, "one truth per nominal required");
    }
    if (truths.front().alphabet_size() != system.alphabet_size()) {
        throw Error(ErrorCode::AlphabetMismatch, "truths and nominals differ in alphabet size");
    }
    return exact_error(
        [&](std::span<const std::uint64_t> h) { return system.decide_histogram(h).chosen; }, truths,
        priors, n, cap);
}

double exact_map_error(std::span<const Distribution> truths, std::span<const double> priors,
                       std::uint64_t n, std::uint64_t cap) {
    const MapDecider map({truths.begin(), truths.end()}, {priors.begin(), priors.end()});
    return exact_error([&](std::span<const std::uint64_t> h) { return map.decide_histogram(h); },
                       truths, priors, n, cap);
}

std::vector<double> enumeration_mass(std::span<const Distribution> truths, std::uint64_t n,
                                     std::uint64_t cap) {
    std::vector<CompensatedSum> mass(truths.size());
    for (HistogramEnumeration e(n, truths.front().alphabet_size(), cap); !e.done(); e.advance()) {
        for (std::size_t i = 0; i < truths.size(); ++i) {
            const double lp = multinomial_log_pmf(e.current(), truths[i]);
            if (lp != -std::numeric_limits<double>::infinity()) mass[i].add(std::exp(lp));
        }
    }
    std::vector<double> out;
    for (const auto& m : mass) out.push_back(m.value());
    return out;
}

}  // namespace dglcl
