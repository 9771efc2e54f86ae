#include "dglcl/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dglcl/error.hpp"

namespace dglcl {

Classifier Classifier::train(std::span<const Sequence> training, std::size_t alphabet_size) {
    if (training.size() < 2) {
        throw Error(ErrorCode::FewerThanTwoHypotheses, "need training data for at least two classes");
    }
    std::vector<Histogram> counts;
    counts.reserve(training.size());
    for (const auto& t : training) {
        if (t.length() != training.front().length()) {
            throw Error(ErrorCode::LengthMismatch, "training sequences must share one length N");
        }
        counts.push_back(histogram(t, alphabet_size));
    }
    return from_counts(counts);
}

Classifier Classifier::from_counts(std::span<const Histogram> counts) {
    if (counts.size() < 2) {
        throw Error(ErrorCode::FewerThanTwoHypotheses, "need training data for at least two classes");
    }
    const auto total = [](const Histogram& h) {
        return std::accumulate(h.begin(), h.end(), std::uint64_t{0});
    };
    const std::uint64_t n = total(counts.front());
    std::vector<Distribution> nominals;
    nominals.reserve(counts.size());
    for (const auto& h : counts) {
        if (h.size() != counts.front().size()) {
            throw Error(ErrorCode::AlphabetMismatch, "training histograms differ in alphabet size");
        }
        if (total(h) != n) {
            throw Error(ErrorCode::LengthMismatch, "training sequences must share one length N");
        }
        nominals.push_back(empirical(h));
    }
    return Classifier(ScheffeSystem(std::move(nominals)), static_cast<std::size_t>(n));
}

std::vector<double> uniform_priors(std::size_t m) {
    return std::vector<double>(m, 1.0 / static_cast<double>(m));
}

void validate_priors(std::span<const double> priors, std::size_t m) {
    if (priors.size() != m) throw Error(ErrorCode::BadPriors, "one prior per hypothesis required");
    double sum = 0.0;
    for (double p : priors) {
        if (!(p >= 0.0) || !std::isfinite(p)) throw Error(ErrorCode::BadPriors, "priors must be non-negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) throw Error(ErrorCode::BadPriors, "priors must sum to 1");
}

MapDecider::MapDecider(std::vector<Distribution> truths, std::vector<double> priors) {
    if (truths.size() < 2) throw Error(ErrorCode::FewerThanTwoHypotheses, "need at least two truths");
    validate_priors(priors, truths.size());
    alphabet_size_ = truths.front().alphabet_size();
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    log_probs_.reserve(truths.size() * alphabet_size_);
    for (const auto& p : truths) {
        if (p.alphabet_size() != alphabet_size_) {
            throw Error(ErrorCode::AlphabetMismatch, "truths have different alphabet sizes");
        }
        for (double v : p.probs()) log_probs_.push_back(v > 0.0 ? std::log(v) : kNegInf);
    }
    for (double pr : priors) log_prior_.push_back(pr > 0.0 ? std::log(pr) : kNegInf);
}

std::size_t MapDecider::decide_histogram(std::span<const std::uint64_t> counts) const {
    if (counts.size() != alphabet_size_) {
        throw Error(ErrorCode::AlphabetMismatch, "histogram length differs from alphabet size");
    }
    std::size_t best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < log_prior_.size(); ++i) {
        double score = log_prior_[i];
        const double* row = log_probs_.data() + i * alphabet_size_;
        for (std::size_t a = 0; a < alphabet_size_ && score != -std::numeric_limits<double>::infinity(); ++a) {
            if (counts[a] != 0) score += static_cast<double>(counts[a]) * row[a];
        }
        if (score > best_score) {
            best_score = score;
            best = i;
        }
    }
    return best;
}

std::size_t MapDecider::decide(const Sequence& x) const {
    return decide_histogram(histogram(x, alphabet_size_));
}

std::size_t map_decide(std::span<const Distribution> truths, std::span<const double> priors,
                       const Sequence& x) {
    return MapDecider({truths.begin(), truths.end()}, {priors.begin(), priors.end()}).decide(x);
}

RobustnessReport robustness_report(std::span<const Distribution> nominals,
                                   std::span<const Distribution> truths, double delta) {
    if (!(delta > 0.0)) throw Error(ErrorCode::NonpositiveDelta, "delta must be positive");
    if (nominals.size() < 2) throw Error(ErrorCode::FewerThanTwoHypotheses, "need at least two nominals");
    if (truths.size() != nominals.size()) {
        throw Error(ErrorCode::LengthMismatch, "one truth per nominal required");
    }
    RobustnessReport report;
    report.all_hold = true;
    for (std::size_t i = 0; i < nominals.size(); ++i) {
        HypothesisRobustness h;
        h.tv_to_truth = total_variation(nominals[i], truths[i]);
        h.min_tv_to_others = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < nominals.size(); ++j) {
            if (j != i) h.min_tv_to_others = std::min(h.min_tv_to_others, total_variation(nominals[i], nominals[j]));
        }
        h.margin = (h.min_tv_to_others - delta) / 2.0 - h.tv_to_truth;
        h.phi_holds = h.margin >= 0.0;
        report.all_hold = report.all_hold && h.phi_holds;
        report.per_hypothesis.push_back(h);
    }
    return report;
}

}  // namespace dglcl
