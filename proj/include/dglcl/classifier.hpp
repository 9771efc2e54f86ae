#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dglcl/prob_core.hpp"
#include "dglcl/scheffe_dgl.hpp"

namespace dglcl {

// DGL test whose nominals are the empirical distributions of the training sequences.
class Classifier {
public:
    // Throws FewerThanTwoHypotheses, LengthMismatch or SymbolOutOfRange.
    static Classifier train(std::span<const Sequence> training, std::size_t alphabet_size);

    // Training summarized by per-class symbol counts; every class must hold the same total N.
    static Classifier from_counts(std::span<const Histogram> counts);

    DglDecision classify(const Sequence& x) const { return system_.decide(x); }
    DglDecision classify_counts(std::span<const std::uint64_t> counts) const {
        return system_.decide_histogram(counts);
    }

    const ScheffeSystem& system() const noexcept { return system_; }
    const std::vector<Distribution>& nominals() const noexcept { return system_.nominals(); }
    std::size_t training_length() const noexcept { return training_length_; }
    std::size_t alphabet_size() const noexcept { return system_.alphabet_size(); }

private:
    Classifier(ScheffeSystem system, std::size_t training_length)
        : system_(std::move(system)), training_length_(training_length) {}

    ScheffeSystem system_;
    std::size_t training_length_;
};

inline Classifier train(std::span<const Sequence> training, std::size_t alphabet_size) {
    return Classifier::train(training, alphabet_size);
}

inline DglDecision classify(const Classifier& c, const Sequence& x) { return c.classify(x); }

// Maximum a posteriori rule against known distributions. Log-likelihoods are formed as
// log prior + <histogram, log probs>; symbols of zero mass exclude a hypothesis.
class MapDecider {
public:
    // Throws AlphabetMismatch, FewerThanTwoHypotheses or BadPriors.
    MapDecider(std::vector<Distribution> truths, std::vector<double> priors);

    std::size_t decide(const Sequence& x) const;
    std::size_t decide_histogram(std::span<const std::uint64_t> counts) const;

    std::size_t hypotheses() const noexcept { return log_prior_.size(); }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }

private:
    std::size_t alphabet_size_ = 0;
    std::vector<double> log_prior_;
    std::vector<double> log_probs_;  // hypotheses x alphabet, -inf for zero mass
};

std::size_t map_decide(std::span<const Distribution> truths, std::span<const double> priors,
                       const Sequence& x);

std::vector<double> uniform_priors(std::size_t m);

// Throws BadPriors unless entries are non-negative and sum to 1 within 1e-9.
void validate_priors(std::span<const double> priors, std::size_t m);

struct HypothesisRobustness {
    double tv_to_truth = 0.0;      // V(T_i, P_i)
    double min_tv_to_others = 0.0; // min_{j != i} V(T_i, T_j)
    double margin = 0.0;           // (min_tv_to_others - delta)/2 - tv_to_truth
    bool phi_holds = false;        // margin >= 0
};

struct RobustnessReport {
    std::vector<HypothesisRobustness> per_hypothesis;
    bool all_hold = false;  // the event Phi
};

// Throws AlphabetMismatch, FewerThanTwoHypotheses, LengthMismatch or NonpositiveDelta.
RobustnessReport robustness_report(std::span<const Distribution> nominals,
                                   std::span<const Distribution> truths, double delta);

}  // namespace dglcl
