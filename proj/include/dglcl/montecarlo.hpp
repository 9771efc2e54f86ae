#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dglcl/bounds.hpp"
#include "dglcl/prob_core.hpp"
#include "dglcl/scheffe_dgl.hpp"

namespace dglcl {

// Block family: P_i puts c/|X| on the i-th contiguous block of |X|/M symbols and
// (M-c)/((M-1)|X|) on every other symbol.
struct LargeAlphabetFamilySpec {
    int hypotheses = 3;
    double c = 1.4;
    double alphabet_exponent = 1.2;

    // ceil(n^exponent) rounded up to a multiple of M.
    std::size_t alphabet_for(std::size_t n) const;
};

struct ExperimentConfig {
    std::string id = "experiment";
    std::vector<Distribution> truths;                 // used when family is empty
    std::optional<LargeAlphabetFamilySpec> family;
    std::vector<double> alphas;
    std::vector<std::size_t> n_grid;
    std::size_t trials = 10'000;
    std::uint64_t master_seed = 0;
    std::vector<double> priors;                       // empty means uniform
    bool compare_map = true;
    std::vector<TheoremKind> bound_set;
    double ci_z = 3.0;
};

struct ResultRow {
    std::string experiment;
    std::size_t n = 0;
    std::size_t training_length = 0;  // N
    double alpha = 0.0;
    std::size_t hypotheses = 0;
    std::size_t alphabet = 0;
    std::size_t trials = 0;
    std::size_t errors = 0;
    double error_rate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::optional<double> map_error_rate;
    std::optional<double> bound_thm1;
    std::optional<double> bound_cor1;
    std::optional<double> bound_thm2;
    std::optional<double> bound_cor2;
    std::optional<double> min_tv_nominal;  // mean over trials
    std::optional<double> min_tv_true;
};

struct TrialOutcome {
    bool dgl_correct = false;
    bool map_correct = false;
    double min_tv_nominal = 0.0;
};

// N = round(alpha * n), at least 1.
std::size_t training_length(double alpha, std::size_t n);

// One classification trial: hypothesis ~ priors, fresh training data of length round(alpha n)
// from every truth, test sequence of length n from the drawn truth.
TrialOutcome run_trial(std::span<const Distribution> truths, double alpha, std::size_t n,
                       std::span<const double> priors, std::uint64_t trial_seed,
                       bool compare_map = true);

// Trial against a fixed nominal system (no training step). Returns whether DGL was correct.
bool run_fixed_nominal_trial(const ScheffeSystem& system, std::span<const Distribution> truths,
                             std::size_t n, std::span<const double> priors,
                             std::uint64_t trial_seed);

// `threads` is a scheduling hint only; rows are identical for every value.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, unsigned threads = 1);

// Checks every ExperimentConfig invariant; throws InvalidGrid or BadParams.
void validate(const ExperimentConfig& cfg);

std::vector<Distribution> fig1_truths();

std::vector<Distribution> large_alphabet_family(int hypotheses, std::size_t alphabet, double c);

// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::size_t errors, std::size_t trials, double z);

ExperimentConfig fig1_config(std::uint64_t seed, std::size_t trials = 10'000);
ExperimentConfig fig2_config(std::uint64_t seed, std::size_t trials = 10'000);

}  // namespace dglcl
