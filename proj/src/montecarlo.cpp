#include "dglcl/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "dglcl/classifier.hpp"
#include "dglcl/error.hpp"

namespace dglcl {

namespace {

// Everything a trial needs that does not depend on the trial seed.
struct PointContext {
    std::vector<Distribution> truths;
    std::vector<Sampler> samplers;
    Sampler prior_sampler;
    std::optional<MapDecider> map;

    PointContext(std::span<const Distribution> t, std::span<const double> priors, bool with_map)
        : truths(t.begin(), t.end()),
          prior_sampler(Distribution({priors.begin(), priors.end()})) {
        for (const auto& p : truths) samplers.emplace_back(p);
        if (with_map) map.emplace(truths, std::vector<double>(priors.begin(), priors.end()));
    }
};

std::vector<double> resolve_priors(std::span<const double> priors, std::size_t m) {
    if (priors.empty()) return uniform_priors(m);
    validate_priors(priors, m);
    return {priors.begin(), priors.end()};
}

TrialOutcome trial_at(const PointContext& ctx, double alpha, std::size_t n, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    const std::size_t truth = ctx.prior_sampler.draw(rng);
    const std::size_t big_n = training_length(alpha, n);

    std::vector<Histogram> training;
    training.reserve(ctx.samplers.size());
    for (const auto& s : ctx.samplers) training.push_back(sample_counts(s, big_n, rng));
    const Classifier classifier = Classifier::from_counts(training);

    const Histogram test = sample_counts(ctx.samplers[truth], n, rng);

    TrialOutcome out;
    out.dgl_correct = classifier.classify_counts(test).chosen == truth;
    if (ctx.map) out.map_correct = ctx.map->decide_histogram(test) == truth;
    out.min_tv_nominal = min_pairwise_tv(classifier.nominals());
    return out;
}

// Runs body(t) for t in [0, count) across `threads` workers; each index runs exactly once.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t t = 0; t < count; ++t) body(t);
        return;
    }
    constexpr std::size_t kChunk = 64;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t begin = next.fetch_add(kChunk);
            if (begin >= count || failed.load()) return;
            const std::size_t end = std::min(count, begin + kChunk);
            try {
                for (std::size_t t = begin; t < end; ++t) body(t);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::size_t LargeAlphabetFamilySpec::alphabet_for(std::size_t n) const {
    const auto m = static_cast<std::size_t>(hypotheses);
    auto size = static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), alphabet_exponent)));
    size = std::max<std::size_t>(size, 1);
    return (size + m - 1) / m * m;
}

std::size_t training_length(double alpha, std::size_t n) {
    const double raw = std::round(alpha * static_cast<double>(n));
    return raw < 1.0 ? 1 : static_cast<std::size_t>(raw);
}

TrialOutcome run_trial(std::span<const Distribution> truths, double alpha, std::size_t n,
                       std::span<const double> priors, std::uint64_t trial_seed, bool compare_map) {
    if (!(alpha > 0.0) || n == 0) throw Error(ErrorCode::BadParams, "trial needs alpha > 0 and n >= 1");
    const auto pr = resolve_priors(priors, truths.size());
    const PointContext ctx(truths, pr, compare_map);
    return trial_at(ctx, alpha, n, trial_seed);
}

bool run_fixed_nominal_trial(const ScheffeSystem& system, std::span<const Distribution> truths,
                             std::size_t n, std::span<const double> priors,
                             std::uint64_t trial_seed) {
    if (truths.size() != system.hypotheses()) {
        throw Error(ErrorCode::LengthMismatch, "one truth per nominal required");
    }
    const auto pr = resolve_priors(priors, truths.size());
    Xoshiro256 rng(trial_seed);
    const std::size_t truth = Sampler(Distribution(pr)).draw(rng);
    const Histogram test = sample_counts(Sampler(truths[truth]), n, rng);
    return system.decide_histogram(test).chosen == truth;
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.alphas.empty() || cfg.n_grid.empty()) throw Error(ErrorCode::InvalidGrid, "empty alpha or n grid");
    if (cfg.trials < 1) throw Error(ErrorCode::InvalidGrid, "trials must be >= 1");
    if (!(cfg.ci_z > 0.0)) throw Error(ErrorCode::BadParams, "ci_z must be positive");
    for (double a : cfg.alphas) {
        if (!(a > 0.0) || !std::isfinite(a)) throw Error(ErrorCode::InvalidGrid, "alpha must be positive");
    }
    for (std::size_t n : cfg.n_grid) {
        if (n < 1) throw Error(ErrorCode::InvalidGrid, "test lengths must be >= 1");
    }
    std::size_t m = 0;
    if (cfg.family) {
        const auto& f = *cfg.family;
        if (f.hypotheses < 2) throw Error(ErrorCode::BadParams, "family needs M >= 2");
        if (!(f.c > 1.0 && f.c < f.hypotheses)) throw Error(ErrorCode::BadParams, "family needs 1 < c < M");
        if (!(f.alphabet_exponent > 0.0)) throw Error(ErrorCode::BadParams, "alphabet exponent must be positive");
        m = static_cast<std::size_t>(f.hypotheses);
    } else {
        if (cfg.truths.size() < 2) throw Error(ErrorCode::FewerThanTwoHypotheses, "need at least two truths");
        for (const auto& t : cfg.truths) {
            if (t.alphabet_size() != cfg.truths.front().alphabet_size()) {
                throw Error(ErrorCode::AlphabetMismatch, "truths have different alphabet sizes");
            }
        }
        m = cfg.truths.size();
    }
    if (!cfg.priors.empty()) validate_priors(cfg.priors, m);
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, unsigned threads) {
    validate(cfg);
    std::vector<ResultRow> rows;
    std::uint64_t point = 0;
    for (double alpha : cfg.alphas) {
        for (std::size_t n : cfg.n_grid) {
            const auto truths = cfg.family ? large_alphabet_family(cfg.family->hypotheses,
                                                                   cfg.family->alphabet_for(n), cfg.family->c)
                                           : cfg.truths;
            const auto priors = resolve_priors(cfg.priors, truths.size());
            const PointContext ctx(truths, priors, cfg.compare_map);

            std::vector<TrialOutcome> outcomes(cfg.trials);
            parallel_for(cfg.trials, threads, [&](std::size_t t) {
                outcomes[t] = trial_at(ctx, alpha, n, derive_seed(cfg.master_seed, point, t));
            });

            ResultRow row;
            row.experiment = cfg.id;
            row.n = n;
            row.training_length = training_length(alpha, n);
            row.alpha = alpha;
            row.hypotheses = truths.size();
            row.alphabet = truths.front().alphabet_size();
            row.trials = cfg.trials;
            std::size_t map_errors = 0;
            double tv_sum = 0.0;
            for (const auto& o : outcomes) {
                row.errors += o.dgl_correct ? 0 : 1;
                map_errors += o.map_correct ? 0 : 1;
                tv_sum += o.min_tv_nominal;
            }
            const double trials = static_cast<double>(cfg.trials);
            row.error_rate = static_cast<double>(row.errors) / trials;
            std::tie(row.ci_low, row.ci_high) = wilson_interval(row.errors, cfg.trials, cfg.ci_z);
            if (cfg.compare_map) row.map_error_rate = static_cast<double>(map_errors) / trials;
            row.min_tv_nominal = tv_sum / trials;
            row.min_tv_true = min_pairwise_tv(truths);

            for (TheoremKind kind : cfg.bound_set) {
                const bool corollary = kind == TheoremKind::Cor1 || kind == TheoremKind::Cor2;
                const double m = corollary ? *row.min_tv_true : *row.min_tv_nominal;
                if (!(m > 0.0)) continue;
                BoundParams p;
                p.n = static_cast<double>(n);
                p.alpha = alpha;
                p.hypotheses = static_cast<int>(truths.size());
                p.alphabet = static_cast<double>(row.alphabet);
                p.min_tv = std::min(m, 1.0);
                p.regime = regime_of(kind);
                const double value = theorem_bound(p, kind).value;
                switch (kind) {
                    case TheoremKind::Thm1: row.bound_thm1 = value; break;
                    case TheoremKind::Cor1: row.bound_cor1 = value; break;
                    case TheoremKind::Thm2: row.bound_thm2 = value; break;
                    case TheoremKind::Cor2: row.bound_cor2 = value; break;
                }
            }
            rows.push_back(std::move(row));
            ++point;
        }
    }
    return rows;
}

std::vector<Distribution> fig1_truths() {
    return {
        Distribution({0.1, 0.8, 0.1}), Distribution({0.3, 0.2, 0.5}), Distribution({0.6, 0.1, 0.3}),
        Distribution({0.4, 0.4, 0.2}), Distribution({0.3, 0.6, 0.1}),
    };
}

std::vector<Distribution> large_alphabet_family(int hypotheses, std::size_t alphabet, double c) {
    if (hypotheses < 2) throw Error(ErrorCode::BadParams, "family needs M >= 2");
    const auto m = static_cast<std::size_t>(hypotheses);
    if (alphabet == 0 || alphabet % m != 0) {
        throw Error(ErrorCode::BadParams, "alphabet size must be a positive multiple of M");
    }
    if (!(c > 1.0 && c < static_cast<double>(hypotheses))) throw Error(ErrorCode::BadParams, "need 1 < c < M");
    const double size = static_cast<double>(alphabet);
    const double heavy = c / size;
    const double light = (static_cast<double>(hypotheses) - c) / ((static_cast<double>(hypotheses) - 1.0) * size);
    const std::size_t block = alphabet / m;
    std::vector<Distribution> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> probs(alphabet, light);
        std::fill(probs.begin() + static_cast<std::ptrdiff_t>(i * block),
                  probs.begin() + static_cast<std::ptrdiff_t>((i + 1) * block), heavy);
        out.emplace_back(std::move(probs));
    }
    return out;
}

std::pair<double, double> wilson_interval(std::size_t errors, std::size_t trials, double z) {
    if (trials == 0 || errors > trials || !(z > 0.0)) {
        throw Error(ErrorCode::BadParams, "wilson interval needs 0 <= errors <= trials, trials >= 1, z > 0");
    }
    const double t = static_cast<double>(trials);
    const double p = static_cast<double>(errors) / t;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / t;
    const double center = (p + z2 / (2.0 * t)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t));
    double low = errors == 0 ? 0.0 : std::max(0.0, center - half);
    double high = errors == trials ? 1.0 : std::min(1.0, center + half);
    low = std::min(low, p);
    high = std::max(high, p);
    return {low, high};
}

ExperimentConfig fig1_config(std::uint64_t seed, std::size_t trials) {
    ExperimentConfig cfg;
    cfg.id = "fig1";
    cfg.truths = fig1_truths();
    cfg.alphas = {0.1, 1.0, 10.0, 100.0};
    cfg.n_grid = {20, 60, 100, 140, 200};
    cfg.trials = trials;
    cfg.master_seed = seed;
    cfg.compare_map = true;
    cfg.bound_set = {TheoremKind::Thm1, TheoremKind::Cor1};
    return cfg;
}

ExperimentConfig fig2_config(std::uint64_t seed, std::size_t trials) {
    ExperimentConfig cfg;
    cfg.id = "fig2";
    cfg.family = LargeAlphabetFamilySpec{3, 1.4, 1.2};
    cfg.alphas = {0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
    cfg.n_grid = {60};
    cfg.trials = trials;
    cfg.master_seed = seed;
    cfg.compare_map = true;
    cfg.bound_set = {TheoremKind::Thm2, TheoremKind::Cor2};
    return cfg;
}

}  // namespace dglcl
