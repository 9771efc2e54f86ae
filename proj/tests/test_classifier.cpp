#include <doctest.h>

#include <cmath>

#include "dglcl/classifier.hpp"
#include "dglcl/error.hpp"
#include "dglcl/montecarlo.hpp"
#include "test_support.hpp"

using namespace dglcl;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected dglcl::Error");
    return ErrorCode::Io;
}

}  // namespace

TEST_CASE("train builds empirical nominals") {
    const std::vector<Sequence> training{Sequence({0, 0}), Sequence({1, 1})};
    const auto c = train(training, 2);
    CHECK(c.nominals()[0] == Distribution({1.0, 0.0}));
    CHECK(c.nominals()[1] == Distribution({0.0, 1.0}));
    CHECK(c.training_length() == 2);

    const std::vector<Sequence> same{Sequence({0, 1, 1}), Sequence({1, 0, 1})};
    const auto tied = train(same, 2);
    CHECK(tied.nominals()[0] == tied.nominals()[1]);
    CHECK(classify(tied, Sequence({0})).chosen == 0);
    CHECK(classify(tied, Sequence({1, 1, 1})).chosen == 0);
}

TEST_CASE("train errors") {
    CHECK(code_of([] { train(std::vector<Sequence>{Sequence({0})}, 2); }) ==
          ErrorCode::FewerThanTwoHypotheses);
    CHECK(code_of([] { train(std::vector<Sequence>{Sequence({0}), Sequence({0, 1})}, 2); }) ==
          ErrorCode::LengthMismatch);
    CHECK(code_of([] { train(std::vector<Sequence>{Sequence({0}), Sequence({3})}, 2); }) ==
          ErrorCode::SymbolOutOfRange);
}

TEST_CASE("nominals concentrate at N = 1000") {
    const auto truths = fig1_truths();
    int good = 0;
    constexpr int kReps = 200;
    for (int rep = 0; rep < kReps; ++rep) {
        Xoshiro256 rng(derive_seed(5, 0, rep));
        std::vector<Sequence> training;
        for (const auto& p : truths) training.push_back(sample(p, 1000, rng));
        const auto c = train(training, 3);
        bool all = true;
        for (std::size_t i = 0; i < truths.size(); ++i) all = all && total_variation(c.nominals()[i], truths[i]) < 0.1;
        good += all ? 1 : 0;
    }
    // Per-class Hoeffding over the 8 subsets: P[V >= 0.1] <= 8 * 2 exp(-2 * 1000 * 0.01) ~ 3e-8.
    CHECK(good == kReps);
}

TEST_CASE("classify its own training sequence") {
    Xoshiro256 rng(4);
    const auto truths = fig1_truths();
    std::vector<Sequence> training;
    for (const auto& p : truths) training.push_back(sample(p, 50, rng));
    const auto c = train(training, 3);
    for (std::size_t i = 0; i < truths.size(); ++i) {
        const auto d = classify(c, training[i]);
        CHECK(d.statistics[i] == 0.0);
        // Another class can only win by also scoring 0, i.e. an identical histogram.
        if (d.chosen != i) CHECK(c.nominals()[d.chosen] == c.nominals()[i]);
    }
}

TEST_CASE("permuting training order permutes the label") {
    Xoshiro256 rng(12);
    const auto truths = fig1_truths();
    std::vector<Sequence> training;
    for (const auto& p : truths) training.push_back(sample(p, 40, rng));
    const std::vector<std::size_t> perm{3, 0, 4, 1, 2};
    std::vector<Sequence> permuted;
    for (auto p : perm) permuted.push_back(training[p]);
    const auto a = train(training, 3);
    const auto b = train(permuted, 3);
    int compared = 0;
    for (int t = 0; t < 100; ++t) {
        const auto x = sample(truths[t % 5], 30, rng);
        const auto da = classify(a, x);
        const auto db = classify(b, x);
        const double best = da.statistics[da.chosen];
        int ties = 0;
        for (double s : da.statistics) ties += std::abs(s - best) <= 1e-12 ? 1 : 0;
        if (ties > 1) continue;
        ++compared;
        CHECK(perm[db.chosen] == da.chosen);
    }
    CHECK(compared > 50);
}

TEST_CASE("map_decide examples") {
    const std::vector<Distribution> bern{Distribution({0.75, 0.25}), Distribution({0.25, 0.75})};
    const std::vector<double> uniform{0.5, 0.5};
    CHECK(map_decide(bern, uniform, Sequence({0})) == 0);
    CHECK(map_decide(bern, uniform, Sequence({1})) == 1);

    const std::vector<Distribution> same{Distribution({0.4, 0.6}), Distribution({0.4, 0.6})};
    CHECK(map_decide(same, uniform, Sequence({1, 0})) == 0);

    const std::vector<Distribution> disjoint{Distribution({1.0, 0.0}), Distribution({0.0, 1.0})};
    CHECK(map_decide(disjoint, uniform, Sequence({0, 0})) == 0);
    CHECK(map_decide(disjoint, uniform, Sequence({1, 1})) == 1);
    // Every hypothesis excluded: lowest index.
    CHECK(map_decide(disjoint, uniform, Sequence({0, 1})) == 0);

    CHECK(code_of([&] { map_decide(bern, std::vector<double>{0.7, 0.7}, Sequence({0})); }) == ErrorCode::BadPriors);
    CHECK(code_of([&] { map_decide(bern, std::vector<double>{1.5, -0.5}, Sequence({0})); }) == ErrorCode::BadPriors);
    const std::vector<Distribution> mixed{Distribution({1.0}), Distribution({0.5, 0.5})};
    CHECK(code_of([&] { map_decide(mixed, uniform, Sequence({0})); }) == ErrorCode::AlphabetMismatch);
}

TEST_CASE("map_decide respects priors") {
    const std::vector<Distribution> bern{Distribution({0.75, 0.25}), Distribution({0.25, 0.75})};
    CHECK(map_decide(bern, std::vector<double>{0.1, 0.9}, Sequence({0})) == 1);
    CHECK(map_decide(bern, std::vector<double>{0.0, 1.0}, Sequence({0, 0, 0})) == 1);
}

TEST_CASE("map argmax is invariant to monotone likelihood transforms") {
    // Under uniform priors, doubling every count squares each likelihood; the argmax is unchanged.
    Xoshiro256 rng(19);
    for (int t = 0; t < 200; ++t) {
        std::vector<Distribution> truths;
        for (int i = 0; i < 3; ++i) truths.push_back(testing::random_distribution(rng, 4));
        const MapDecider map(truths, uniform_priors(3));
        Histogram h(4);
        for (auto& c : h) c = rng() % 5;
        if (h == Histogram(4, 0)) h[0] = 1;
        Histogram doubled = h;
        for (auto& c : doubled) c *= 2;  // squares every likelihood
        CHECK(map.decide_histogram(h) == map.decide_histogram(doubled));
    }
}

TEST_CASE("robustness_report") {
    const auto truths = fig1_truths();
    const auto r = robustness_report(truths, truths, 0.01);
    CHECK(r.all_hold);
    for (const auto& h : r.per_hypothesis) {
        CHECK(h.tv_to_truth == 0.0);
        CHECK(h.min_tv_to_others >= 0.2 - 1e-15);
    }
    CHECK(r.per_hypothesis[0].min_tv_to_others == doctest::Approx(0.2));
    CHECK(r.per_hypothesis[4].min_tv_to_others == doctest::Approx(0.2));

    // Delta equal to a hypothesis's own min-TV gives margin exactly 0 and phi still holds.
    const std::vector<Distribution> two{truths[0], truths[1]};
    const double v = total_variation(truths[0], truths[1]);
    const auto edge = robustness_report(two, two, v);
    CHECK(edge.per_hypothesis[0].margin == 0.0);
    CHECK(edge.all_hold);
    const auto over = robustness_report(two, two, v + 0.01);
    CHECK_FALSE(over.all_hold);

    const std::vector<Distribution> tied{truths[0], truths[0]};
    const auto fail = robustness_report(tied, std::vector<Distribution>{truths[0], truths[1]}, 0.01);
    CHECK_FALSE(fail.all_hold);

    CHECK(code_of([&] { robustness_report(truths, truths, 0.0); }) == ErrorCode::NonpositiveDelta);
    CHECK(code_of([&] { robustness_report(two, truths, 0.1); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("DGL error rate with long training, figure setup") {
    const auto truths = fig1_truths();
    const std::vector<double> priors = uniform_priors(5);
    std::size_t errors = 0;
    constexpr std::size_t kTrials = 10'000;
    for (std::size_t t = 0; t < kTrials; ++t) {
        errors += run_trial(truths, 100.0, 200, priors, derive_seed(1, 0, t), false).dgl_correct ? 0 : 1;
    }
    CHECK(static_cast<double>(errors) / kTrials < 0.05);
}
