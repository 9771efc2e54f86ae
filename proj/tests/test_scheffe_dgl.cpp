#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dglcl/error.hpp"
#include "dglcl/montecarlo.hpp"
#include "dglcl/scheffe_dgl.hpp"
#include "test_support.hpp"

using namespace dglcl;

TEST_CASE("Scheffé sets for the first figure pair") {
    const auto truths = fig1_truths();
    const ScheffeSystem sys({truths[0], truths[1]});
    REQUIRE(sys.set_count() == 1);
    const auto mask = sys.mask(0);
    CHECK(mask[0] == 0);
    CHECK(mask[1] == 1);
    CHECK(mask[2] == 0);
    CHECK(sys.nominal_mass(0, 0) == 0.8);
    CHECK(sys.nominal_mass(1, 0) == 0.2);
}

TEST_CASE("set count and indexing") {
    const ScheffeSystem sys(fig1_truths());
    CHECK(sys.set_count() == 10);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            const auto s = sys.set_index(i, j);
            CHECK(sys.set_pair(s) == std::pair{i, j});
        }
    }
    CHECK_THROWS_AS(sys.set_index(2, 2), Error);
}

TEST_CASE("ties fall inside the set") {
    const Distribution t({0.2, 0.3, 0.5});
    const ScheffeSystem sys({t, t});
    const auto mask = sys.mask(0);
    CHECK(std::all_of(mask.begin(), mask.end(), [](auto v) { return v == 1; }));
}

TEST_CASE("construction errors") {
    try {
        ScheffeSystem({Distribution({1.0})});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FewerThanTwoHypotheses);
    }
    try {
        ScheffeSystem({Distribution({1.0}), Distribution({0.5, 0.5})});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AlphabetMismatch);
    }
}

TEST_CASE("dgl_statistic examples") {
    const auto truths = fig1_truths();
    const ScheffeSystem sys(truths);
    for (std::size_t j = 0; j < 5; ++j) CHECK(dgl_statistic(sys, j, truths[j]) == 0.0);

    const ScheffeSystem pair({truths[0], truths[1]});
    CHECK(dgl_statistic(pair, 1, truths[0]) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(dgl_statistic(pair, 0, truths[1]) == doctest::Approx(0.6).epsilon(1e-15));

    CHECK_THROWS_AS(dgl_statistic(sys, 5, truths[0]), Error);
    CHECK_THROWS_AS(dgl_statistic(sys, 0, Distribution({1.0})), Error);
}

TEST_CASE("dgl_decide examples") {
    const auto truths = fig1_truths();
    const ScheffeSystem sys(truths);
    // Histogram (1, 8, 1) has empirical measure exactly P1.
    CHECK(dgl_decide(sys, Sequence({0, 1, 1, 1, 1, 1, 1, 1, 1, 2})).chosen == 0);

    const Distribution t({0.3, 0.7});
    const ScheffeSystem tied({t, t});
    for (auto x : {Sequence({0}), Sequence({1, 1}), Sequence({0, 1, 0})}) {
        CHECK(dgl_decide(tied, x).chosen == 0);
    }

    const ScheffeSystem disjoint({Distribution({1.0, 0.0}), Distribution({0.0, 1.0})});
    const auto d = dgl_decide(disjoint, Sequence({1}));
    CHECK(d.chosen == 1);
    CHECK(d.statistics == std::vector<double>{1.0, 0.0});

    CHECK_THROWS_AS(dgl_decide(disjoint, Sequence({2})), Error);
}

TEST_CASE("Scheffé identity and statistic range") {
    Xoshiro256 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = testing::random_index(rng, 2, 6);
        const std::size_t k = testing::random_index(rng, 1, 15);
        std::vector<Distribution> nominals;
        for (std::size_t i = 0; i < m; ++i) nominals.push_back(testing::random_distribution(rng, k, 0.2));
        const ScheffeSystem sys(nominals);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                const double v = total_variation(nominals[i], nominals[j]);
                const auto s = sys.set_index(i, j);
                CHECK(std::abs(sys.nominal_mass(i, s) - sys.nominal_mass(j, s) - v) <= 1e-12);
                CHECK(sys.statistic(i, nominals[j]) >= v - 1e-12);
                CHECK(sys.statistic(j, nominals[i]) >= v - 1e-12);
            }
        }
        const auto mu = testing::random_distribution(rng, k);
        for (std::size_t j = 0; j < m; ++j) {
            const double st = sys.statistic(j, mu);
            CHECK(st >= 0.0);
            CHECK(st <= 1.0);
        }
    }
}

TEST_CASE("decision depends only on the histogram") {
    Xoshiro256 rng(8);
    const ScheffeSystem sys(fig1_truths());
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = testing::random_index(rng, 1, 40);
        std::vector<Symbol> xs(n);
        for (auto& s : xs) s = static_cast<Symbol>(rng() % 3);
        auto shuffled = xs;
        for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng() % i]);
        const auto a = sys.decide(Sequence(xs));
        const auto b = sys.decide(Sequence(shuffled));
        CHECK(a.chosen == b.chosen);
        CHECK(a.statistics == b.statistics);
        for (double s : a.statistics) {
            CHECK(s >= 0.0);
            CHECK(s <= 1.0);
        }
    }
}

TEST_CASE("permutation equivariance") {
    Xoshiro256 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = testing::random_index(rng, 2, 5);
        const std::size_t k = testing::random_index(rng, 2, 8);
        std::vector<Distribution> nominals;
        for (std::size_t i = 0; i < m; ++i) nominals.push_back(testing::random_distribution(rng, k));
        std::vector<std::size_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = m; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
        std::vector<Distribution> permuted;
        for (std::size_t i = 0; i < m; ++i) permuted.push_back(nominals[perm[i]]);

        const ScheffeSystem a(nominals);
        const ScheffeSystem b(permuted);
        std::vector<Symbol> xs(testing::random_index(rng, 1, 30));
        for (auto& s : xs) s = static_cast<Symbol>(rng() % k);
        const auto da = a.decide(Sequence(xs));
        const auto db = b.decide(Sequence(xs));
        // Statistics are permuted copies (random real nominals make exact ties vanishingly rare).
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(db.statistics[i] == doctest::Approx(da.statistics[perm[i]]).epsilon(1e-12));
        }
        const bool tie = std::count_if(da.statistics.begin(), da.statistics.end(), [&](double s) {
                             return std::abs(s - da.statistics[da.chosen]) <= 1e-12;
                         }) > 1;
        if (!tie) CHECK(perm[db.chosen] == da.chosen);
    }
}
