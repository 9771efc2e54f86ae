#include <doctest.h>

#include <cmath>
#include <set>

#include "dglcl/classifier.hpp"
#include "dglcl/error.hpp"
#include "dglcl/montecarlo.hpp"
#include "dglcl/oracle.hpp"
#include "test_support.hpp"

using namespace dglcl;

TEST_CASE("enumerate_histograms") {
    const auto two = enumerate_histograms(2, 2);
    CHECK(two == std::vector<Histogram>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(enumerate_histograms(5, 3).size() == 21);
    CHECK(enumerate_histograms(1, 4) ==
          std::vector<Histogram>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(enumerate_histograms(3, 1) == std::vector<Histogram>{{3}});

    try {
        HistogramEnumeration(100, 10);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
    CHECK_THROWS_AS(HistogramEnumeration(0, 3), Error);
    CHECK(HistogramEnumeration(100, 10, ~0ULL).count() == composition_count(100, 10));
}

TEST_CASE("enumeration is complete, unique and ordered") {
    for (std::uint64_t n = 1; n <= 7; ++n) {
        for (std::size_t k = 1; k <= 5; ++k) {
            const auto all = enumerate_histograms(n, k);
            CHECK(all.size() == composition_count(n, k));
            std::set<Histogram> unique(all.begin(), all.end());
            CHECK(unique.size() == all.size());
            for (std::size_t i = 0; i < all.size(); ++i) {
                std::uint64_t sum = 0;
                for (auto c : all[i]) sum += c;
                CHECK(sum == n);
                if (i > 0) CHECK(all[i - 1] > all[i]);
            }
        }
    }
    CHECK(composition_count(8, 3) == 45);
    CHECK(composition_count(2000, 200) == ~0ULL);
}

TEST_CASE("multinomial masses sum to one") {
    Xoshiro256 rng(6);
    for (int t = 0; t < 20; ++t) {
        const std::size_t k = testing::random_index(rng, 1, 5);
        const std::uint64_t n = testing::random_index(rng, 1, 25);
        const std::vector<Distribution> truths{testing::random_distribution(rng, k, 0.3),
                                               testing::random_distribution(rng, k)};
        for (double m : enumeration_mass(truths, n)) CHECK(std::abs(m - 1.0) <= 1e-9);
    }
}

TEST_CASE("exact_dgl_error examples") {
    const std::vector<Distribution> disjoint{Distribution({1.0, 0.0}), Distribution({0.0, 1.0})};
    const std::vector<double> uniform{0.5, 0.5};
    CHECK(exact_dgl_error(ScheffeSystem(disjoint), disjoint, uniform, 1) == 0.0);

    const std::vector<Distribution> tied{Distribution({0.3, 0.7}), Distribution({0.3, 0.7})};
    CHECK(exact_dgl_error(ScheffeSystem(tied), tied, uniform, 4) == doctest::Approx(0.5).epsilon(1e-14));

    const auto fig = fig1_truths();
    const std::vector<Distribution> three(fig.begin(), fig.begin() + 3);
    // Brute force over all 3^8 sequences in tests/oracles/derive_expected.py.
    CHECK(exact_dgl_error(ScheffeSystem(three), three, uniform_priors(3), 8) ==
          doctest::Approx(0.146079049999998).epsilon(1e-12));
    CHECK(exact_dgl_error(ScheffeSystem(fig), fig, uniform_priors(5), 6) ==
          doctest::Approx(0.428973999999995).epsilon(1e-12));

    CHECK_THROWS_AS(exact_dgl_error(ScheffeSystem(three), disjoint, uniform, 2), Error);
}

TEST_CASE("exact_map_error examples") {
    const std::vector<Distribution> bern{Distribution({0.75, 0.25}), Distribution({0.25, 0.75})};
    const std::vector<double> uniform{0.5, 0.5};
    CHECK(exact_map_error(bern, uniform, 1) == 0.25);
    const std::vector<Distribution> same{Distribution({0.75, 0.25}), Distribution({0.75, 0.25})};
    CHECK(exact_map_error(same, uniform, 1) == doctest::Approx(0.5).epsilon(1e-15));

    double prev = 1.0;
    for (std::uint64_t n = 1; n <= 10; ++n) {
        const double e = exact_map_error(bern, uniform, n);
        CHECK(e <= prev + 1e-15);
        prev = e;
    }
}

TEST_CASE("MAP is never worse than DGL with true nominals") {
    Xoshiro256 rng(17);
    for (int t = 0; t < 40; ++t) {
        const std::size_t m = testing::random_index(rng, 2, 4);
        const std::size_t k = testing::random_index(rng, 2, 4);
        std::vector<Distribution> truths;
        for (std::size_t i = 0; i < m; ++i) truths.push_back(testing::random_distribution(rng, k, 0.2));
        const auto priors = uniform_priors(m);
        const std::uint64_t n = testing::random_index(rng, 1, 9);
        CHECK(exact_map_error(truths, priors, n) <=
              exact_dgl_error(ScheffeSystem(truths), truths, priors, n) + 1e-12);
    }
}

TEST_CASE("exact DGL error is invariant to relabeling on tie-free instances") {
    Xoshiro256 rng(23);
    for (int t = 0; t < 30; ++t) {
        std::vector<Distribution> truths;
        for (int i = 0; i < 3; ++i) truths.push_back(testing::random_distribution(rng, 3));
        std::vector<double> priors{0.2, 0.3, 0.5};
        const std::vector<std::size_t> perm{2, 0, 1};
        std::vector<Distribution> pt;
        std::vector<double> pp;
        for (auto p : perm) {
            pt.push_back(truths[p]);
            pp.push_back(priors[p]);
        }
        const ScheffeSystem a(truths);
        const ScheffeSystem b(pt);
        // Skip instances where any histogram yields a near-tie.
        bool tie_free = true;
        for (HistogramEnumeration e(6, 3); !e.done() && tie_free; e.advance()) {
            auto s = a.decide_histogram(e.current()).statistics;
            std::sort(s.begin(), s.end());
            tie_free = s[1] - s[0] > 1e-9;
        }
        if (!tie_free) continue;
        CHECK(exact_dgl_error(a, truths, priors, 6) ==
              doctest::Approx(exact_dgl_error(b, pt, pp, 6)).epsilon(1e-12));
    }
}
