#include "dglcl/scheffe_dgl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dglcl/error.hpp"

namespace dglcl {

std::size_t argmin_with_ties(std::span<const double> statistics) {
    const double best = *std::min_element(statistics.begin(), statistics.end());
    std::size_t j = 0;
    while (statistics[j] > best + kTieTolerance) ++j;
    return j;
}

ScheffeSystem::ScheffeSystem(std::vector<Distribution> nominals) : nominals_(std::move(nominals)) {
    const std::size_t m = nominals_.size();
    if (m < 2) throw Error(ErrorCode::FewerThanTwoHypotheses, "need at least two nominals");
    alphabet_size_ = nominals_.front().alphabet_size();
    for (const auto& t : nominals_) {
        if (t.alphabet_size() != alphabet_size_) {
            throw Error(ErrorCode::AlphabetMismatch, "nominals have different alphabet sizes");
        }
    }

    pairs_.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) pairs_.emplace_back(i, j);
    }

    masks_.assign(pairs_.size() * alphabet_size_, 0);
    for (std::size_t s = 0; s < pairs_.size(); ++s) {
        const auto& ti = nominals_[pairs_[s].first];
        const auto& tj = nominals_[pairs_[s].second];
        for (std::size_t a = 0; a < alphabet_size_; ++a) {
            masks_[s * alphabet_size_ + a] = ti[a] >= tj[a] ? 1 : 0;
        }
    }

    nominal_mass_.assign(m * pairs_.size(), 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t s = 0; s < pairs_.size(); ++s) {
            nominal_mass_[j * pairs_.size() + s] = nominals_[j].mass(mask(s));
        }
    }
}

std::size_t ScheffeSystem::set_index(std::size_t i, std::size_t j) const {
    const std::size_t m = hypotheses();
    if (i >= j || j >= m) throw Error(ErrorCode::BadIndex, "set index requires i < j < M");
    // Row-major over the upper triangle.
    return i * m - i * (i + 1) / 2 + (j - i - 1);
}

std::span<const std::uint8_t> ScheffeSystem::mask(std::size_t s) const {
    if (s >= pairs_.size()) throw Error(ErrorCode::BadIndex, "set index out of range");
    return {masks_.data() + s * alphabet_size_, alphabet_size_};
}

double ScheffeSystem::nominal_mass(std::size_t j, std::size_t s) const {
    if (j >= hypotheses() || s >= pairs_.size()) {
        throw Error(ErrorCode::BadIndex, "hypothesis or set index out of range");
    }
    return nominal_mass_[j * pairs_.size() + s];
}

std::vector<double> ScheffeSystem::statistics_from_set_masses(
    std::span<const double> mu_mass) const {
    const std::size_t sets = pairs_.size();
    std::vector<double> stats(hypotheses(), 0.0);
    for (std::size_t j = 0; j < hypotheses(); ++j) {
        const double* row = nominal_mass_.data() + j * sets;
        double best = 0.0;
        for (std::size_t s = 0; s < sets; ++s) best = std::max(best, std::abs(row[s] - mu_mass[s]));
        stats[j] = std::min(best, 1.0);
    }
    return stats;
}

double ScheffeSystem::statistic(std::size_t j, const Distribution& mu) const {
    if (mu.alphabet_size() != alphabet_size_) {
        throw Error(ErrorCode::AlphabetMismatch, "measure alphabet differs from nominals");
    }
    if (j >= hypotheses()) throw Error(ErrorCode::BadIndex, "hypothesis index out of range");
    double best = 0.0;
    for (std::size_t s = 0; s < pairs_.size(); ++s) {
        best = std::max(best, std::abs(nominal_mass(j, s) - mu.mass(mask(s))));
    }
    return std::min(best, 1.0);
}

DglDecision ScheffeSystem::decide_histogram(std::span<const std::uint64_t> counts) const {
    if (counts.size() != alphabet_size_) {
        throw Error(ErrorCode::AlphabetMismatch, "histogram length differs from alphabet size");
    }
    const std::uint64_t n = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (n == 0) throw Error(ErrorCode::EmptyVector, "histogram has no observations");

    std::vector<std::size_t> support;
    for (std::size_t a = 0; a < counts.size(); ++a) {
        if (counts[a] != 0) support.push_back(a);
    }

    // mu(A) summed over touched symbols in ascending order, so an empirical nominal built
    // from the same counts reproduces its own set masses bit for bit.
    const double total = static_cast<double>(n);
    std::vector<double> freq(support.size());
    for (std::size_t k = 0; k < support.size(); ++k) {
        freq[k] = static_cast<double>(counts[support[k]]) / total;
    }
    std::vector<double> mu_mass(pairs_.size(), 0.0);
    for (std::size_t s = 0; s < pairs_.size(); ++s) {
        const std::uint8_t* m = masks_.data() + s * alphabet_size_;
        double acc = 0.0;
        for (std::size_t k = 0; k < support.size(); ++k) {
            if (m[support[k]]) acc += freq[k];
        }
        mu_mass[s] = acc;
    }

    DglDecision out;
    out.statistics = statistics_from_set_masses(mu_mass);
    out.chosen = argmin_with_ties(out.statistics);
    return out;
}

DglDecision ScheffeSystem::decide(const Sequence& x) const {
    return decide_histogram(histogram(x, alphabet_size_));
}

}  // namespace dglcl
