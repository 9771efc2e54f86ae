#pragma once

#include <optional>
#include <string_view>

#include "dglcl/prob_core.hpp"

namespace dglcl {

enum class Regime { SmallAlphabet, LargeAlphabet };

enum class TheoremKind { Thm1, Cor1, Thm2, Cor2 };

std::string_view to_string(TheoremKind kind) noexcept;
std::optional<TheoremKind> parse_theorem_kind(std::string_view name) noexcept;
Regime regime_of(TheoremKind kind) noexcept;

struct BoundParams {
    double n = 1.0;           // test length
    double alpha = 1.0;       // N / n
    int hypotheses = 2;       // M
    double alphabet = 1.0;    // |X|
    double min_tv = 1.0;      // nominal min-TV for theorems, true min-TV for corollaries
    std::optional<double> delta;
    Regime regime = Regime::SmallAlphabet;
};

// value = 2M exp(-n (exponent - penalty)).
struct BoundReport {
    double value = 0.0;
    double log_value = 0.0;  // ln(value); finite even where value underflows
    double exponent = 0.0;  // leading coefficient of n
    double penalty = 0.0;   // max{...}/n correction
    double delta_used = 0.0;
    bool vacuous = false;   // value >= 1
};

// Throws BadParams when the invariants on BoundParams fail.
void validate(const BoundParams& p, bool require_delta);

// 2M exp(-n (delta^2/2 - 2 ln(M-1)/n)).
double dgl_error_bound(double n, int hypotheses, double delta);

// Bound on Pr[Phi^c]: union over subsets (small) or over symbols (large) plus Hoeffding.
double estimation_error_bound(const BoundParams& p);

double combined_bound(const BoundParams& p);

// Slack that equalizes the DGL and estimation leading exponents.
double delta_star(double alpha, double min_tv, double alphabet, Regime regime);

BoundReport theorem_bound(const BoundParams& p, TheoremKind which);

// min_tv_true / (1 + 2 epsilon).
double prop2_lower_bound(double min_tv_true, double epsilon);

// epsilon(alpha) that the corollaries substitute into prop2_lower_bound.
double corollary_epsilon(double alpha, double alphabet, Regime regime);

// Largest |X| keeping the first corollary's exponent positive under linear growth.
double alphabet_growth_limit(double n, double alpha, double min_tv_true);

// Exponents in nats: V^2/2 <= -ln(1 - V^2)/2 <= C(P,Q) ln 2.
struct ExponentChain {
    double v_term = 0.0;
    double log_term = 0.0;
    double chernoff_term = 0.0;
};

// Throws DisjointSupport when the Chernoff distance is infinite.
ExponentChain exponent_chain(const Distribution& p, const Distribution& q);

}  // namespace dglcl
