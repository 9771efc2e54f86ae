#include "dglcl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dglcl/error.hpp"

namespace dglcl {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void bad(const std::string& what) { throw Error(ErrorCode::BadParams, what); }

double dgl_penalty(int hypotheses) { return 2.0 * std::log(static_cast<double>(hypotheses - 1)); }

double estimation_penalty(double alphabet, Regime regime) {
    return regime == Regime::SmallAlphabet ? alphabet * kLn2 : std::log(alphabet);
}

// Leading coefficient of the estimation-error exponent at slack delta.
double estimation_lead(const BoundParams& p, double delta) {
    const double gap = p.min_tv - delta;
    if (p.regime == Regime::SmallAlphabet) return p.alpha * gap * gap / 2.0;
    const double scaled = gap / p.alphabet;
    return 2.0 * p.alpha * scaled * scaled;
}

}  // namespace

std::string_view to_string(TheoremKind kind) noexcept {
    switch (kind) {
        case TheoremKind::Thm1: return "thm1";
        case TheoremKind::Cor1: return "cor1";
        case TheoremKind::Thm2: return "thm2";
        case TheoremKind::Cor2: return "cor2";
    }
    return "";
}

std::optional<TheoremKind> parse_theorem_kind(std::string_view name) noexcept {
    for (auto k : {TheoremKind::Thm1, TheoremKind::Cor1, TheoremKind::Thm2, TheoremKind::Cor2}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

Regime regime_of(TheoremKind kind) noexcept {
    return kind == TheoremKind::Thm1 || kind == TheoremKind::Cor1 ? Regime::SmallAlphabet
                                                                  : Regime::LargeAlphabet;
}

void validate(const BoundParams& p, bool require_delta) {
    if (!(p.n >= 1.0) || !std::isfinite(p.n)) bad("n must be >= 1");
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) bad("alpha must be positive");
    if (p.hypotheses < 2) bad("M must be >= 2");
    if (!(p.alphabet >= 1.0) || !std::isfinite(p.alphabet)) bad("alphabet size must be >= 1");
    if (!(p.min_tv > 0.0 && p.min_tv <= 1.0)) bad("min_tv must lie in (0, 1]");
    if (require_delta && !p.delta) bad("delta is required");
    if (p.delta && !(*p.delta > 0.0 && *p.delta < p.min_tv)) bad("delta must lie in (0, min_tv)");
}

double dgl_error_bound(double n, int hypotheses, double delta) {
    if (hypotheses < 2) bad("M must be >= 2");
    if (!(delta > 0.0)) bad("delta must be positive");
    if (!(n >= 1.0)) bad("n must be >= 1");
    return 2.0 * hypotheses * std::exp(-n * delta * delta / 2.0 + dgl_penalty(hypotheses));
}

double estimation_error_bound(const BoundParams& p) {
    validate(p, true);
    return 2.0 * p.hypotheses *
           std::exp(-p.n * estimation_lead(p, *p.delta) + estimation_penalty(p.alphabet, p.regime));
}

double combined_bound(const BoundParams& p) {
    validate(p, true);
    return dgl_error_bound(p.n, p.hypotheses, *p.delta) + estimation_error_bound(p);
}

double delta_star(double alpha, double min_tv, double alphabet, Regime regime) {
    if (!(alpha > 0.0) || !(min_tv > 0.0) || !(alphabet >= 1.0)) {
        bad("delta_star requires alpha > 0, min_tv > 0, alphabet >= 1");
    }
    const double root = std::sqrt(alpha);
    if (regime == Regime::SmallAlphabet) return root * min_tv / (1.0 + root);
    return 2.0 * root * min_tv / (alphabet + 2.0 * root);
}

BoundReport theorem_bound(const BoundParams& p, TheoremKind which) {
    validate(p, false);
    const double root = std::sqrt(p.alpha);
    const double m2 = p.min_tv * p.min_tv;
    BoundReport r;
    switch (which) {
        case TheoremKind::Thm1:
            r.exponent = p.alpha * m2 / (2.0 * (1.0 + root) * (1.0 + root));
            break;
        case TheoremKind::Cor1:
            r.exponent = p.alpha * m2 / (2.0 * (2.0 + root) * (2.0 + root));
            break;
        case TheoremKind::Thm2: {
            const double d = p.alphabet + 2.0 * root;
            r.exponent = 2.0 * p.alpha * m2 / (d * d);
            break;
        }
        case TheoremKind::Cor2: {
            const double d = 3.0 * p.alphabet + 2.0 * root;
            r.exponent = 2.0 * p.alpha * m2 / (d * d);
            break;
        }
    }
    const Regime regime = regime_of(which);
    const double pen = std::max(dgl_penalty(p.hypotheses), estimation_penalty(p.alphabet, regime));
    r.penalty = pen / p.n;
    r.log_value = std::log(2.0 * p.hypotheses) - p.n * r.exponent + pen;
    r.value = std::exp(r.log_value);
    r.delta_used = delta_star(p.alpha, p.min_tv, p.alphabet, regime);
    if (which == TheoremKind::Cor1 || which == TheoremKind::Cor2) {
        // Delta* in the corollaries is expressed through the nominal min-TV, which is only
        // known to exceed the Prop-2 lower bound; report Delta* at that lower bound.
        const double nominal_floor =
            prop2_lower_bound(p.min_tv, corollary_epsilon(p.alpha, p.alphabet, regime));
        r.delta_used = delta_star(p.alpha, nominal_floor, p.alphabet, regime);
    }
    r.vacuous = r.value >= 1.0;
    return r;
}

double prop2_lower_bound(double min_tv_true, double epsilon) {
    if (!(epsilon > 0.0)) bad("epsilon must be positive");
    if (!(min_tv_true > 0.0 && min_tv_true <= 1.0)) bad("min_tv must lie in (0, 1]");
    return min_tv_true / (1.0 + 2.0 * epsilon);
}

double corollary_epsilon(double alpha, double alphabet, Regime regime) {
    if (!(alpha > 0.0) || !(alphabet >= 1.0)) bad("epsilon requires alpha > 0, alphabet >= 1");
    const double root = std::sqrt(alpha);
    if (regime == Regime::SmallAlphabet) return 1.0 / (2.0 * (1.0 + root));
    return alphabet / (alphabet + 2.0 * root);
}

double alphabet_growth_limit(double n, double alpha, double min_tv_true) {
    if (!(n > 0.0) || !(alpha > 0.0) || !(min_tv_true > 0.0)) bad("growth limit needs positive arguments");
    const double d = 2.0 + std::sqrt(alpha);
    return n * alpha * min_tv_true * min_tv_true / (2.0 * kLn2 * d * d);
}

ExponentChain exponent_chain(const Distribution& p, const Distribution& q) {
    const double c = chernoff(p, q).value;
    const double v = total_variation(p, q);
    return ExponentChain{v * v / 2.0, -0.5 * std::log1p(-v * v), c * kLn2};
}

}  // namespace dglcl
