#include "dglcl/report.hpp"

#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "dglcl/error.hpp"
#include "dglcl/text_io.hpp"

namespace dglcl {

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

template <typename T>
T get_or(const nlohmann::json& doc, const char* key, T fallback) {
    return doc.contains(key) ? doc.at(key).get<T>() : fallback;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const ResultRow> rows) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.experiment << ',' << r.n << ',' << r.training_length << ',' << format_real(r.alpha)
            << ',' << r.hypotheses << ',' << r.alphabet << ',' << r.trials << ',' << r.errors << ','
            << format_real(r.error_rate) << ',' << format_real(r.ci_low) << ','
            << format_real(r.ci_high) << ',' << opt(r.map_error_rate) << ',' << opt(r.bound_thm1)
            << ',' << opt(r.bound_cor1) << ',' << opt(r.bound_thm2) << ',' << opt(r.bound_cor2)
            << ',' << opt(r.min_tv_nominal) << ',' << opt(r.min_tv_true) << '\n';
    }
}

ExperimentConfig parse_experiment_config(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("config is not valid JSON: ") + e.what());
    }
    try {
        ExperimentConfig cfg;
        cfg.id = get_or<std::string>(doc, "experiment", cfg.id);
        if (doc.contains("truths")) {
            for (const auto& t : doc.at("truths")) cfg.truths.emplace_back(t.get<std::vector<double>>());
        }
        if (doc.contains("family")) {
            const auto& f = doc.at("family");
            LargeAlphabetFamilySpec spec;
            spec.hypotheses = get_or<int>(f, "M", spec.hypotheses);
            spec.c = get_or<double>(f, "c", spec.c);
            spec.alphabet_exponent = get_or<double>(f, "alphabet_exponent", spec.alphabet_exponent);
            cfg.family = spec;
        }
        if (!cfg.truths.empty() && cfg.family) {
            throw Error(ErrorCode::Parse, "config must give either truths or family, not both");
        }
        cfg.alphas = doc.at("alphas").get<std::vector<double>>();
        cfg.n_grid = doc.at("n_grid").get<std::vector<std::size_t>>();
        cfg.trials = get_or<std::size_t>(doc, "trials", cfg.trials);
        cfg.master_seed = get_or<std::uint64_t>(doc, "master_seed", cfg.master_seed);
        cfg.priors = get_or<std::vector<double>>(doc, "priors", {});
        cfg.compare_map = get_or<bool>(doc, "compare_map", cfg.compare_map);
        cfg.ci_z = get_or<double>(doc, "ci_z", cfg.ci_z);
        for (const auto& name : get_or<std::vector<std::string>>(doc, "bounds", {})) {
            const auto kind = parse_theorem_kind(name);
            if (!kind) throw Error(ErrorCode::Parse, "unknown bound '" + name + "'");
            cfg.bound_set.push_back(*kind);
        }
        validate(cfg);
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("config field error: ") + e.what());
    }
}

}  // namespace dglcl
