#include "dglcl/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dglcl/bounds.hpp"
#include "dglcl/classifier.hpp"
#include "dglcl/error.hpp"
#include "dglcl/montecarlo.hpp"
#include "dglcl/report.hpp"
#include "dglcl/text_io.hpp"

namespace dglcl {

namespace {

struct Options {
    // classify
    std::vector<std::string> train_files;
    std::string test_file;
    std::size_t alphabet = 0;
    // bounds
    std::string which_bound = "all";
    double n = 0.0;
    double alpha = 0.0;
    int hypotheses = 0;
    double bound_alphabet = 0.0;
    double min_tv = 0.0;
    double delta = 0.0;
    std::string regime = "small";
    // simulate / figures
    std::string config_file;
    std::string which_figure;
    std::uint64_t seed = 0;
    std::size_t trials = 10'000;
    unsigned threads = 1;
    std::string out_file;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::Io, "cannot write " + path);
    file << text;
    if (!file) throw Error(ErrorCode::Io, "write failed for " + path);
}

void run_classify(const Options& o, std::ostream& out) {
    std::vector<Sequence> training;
    for (const auto& f : o.train_files) training.push_back(read_sequence_file(f));
    const Sequence test = read_sequence_file(o.test_file);
    const Classifier c = Classifier::train(training, o.alphabet);
    const DglDecision d = c.classify(test);
    out << "chosen=" << d.chosen + 1 << '\n' << "statistics=";
    for (std::size_t j = 0; j < d.statistics.size(); ++j) {
        out << (j ? " " : "") << format_real(d.statistics[j]);
    }
    out << '\n';
}

void print_report(std::ostream& out, std::string_view name, const BoundReport& r) {
    out << name << " value=" << format_real(r.value) << " exponent=" << format_real(r.exponent)
        << " penalty=" << format_real(r.penalty) << " delta=" << format_real(r.delta_used)
        << " vacuous=" << (r.vacuous ? 1 : 0) << '\n';
}

BoundParams bound_params(const Options& o, bool delta_given) {
    BoundParams p;
    p.n = o.n;
    p.alpha = o.alpha;
    p.hypotheses = o.hypotheses;
    p.alphabet = o.bound_alphabet;
    p.min_tv = o.min_tv;
    p.regime = o.regime == "large" ? Regime::LargeAlphabet : Regime::SmallAlphabet;
    if (delta_given) p.delta = o.delta;
    validate(p, false);
    return p;
}

void run_bounds(const Options& o, BoundParams p, std::ostream& out) {

    if (o.which_bound == "combined") {
        if (!p.delta) p.delta = delta_star(p.alpha, p.min_tv, p.alphabet, p.regime);
        out << "combined value=" << format_real(combined_bound(p))
            << " dgl=" << format_real(dgl_error_bound(p.n, p.hypotheses, *p.delta))
            << " estimation=" << format_real(estimation_error_bound(p))
            << " delta=" << format_real(*p.delta) << '\n';
        return;
    }
    if (o.which_bound == "all") {
        for (auto k : {TheoremKind::Thm1, TheoremKind::Cor1, TheoremKind::Thm2, TheoremKind::Cor2}) {
            print_report(out, to_string(k), theorem_bound(p, k));
        }
        return;
    }
    const auto kind = parse_theorem_kind(o.which_bound);
    print_report(out, o.which_bound, theorem_bound(p, *kind));
}

void run_experiment_to(const ExperimentConfig& cfg, const Options& o, std::ostream& out) {
    const auto rows = run_experiment(cfg, o.threads);
    std::ostringstream csv;
    write_csv(csv, rows);
    emit(csv.str(), o.out_file, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Robust statistical classification with the DGL Scheffé-set test"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "Classify a test sequence from labeled training files");
    classify->add_option("--train", o.train_files, "Training sequence file, one per hypothesis (in order)")
        ->required()
        ->check(CLI::ExistingFile);
    classify->add_option("--test", o.test_file, "Test sequence file")->required()->check(CLI::ExistingFile);
    classify->add_option("--alphabet", o.alphabet, "Alphabet size |X|")->required()->check(CLI::PositiveNumber);

    auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form error bounds");
    bounds->add_option("--which", o.which_bound, "thm1, cor1, thm2, cor2, combined or all")
        ->check(CLI::IsMember({"thm1", "cor1", "thm2", "cor2", "combined", "all"}));
    bounds->add_option("--n", o.n, "Test sequence length n")->required();
    bounds->add_option("--alpha", o.alpha, "Training-to-test length ratio N/n")->required();
    bounds->add_option("--m", o.hypotheses, "Number of hypotheses M")->required();
    bounds->add_option("--alphabet", o.bound_alphabet, "Alphabet size |X|")->required();
    bounds->add_option("--min-tv", o.min_tv, "Minimum pairwise total variation")->required();
    auto* delta_opt = bounds->add_option("--delta", o.delta, "Robustness slack for --which combined (default: equalizing value)");
    bounds->add_option("--regime", o.regime, "small or large (for --which combined)")
        ->check(CLI::IsMember({"small", "large"}));

    auto* simulate = app.add_subcommand("simulate", "Run a Monte Carlo experiment from a JSON config");
    simulate->add_option("--config", o.config_file, "Experiment config file")->required()->check(CLI::ExistingFile);
    auto* sim_seed = simulate->add_option("--seed", o.seed, "Master seed (overrides the config)");
    auto* sim_trials = simulate->add_option("--trials", o.trials, "Trials per grid point (overrides the config)")
                           ->check(CLI::PositiveNumber);
    simulate->add_option("--threads", o.threads, "Worker threads (never changes results)");
    simulate->add_option("--out", o.out_file, "Output CSV path (default stdout)");

    auto* figures = app.add_subcommand("figures", "Regenerate the reference experiments as CSV");
    figures->add_option("--which", o.which_figure, "fig1 or fig2")->required()->check(CLI::IsMember({"fig1", "fig2"}));
    figures->add_option("--seed", o.seed, "Master seed");
    figures->add_option("--trials", o.trials, "Trials per grid point")->check(CLI::PositiveNumber);
    figures->add_option("--threads", o.threads, "Worker threads (never changes results)");
    figures->add_option("--out", o.out_file, "Output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ERROR:Usage: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*classify) {
            if (o.train_files.size() < 2) {
                err << "ERROR:Usage: classify needs at least two --train files\n";
                return kExitUsage;
            }
            run_classify(o, out);
        } else if (*bounds) {
            BoundParams p;
            try {
                p = bound_params(o, delta_opt->count() > 0);
            } catch (const Error& e) {
                err << "ERROR:Usage: " << e.what() << '\n';
                return kExitUsage;
            }
            run_bounds(o, p, out);
        } else if (*simulate) {
            std::ifstream in(o.config_file);
            if (!in) throw Error(ErrorCode::Io, "cannot open " + o.config_file);
            ExperimentConfig cfg = parse_experiment_config(in);
            if (sim_seed->count() > 0) cfg.master_seed = o.seed;
            if (sim_trials->count() > 0) cfg.trials = o.trials;
            run_experiment_to(cfg, o, out);
        } else if (*figures) {
            const auto cfg = o.which_figure == "fig1" ? fig1_config(o.seed, o.trials) : fig2_config(o.seed, o.trials);
            run_experiment_to(cfg, o, out);
        }
    } catch (const Error& e) {
        err << "ERROR:" << to_string(e.code()) << ": " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

}  // namespace dglcl
