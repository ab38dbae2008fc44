#include "pohst/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "pohst/certificate.hpp"
#include "pohst/numbertheory.hpp"
#include "pohst/search.hpp"

namespace pohst {

namespace {

enum class Format { text, json, csv };

struct RunConfig {
    int n = 0;
    std::string pattern;
    std::string input;
    double grid_step = 0.25;
    int refine_iters = 3;
    int starts = 64;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    int jobs = 1;
    bool timing = false;
    bool blockwise = false;
    int m = 0;
    double regulator = 0.0;
    std::optional<double> gamma;
    Format format = Format::text;
    std::string out;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return s.str();
}

std::string point_text(const Vector& v) {
    std::string out = "(";
    for (int k = 1; k <= v.size(); ++k) {
        if (k > 1) out += ", ";
        out += fmt(v.at(k));
    }
    return out + ")";
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw UsageError("cannot write " + cfg.out);
    file << text;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto report = sweep_patterns(cfg.n, cfg.jobs);
    std::string text;
    switch (cfg.format) {
        case Format::json:
            text = to_json(report, cfg.timing);
            break;
        case Format::csv:
            text = "n,patterns_checked,steps_checked,parity_checked,failures,passed\n" + std::to_string(report.n) +
                   "," + std::to_string(report.patterns_checked) + "," + std::to_string(report.steps_checked) + "," +
                   std::to_string(report.parity_checked) + "," + std::to_string(report.failures.size()) + "," +
                   (report.passed() ? "true" : "false") + "\n";
            break;
        case Format::text: {
            std::ostringstream s;
            s << "n = " << report.n << ": " << report.patterns_checked << " patterns, " << report.failures.size()
              << " failures (" << report.steps_checked << " construction steps checked, " << report.parity_checked
              << " parity checks)\n";
            for (const auto& f : report.failures) s << "  " << f.pattern << ": " << f.reason << "\n";
            if (cfg.timing) s << "wall time: " << report.wall_time.count() << " ms\n";
            s << (report.passed() ? "PASS" : "FAIL") << "\n";
            text = s.str();
            break;
        }
    }
    emit(cfg, text, out);
    return report.passed() ? exit_ok : exit_failure;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
    SignPattern pattern;
    try {
        pattern = SignPattern::parse(cfg.pattern);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (cfg.n != 0 && cfg.n != pattern.size()) throw UsageError("--n does not match the pattern length");
    auto result = build_good_partition(pattern);
    emit(cfg, serialize_certificate(make_certificate(std::move(result.partition))), out);
    return exit_ok;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    std::ifstream file(cfg.input, std::ios::binary);
    if (!file) throw UsageError("cannot read " + cfg.input);
    std::stringstream buffer;
    buffer << file.rdbuf();

    Certificate cert;
    try {
        cert = parse_certificate(buffer.str());
    } catch (const CertificateFormatError& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("malformed certificate: ") + e.what());
    }
    const auto verdict = validate_partition(cert.partition);

    std::string text;
    if (cfg.format == Format::json) {
        nlohmann::json doc = {{"accepted", verdict.accepted}, {"reason", verdict.reason}};
        doc["block"] = verdict.block ? nlohmann::json(*verdict.block) : nlohmann::json(nullptr);
        text = doc.dump(2) + "\n";
    } else if (cfg.format == Format::csv) {
        text = std::string("accepted,reason\n") + (verdict.accepted ? "true" : "false") + ",\"" + verdict.reason + "\"\n";
    } else {
        text = verdict.accepted ? "accept\n" : "reject: " + verdict.reason + "\n";
    }
    emit(cfg, text, out);
    return verdict.accepted ? exit_ok : exit_failure;
}

int cmd_maximize(const RunConfig& cfg, std::ostream& out) {
    MaximizeOptions options;
    options.grid_step = cfg.grid_step;
    options.refine_iters = cfg.refine_iters;
    options.starts = cfg.starts;
    options.seed = cfg.seed;
    MaximizeResult result;
    try {
        result = maximize_f(cfg.n, options);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::string text;
    if (cfg.format == Format::json) {
        text = to_json(result);
    } else if (cfg.format == Format::csv) {
        text = "n,best_value,bound,gap,evaluations\n" + std::to_string(result.n) + "," + fmt(result.best_value) + "," +
               fmt(result.bound) + "," + fmt(result.gap()) + "," + std::to_string(result.evaluations) + "\n";
    } else {
        text = "n = " + std::to_string(result.n) + "\nbest value = " + fmt(result.best_value) +
               "\nbest point = " + point_text(result.best_point) + "\nbound 2^floor((n+1)/2) = " +
               fmt(result.bound) + "\ngap = " + fmt(result.gap()) + "\nmethod = " + result.method +
               "\nevaluations = " + std::to_string(result.evaluations) + "\n";
    }
    emit(cfg, text, out);
    return result.best_value <= result.bound + 1e-9 ? exit_ok : exit_failure;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
    const auto report = sample_domination(cfg.n, cfg.samples, cfg.seed, cfg.blockwise);
    std::string text;
    if (cfg.format == Format::json) {
        text = to_json(report);
    } else if (cfg.format == Format::csv) {
        text = "n,samples,seed,prng,blockwise,accepted\n" + std::to_string(report.n) + "," +
               std::to_string(report.samples) + "," + std::to_string(report.seed) + "," + report.prng + "," +
               (report.blockwise ? "true" : "false") + "," + (report.accepted ? "true" : "false") + "\n";
    } else {
        text = "n = " + std::to_string(report.n) + ", " + std::to_string(report.samples) + " samples, seed " +
               std::to_string(report.seed) + " (" + report.prng + ")\n";
        text += report.accepted ? "accept\n" : "reject: " + report.reason + " at " + point_text(*report.witness) + "\n";
    }
    emit(cfg, text, out);
    return report.accepted ? exit_ok : exit_failure;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
    RegulatorInput in;
    try {
        in = cfg.gamma ? RegulatorInput::with_gamma(cfg.m, cfg.regulator, *cfg.gamma)
                       : RegulatorInput::with_table(cfg.m, cfg.regulator);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    const auto r = compare_bounds(in);
    std::string text;
    if (cfg.format == Format::json) {
        const nlohmann::json doc = {{"m", r.m},
                                    {"regulator", r.regulator},
                                    {"hermite", r.hermite},
                                    {"hermite_source", to_string(r.hermite_source)},
                                    {"remak_bound", r.remak_bound},
                                    {"improved_bound", r.improved_bound},
                                    {"improvement", r.improvement},
                                    {"log", "natural"}};
        text = doc.dump(2) + "\n";
    } else if (cfg.format == Format::csv) {
        text = "m,regulator,hermite,hermite_source,remak_bound,improved_bound,improvement\n" + std::to_string(r.m) +
               "," + fmt(r.regulator) + "," + fmt(r.hermite) + "," + std::string(to_string(r.hermite_source)) + "," +
               fmt(r.remak_bound) + "," + fmt(r.improved_bound) + "," + fmt(r.improvement) + "\n";
    } else {
        text = "m = " + std::to_string(r.m) + ", R = " + fmt(r.regulator) + ", gamma_" + std::to_string(r.m - 1) +
               " = " + fmt(r.hermite) + " (" + std::string(to_string(r.hermite_source)) + ")\n" +
               "Remak:    log|D| <= " + fmt(r.remak_bound) + "\n" + "improved: log|D| <= " + fmt(r.improved_bound) +
               "\n" + "improvement = " + fmt(r.improvement) + "\n" +
               "(natural logarithm; valid for primitive totally real fields)\n";
        if (r.hermite_source == HermiteSource::upper_estimate) {
            text += "note: gamma is an upper estimate, so both values are upper bounds on the bounds\n";
        }
    }
    emit(cfg, text, out);
    return exit_ok;
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    sub->add_option("--format", cfg.format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out, "Write output to FILE instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partition certificates and numeric checks for the bound f_n(v) <= 2^floor((n+1)/2)", "pohst"};
    app.require_subcommand(1, 1);
    RunConfig cfg;
    const unsigned hw = std::thread::hardware_concurrency();
    cfg.jobs = hw == 0 ? 1 : static_cast<int>(hw);

    auto* verify = app.add_subcommand("verify", "Check every sign pattern of dimension n");
    verify->add_option("--n", cfg.n, "Dimension (1..24)")->required()->check(CLI::Range(1, 24));
    verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--timing", cfg.timing, "Include wall time in the report");
    add_output_options(verify, cfg);

    auto* certify = app.add_subcommand("certify", "Build a good-partition certificate for one sign pattern");
    certify->add_option("--pattern", cfg.pattern, "Comma-separated signs, e.g. -,+,-")->required();
    certify->add_option("--n", cfg.n, "Expected dimension")->check(CLI::PositiveNumber);
    add_output_options(certify, cfg);

    auto* check = app.add_subcommand("check", "Validate a certificate file independently");
    check->add_option("certificate", cfg.input, "Certificate JSON file")->required();
    add_output_options(check, cfg);

    auto* maximize = app.add_subcommand("maximize", "Numerically maximize f_n over [-1,1]^n");
    maximize->add_option("--n", cfg.n, "Dimension")->required()->check(CLI::PositiveNumber);
    maximize->add_option("--grid-step", cfg.grid_step, "Grid spacing; must divide 2");
    maximize->add_option("--refine-iters", cfg.refine_iters, "Golden-section refinement rounds")
        ->check(CLI::NonNegativeNumber);
    maximize->add_option("--starts", cfg.starts, "Random starts above the full-grid range")->check(CLI::PositiveNumber);
    maximize->add_option("--seed", cfg.seed, "PRNG seed for random starts");
    add_output_options(maximize, cfg);

    auto* sample = app.add_subcommand("sample", "Random check of f(v) <= f(-|v|) <= bound");
    sample->add_option("--n", cfg.n, "Dimension")->required()->check(CLI::PositiveNumber);
    sample->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::PositiveNumber);
    sample->add_option("--seed", cfg.seed, "PRNG seed");
    sample->add_flag("--blockwise", cfg.blockwise, "Also check every partition block");
    add_output_options(sample, cfg);

    auto* bound = app.add_subcommand("bound", "Regulator bounds on log|D_k|");
    bound->add_option("--m", cfg.m, "Field degree")->required()->check(CLI::Range(2, 1000000));
    bound->add_option("--R", cfg.regulator, "Regulator R_k")->required()->check(CLI::PositiveNumber);
    bound->add_option("--gamma", cfg.gamma, "Hermite constant gamma_{m-1}; default from the table")
        ->check(CLI::PositiveNumber);
    add_output_options(bound, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (certify->parsed()) return cmd_certify(cfg, out);
        if (check->parsed()) return cmd_check(cfg, out);
        if (maximize->parsed()) return cmd_maximize(cfg, out);
        if (sample->parsed()) return cmd_sample(cfg, out);
        if (bound->parsed()) return cmd_bound(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ConstructionFailure& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

}  // namespace pohst
