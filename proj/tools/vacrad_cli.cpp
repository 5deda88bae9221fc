// vacrad: emission and decay rates of an oscillating two-level atom near
// perfectly conducting plates. Curve emission, single-point components and
// the acceptance suite.

#include "vacrad/cavity.hpp"
#include "vacrad/config.hpp"
#include "vacrad/errors.hpp"
#include "vacrad/halfspace.hpp"
#include "vacrad/params.hpp"
#include "vacrad/report.hpp"
#include "vacrad/validation.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace vacrad;

namespace {

enum Exit { kOk = 0, kValidation = 1, kConfig = 2, kConvergence = 3 };

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError(fmt::format("cannot open config file '{}'", path));
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string flag_name(const std::string& key) {
    std::string out = key;
    for (char& c : out)
        if (c == '_') c = '-';
    return "--" + out;
}

struct Flags {
    std::string config_file;
    std::map<std::string, std::string> values;
    std::string artifact_dir;
};

void add_key_options(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--config", flags.config_file, "key = value config file; explicit flags override it");
    for (const std::string& key : config_keys()) {
        std::string names = flag_name(key);
        if (key == "x_min") names += ",--xmin";
        if (key == "x_max") names += ",--xmax";
        cmd->add_option(names, flags.values[key], fmt::format("config key '{}'", key));
    }
}

RunConfig resolve(Command command, CLI::App* cmd, const Flags& flags) {
    RunConfig cfg;
    if (!flags.config_file.empty()) cfg = parse_config(read_file(flags.config_file));
    for (const std::string& key : config_keys())
        if (cmd->count(flag_name(key)) > 0) apply_setting(cfg, key, flags.values.at(key));
    cfg.command = command;
    return cfg;
}

AtomConfig absolute_atom(const RunConfig& cfg) {
    AtomConfig atom;
    atom.omega0 = *cfg.omega0_rad_per_s;
    atom.dipole_sq_total = *cfg.dipole_sq_esu2_cm2;
    atom.dipole_sq_perp = cfg.dipole_sq_perp_esu2_cm2.value_or(0.0);
    atom.dipole_sq_par = cfg.dipole_sq_par_esu2_cm2.value_or(0.0);
    if (cfg.hbar_erg_s) atom.hbar = *cfg.hbar_erg_s;
    if (cfg.c_cm_per_s) atom.c = *cfg.c_cm_per_s;
    atom.validate();
    return atom;
}

void emit(const RunConfig& cfg, const CurveDocument& doc) {
    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) throw ConfigError(fmt::format("cannot write '{}'", cfg.output));
    }
    std::ostream& os = cfg.output.empty() ? std::cout : file;
    if (cfg.format == OutputFormat::Json) write_json(os, doc);
    else write_csv(os, doc);
}

int run_curve(const RunConfig& cfg) {
    const CurveSpec spec = cfg.curve_spec();
    emit(cfg, make_document(spec, sweep(spec)));
    return kOk;
}

int run_components(const RunConfig& cfg) {
    const double beta = cfg.beta();
    const double g0 = cfg.has_absolute_inputs() ? gamma0(absolute_atom(cfg)) : 0.0;
    if (cfg.geometry == Geometry::HalfSpace) {
        const HalfspacePoint p{cfg.omega_ratio, beta, cfg.bq0};
        write_breakdown(std::cout, fmt::format("half-space: omega_ratio={} v_over_c={} bq0={}", p.omega_ratio, beta, p.bq0),
                        halfspace_components(p), g0);
        return kOk;
    }
    const CavityPoint p{cfg.omega_ratio, beta, cfg.q0d, cfg.b_over_d};
    const RateBreakdown rates = cfg.eval_path == EvalPath::ClosedForm ? cavity_components_closed(p)
                                                                      : cavity_components_integral(p);
    write_breakdown(std::cout,
                    fmt::format("cavity: omega_ratio={} v_over_c={} q0d={} b_over_d={} ({})", p.omega_ratio, beta, p.q0d,
                                p.b_over_d, cfg.eval_path == EvalPath::ClosedForm ? "closed form" : "regularized integral"),
                    rates, g0);
    return kOk;
}

int run_validate(const std::string& artifact_dir) {
    SuiteOptions opts;
    opts.artifact_dir = artifact_dir;
    const std::vector<CheckResult> results = run_acceptance_suite(opts);
    for (const CheckResult& r : results) std::cout << format_result(r) << '\n';
    const bool ok = all_passed(results);
    std::cout << (ok ? "all checks passed\n" : "some checks FAILED\n");
    return ok ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Emission and decay rates of an oscillating two-level atom near conducting plates"};
    app.require_subcommand(1);

    const std::vector<std::pair<Command, std::string>> commands = {
        {Command::HalfspaceCurve, "Gamma/Gamma_1 versus 2 omega_cm b/c in front of one plate"},
        {Command::CavityCurve, "Gamma/Gamma_1 versus omega_cm d/c between two plates (b = (b/d) d)"},
        {Command::DecayCurve, "decay-rate ratio versus 2 k0 b near one plate (--polarization perp|par)"},
        {Command::Validate, "run the acceptance suite"},
        {Command::Components, "rate breakdown at one point (--geometry halfspace|cavity)"},
    };
    Flags flags;
    std::map<Command, CLI::App*> subs;
    for (const auto& [command, help] : commands) {
        CLI::App* cmd = app.add_subcommand(to_string(command), help);
        if (command == Command::Validate)
            cmd->add_option("--artifact-dir", flags.artifact_dir, "directory for the figure CSVs written by the suite");
        else add_key_options(cmd, flags);
        subs[command] = cmd;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kConfig;
    }

    try {
        for (const auto& [command, cmd] : subs) {
            if (!cmd->parsed()) continue;
            if (command == Command::Validate) return run_validate(flags.artifact_dir);
            const RunConfig cfg = resolve(command, cmd, flags);
            if (command == Command::Components) return run_components(cfg);
            return run_curve(cfg);
        }
    } catch (const CrossValidationError& e) {
        std::cerr << "cross-validation failed: " << e.what() << '\n';
        return kValidation;
    } catch (const ConvergenceError& e) {
        std::cerr << "numerical non-convergence: " << e.what() << '\n';
        return kConvergence;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kConfig;
    }
    return kConfig;
}
