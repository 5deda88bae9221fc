#include "vacrad/config.hpp"

#include "vacrad/errors.hpp"
#include "vacrad/params.hpp"

#include <fmt/format.h>

#include <array>
#include <charconv>
#include <cmath>

namespace vacrad {

namespace {

std::string where(int line) { return line > 0 ? fmt::format("line {}: ", line) : std::string(); }

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(std::string_view key, std::string_view v, int line) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
        throw ConfigError(fmt::format("{}'{}' expects a number, got '{}'", where(line), key, v));
    return out;
}

double to_positive(std::string_view key, std::string_view v, int line) {
    const double out = to_double(key, v, line);
    if (!(out > 0)) throw ConfigError(fmt::format("{}'{}' must be > 0, got '{}'", where(line), key, v));
    return out;
}

int to_int(std::string_view key, std::string_view v, int line) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ConfigError(fmt::format("{}'{}' expects an integer, got '{}'", where(line), key, v));
    return out;
}

template <class E, std::size_t N>
E to_enum(std::string_view key, std::string_view v, int line, const std::array<std::pair<const char*, E>, N>& table) {
    for (const auto& [name, value] : table)
        if (v == name) return value;
    std::string choices;
    for (const auto& [name, value] : table) choices += choices.empty() ? name : fmt::format(", {}", name);
    throw ConfigError(fmt::format("{}'{}' must be one of {}, got '{}'", where(line), key, choices, v));
}

// Physical quantities whose keys must carry a unit suffix, with the accepted spelling.
constexpr std::array<std::pair<const char*, const char*>, 14> kNeedsUnit = {{
    {"omega0", "omega0_rad_per_s"},
    {"omega_cm", "omega_ratio (dimensionless)"},
    {"vmax", "vmax_m_per_s or vmax_cm_per_s"},
    {"v_max", "vmax_m_per_s or vmax_cm_per_s"},
    {"dipole_sq", "dipole_sq_esu2_cm2"},
    {"dipole_sq_perp", "dipole_sq_perp_esu2_cm2"},
    {"dipole_sq_par", "dipole_sq_par_esu2_cm2"},
    {"hbar", "hbar_erg_s"},
    {"c", "c_cm_per_s"},
    {"amplitude", "v_over_c or vmax_cm_per_s"},
    {"offset", "bq0 or x_min/x_max (dimensionless)"},
    {"plate_gap", "q0d (dimensionless)"},
    {"d", "q0d (dimensionless)"},
    {"b", "bq0 or b_over_d (dimensionless)"},
}};

}  // namespace

std::string to_string(Command c) {
    switch (c) {
    case Command::HalfspaceCurve: return "halfspace-curve";
    case Command::CavityCurve: return "cavity-curve";
    case Command::DecayCurve: return "decay-curve";
    case Command::Validate: return "validate";
    case Command::Components: return "components";
    }
    return "";
}

Command command_from_string(const std::string& s) {
    for (Command c : {Command::HalfspaceCurve, Command::CavityCurve, Command::DecayCurve, Command::Validate,
                      Command::Components})
        if (to_string(c) == s) return c;
    throw ConfigError(fmt::format("unknown command '{}'", s));
}

double RunConfig::beta() const {
    if (vmax_cm_per_s) return *vmax_cm_per_s / c_cm_per_s.value_or(cgs::c);
    return v_over_c;
}

CurveSpec RunConfig::curve_spec() const {
    CurveSpec spec;
    switch (command) {
    case Command::HalfspaceCurve: spec.family = Family::HalfspaceRatio; break;
    case Command::CavityCurve: spec.family = Family::CavityRatio; break;
    case Command::DecayCurve:
        spec.family = polarization == Polarization::Perp ? Family::DecayPerp : Family::DecayPar;
        break;
    default: throw ConfigError(fmt::format("command '{}' does not produce a curve", to_string(command)));
    }
    spec.lo = x_min;
    spec.hi = x_max;
    spec.points = points;
    spec.params.omega_ratio = omega_ratio;
    spec.params.b_over_d = b_over_d;
    spec.params.xi = xi;
    spec.params.beta = beta();
    spec.params.eval_path = eval_path;
    spec.params.parallel_formula = parallel_formula;
    spec.validate();
    return spec;
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "omega_ratio",      "b_over_d",         "xi",
        "v_over_c",         "bq0",              "q0d",
        "x_min",            "x_max",            "points",
        "format",           "output",           "eval_path",
        "polarization",     "parallel_formula", "geometry",
        "omega0_rad_per_s", "vmax_m_per_s",     "vmax_cm_per_s",
        "dipole_sq_esu2_cm2", "dipole_sq_perp_esu2_cm2", "dipole_sq_par_esu2_cm2",
        "hbar_erg_s",       "c_cm_per_s",
    };
    return keys;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value, int line) {
    value = trim(value);
    if (key == "omega_ratio") cfg.omega_ratio = to_double(key, value, line);
    else if (key == "b_over_d") cfg.b_over_d = to_double(key, value, line);
    else if (key == "xi") cfg.xi = to_double(key, value, line);
    else if (key == "v_over_c") {
        cfg.v_over_c = to_double(key, value, line);
        cfg.vmax_cm_per_s.reset();
    } else if (key == "bq0") cfg.bq0 = to_double(key, value, line);
    else if (key == "q0d") cfg.q0d = to_double(key, value, line);
    else if (key == "x_min") cfg.x_min = to_double(key, value, line);
    else if (key == "x_max") cfg.x_max = to_double(key, value, line);
    else if (key == "points") cfg.points = to_int(key, value, line);
    else if (key == "format")
        cfg.format = to_enum(key, value, line,
                             std::array{std::pair{"csv", OutputFormat::Csv}, std::pair{"json", OutputFormat::Json}});
    else if (key == "output") cfg.output = std::string(value);
    else if (key == "eval_path")
        cfg.eval_path = to_enum(key, value, line,
                                std::array{std::pair{"integral", EvalPath::RegularizedIntegral},
                                           std::pair{"closed", EvalPath::ClosedForm}});
    else if (key == "polarization")
        cfg.polarization = to_enum(key, value, line,
                                   std::array{std::pair{"perp", Polarization::Perp}, std::pair{"par", Polarization::Par}});
    else if (key == "parallel_formula")
        cfg.parallel_formula = to_enum(key, value, line,
                                       std::array{std::pair{"corrected", ParallelFormula::Corrected},
                                                  std::pair{"as_printed", ParallelFormula::AsPrinted}});
    else if (key == "geometry")
        cfg.geometry = to_enum(key, value, line,
                               std::array{std::pair{"halfspace", Geometry::HalfSpace}, std::pair{"cavity", Geometry::Cavity}});
    else if (key == "omega0_rad_per_s") cfg.omega0_rad_per_s = to_positive(key, value, line);
    else if (key == "vmax_m_per_s") cfg.vmax_cm_per_s = 100.0 * to_double(key, value, line);
    else if (key == "vmax_cm_per_s") cfg.vmax_cm_per_s = to_double(key, value, line);
    else if (key == "dipole_sq_esu2_cm2") cfg.dipole_sq_esu2_cm2 = to_positive(key, value, line);
    else if (key == "dipole_sq_perp_esu2_cm2") cfg.dipole_sq_perp_esu2_cm2 = to_double(key, value, line);
    else if (key == "dipole_sq_par_esu2_cm2") cfg.dipole_sq_par_esu2_cm2 = to_double(key, value, line);
    else if (key == "hbar_erg_s") cfg.hbar_erg_s = to_positive(key, value, line);
    else if (key == "c_cm_per_s") cfg.c_cm_per_s = to_positive(key, value, line);
    else {
        for (const auto& [bare, accepted] : kNeedsUnit)
            if (key == bare)
                throw ConfigError(fmt::format("{}'{}' is missing a unit suffix; use {}", where(line), key, accepted));
        throw ConfigError(fmt::format("{}unknown key '{}'", where(line), key));
    }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
    int line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(fmt::format("line {}: expected 'key = value', got '{}'", line_no, line));
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(fmt::format("line {}: missing key before '='", line_no));
        if (value.empty()) throw ConfigError(fmt::format("line {}: missing value for '{}'", line_no, key));
        apply_setting(base, key, value, line_no);
    }
    return base;
}

}  // namespace vacrad
