#pragma once

#include "vacrad/curves.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vacrad {

enum class Command { HalfspaceCurve, CavityCurve, DecayCurve, Validate, Components };
enum class OutputFormat { Csv, Json };
enum class Polarization { Perp, Par };
enum class Geometry { HalfSpace, Cavity };

std::string to_string(Command c);
Command command_from_string(const std::string& s);

struct RunConfig {
    Command command = Command::Validate;

    // Dimensionless operating point.
    double omega_ratio = 1.1;
    double b_over_d = 0.5;
    double xi = 10.0;
    double v_over_c = 3.43e4 / 2.99792458e10;
    double bq0 = 1.0;   // components, half-space
    double q0d = 10.0;  // components, cavity

    // Sweep.
    double x_min = 0.1;
    double x_max = 200.0;
    int points = 400;

    OutputFormat format = OutputFormat::Csv;
    std::string output;  // empty: stdout
    EvalPath eval_path = EvalPath::RegularizedIntegral;
    Polarization polarization = Polarization::Perp;
    ParallelFormula parallel_formula = ParallelFormula::Corrected;
    Geometry geometry = Geometry::HalfSpace;

    // Absolute inputs (CGS); only used when given.
    std::optional<double> omega0_rad_per_s;
    std::optional<double> vmax_cm_per_s;
    std::optional<double> dipole_sq_esu2_cm2;
    std::optional<double> dipole_sq_perp_esu2_cm2;
    std::optional<double> dipole_sq_par_esu2_cm2;
    std::optional<double> hbar_erg_s;
    std::optional<double> c_cm_per_s;

    // v_max/c, from vmax when given.
    double beta() const;
    bool has_absolute_inputs() const { return omega0_rad_per_s && dipole_sq_esu2_cm2; }
    CurveSpec curve_spec() const;
};

// Every key accepted by parse_config and apply_setting.
const std::vector<std::string>& config_keys();

// Sets one key; line (1-based, 0 for command-line flags) is used in messages.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value, int line = 0);

// key = value lines with # comments, applied on top of `base`.
RunConfig parse_config(std::string_view text, RunConfig base = {});

}  // namespace vacrad
