#pragma once

#include "vacrad/cavity.hpp"
#include "vacrad/decay.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vacrad {

enum class Family { HalfspaceRatio, CavityRatio, DecayPerp, DecayPar };

// Scaled-distance axis of each figure family.
enum class XDefinition {
    TwoOmegaCmBOverC,  // 2 omega_cm b / c (half-space)
    OmegaCmDOverC,     // omega_cm d / c with b = (b/d) d (cavity)
    TwoK0B,            // 2 k0 b (decay)
};

XDefinition x_definition_for(Family f);
std::string to_string(Family f);
std::string to_string(XDefinition x);
Family family_from_string(const std::string& s);

struct CurveParams {
    double omega_ratio = 1.1;  // omega_cm/omega0 (emission families)
    double b_over_d = 0.5;     // cavity family
    double xi = 10.0;          // omega0/Omega (decay families)
    double beta = 3.43e4 / 2.99792458e10;  // v_max/c; 343 m/s by default
    EvalPath eval_path = EvalPath::RegularizedIntegral;
    ParallelFormula parallel_formula = ParallelFormula::Corrected;
};

struct CurveSpec {
    Family family = Family::HalfspaceRatio;
    double lo = 0.1;
    double hi = 200.0;
    int points = 400;
    CurveParams params;
    std::optional<XDefinition> x_definition;  // must match the family when given

    XDefinition axis() const { return x_definition.value_or(x_definition_for(family)); }
    void validate() const;
    std::vector<double> abscissae() const;
};

enum CurveFlag : unsigned {
    kNoFlags = 0,
    kResonanceSkipped = 1u << 0,
    kSeriesPathUsed = 1u << 1,
};

std::string flags_to_string(unsigned flags);
unsigned flags_from_string(const std::string& s);

struct CurvePoint {
    double x = 0.0;
    std::optional<double> y;
    unsigned flags = kNoFlags;
};

CurvePoint evaluate_point(const CurveSpec& spec, double x);

// OpenMP-parallel sweep; output order follows the abscissae.
std::vector<CurvePoint> sweep(const CurveSpec& spec);
// Serial reference implementation of sweep.
std::vector<CurvePoint> sweep_serial(const CurveSpec& spec);

enum class ExtremumKind { Minimum, Maximum };

struct Extremum {
    double x = 0.0;
    double y = 0.0;
    ExtremumKind kind = ExtremumKind::Maximum;
};

// Interior local extrema of the points carrying a y value, refined by a
// parabola through each three-point bracket.
std::vector<Extremum> find_extrema(std::span<const CurvePoint> curve);

// Analytic large-distance limit of the family's ratio.
double analytic_asymptote(const CurveSpec& spec);
// Phase variable in which the family oscillates with period 2 pi:
// 2 b q0 (half-space), q0 d (cavity; jumps every pi), x (decay).
double phase_variable(const CurveSpec& spec, double x);
// Mean y over the last `fraction` of the points carrying a value.
double estimate_asymptote(std::span<const CurvePoint> curve, double fraction = 0.25);

}  // namespace vacrad
