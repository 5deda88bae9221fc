#pragma once

#include "vacrad/params.hpp"

namespace vacrad {

// Dimensionless decay operating point (units k0 = omega0/c = 1).
struct DecayPoint {
    double xi = 10.0;   // omega0/Omega > 1
    double x = 1.0;     // 2 k0 b > 0
    double beta = 0.0;  // v_max/c
};

struct DecayConfig {
    AtomConfig atom;      // uses dipole_sq_perp and dipole_sq_par
    MotionConfig motion;  // omega_cm holds Omega

    double xi() const { return atom.omega0 / motion.omega_cm; }
    double x() const { return 2.0 * atom.omega0 / atom.c * motion.offset_b; }
    double beta() const { return motion.v_max() / atom.c; }
    DecayPoint point() const { return {xi(), x(), beta()}; }
    void validate() const;
};

enum class ParallelFormula { Corrected, AsPrinted };

inline constexpr double kStaticSeriesThreshold = 1e-2;
inline constexpr double kMotionSeriesThreshold = 0.5;

// Static (a -> 0) brackets of the perpendicular and parallel decay rates, in units of Gamma_0.
double static_perp_bracket(double x);
double static_par_bracket(double x);

// Motion corrections per beta^2.
double perp_motion_coefficient(double xi, double x);
double par_motion_coefficient(double xi, double x, ParallelFormula form = ParallelFormula::Corrected);

double decay_perp_ratio(const DecayPoint& p);
double decay_par_ratio(const DecayPoint& p, ParallelFormula form = ParallelFormula::Corrected);

// x -> infinity limits of the ratios.
double decay_perp_asymptote(const DecayPoint& p);
double decay_par_asymptote(const DecayPoint& p);

struct DecayRates {
    double perp = 0.0;
    double par = 0.0;
};

// Ratios Gamma/Gamma_0 per orientation from direct quadrature of the mode integrals.
DecayRates decay_oracle_ratios(const DecayPoint& p, double tol = 1e-12);

// Absolute rates (1/s).
double decay_static(const DecayConfig& cfg);
double decay_perp_ratio(const DecayConfig& cfg);
double decay_par_ratio(const DecayConfig& cfg, ParallelFormula form = ParallelFormula::Corrected);
DecayRates decay_oracle(const DecayConfig& cfg, double tol = 1e-12);

}  // namespace vacrad
