#pragma once

#include "vacrad/params.hpp"
#include "vacrad/rates.hpp"

namespace vacrad {

// Dimensionless half-space operating point.
struct HalfspacePoint {
    double omega_ratio = 1.0;  // omega_cm/omega0 >= 1
    double beta = 0.0;         // v_max/c
    double bq0 = 0.0;          // b q0 >= 0
};

inline constexpr double kHalfspaceSeriesThreshold = 0.1;

// Oscillatory parts of the EE and BB brackets:
//   osc_ee(B) = int_0^1 t^4 cos(2Bt) dt,  osc_bb(B) = -1/2 int_0^1 (t^2 + t^4) cos(2Bt) dt,
// in the sin/cos closed form for B >= 0.1 and by Taylor series below.
double halfspace_osc_ee(double bq0);
double halfspace_osc_bb(double bq0);

// Rates in units of Gamma_0 (gamma0 field = 1).
RateBreakdown halfspace_components(const HalfspacePoint& p);
double halfspace_total_ratio(const HalfspacePoint& p);
// Quadrature of the large-time integral representation, in units of Gamma_0.
RateBreakdown halfspace_oracle(const HalfspacePoint& p, double tol = 1e-12);

// Absolute rates (1/s) from CGS configuration.
RateBreakdown halfspace_components(const AtomConfig& atom, const MotionConfig& motion);
double halfspace_total_ratio(const AtomConfig& atom, const MotionConfig& motion);
RateBreakdown halfspace_oracle(const AtomConfig& atom, const MotionConfig& motion, double tol = 1e-12);

HalfspacePoint halfspace_point(const AtomConfig& atom, const MotionConfig& motion);

}  // namespace vacrad
