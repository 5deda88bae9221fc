#pragma once

#include "vacrad/params.hpp"
#include "vacrad/rates.hpp"
#include "vacrad/specfun.hpp"

#include <string>

namespace vacrad {

enum class EvalPath { RegularizedIntegral, ClosedForm };

// Dimensionless cavity operating point.
struct CavityPoint {
    double omega_ratio = 1.0;  // omega_cm/omega0 >= 1
    double beta = 0.0;         // v_max/c
    double q0d = 0.0;          // X = q0 d
    double b_over_d = 0.5;     // rho in (0, 1)
};

struct CavityRateInputs {
    AtomConfig atom;
    MotionConfig motion;
    double d = 0.0;  // plate gap, cm
    EvalPath eval_path = EvalPath::RegularizedIntegral;
};

inline constexpr double kCavityResonanceGuard = 1e-3;

// Throws ResonanceError when q0 d is within kCavityResonanceGuard of n pi, n >= 1.
void check_off_resonance(double q0d);

enum class CavityMethod { EpsilonExtrapolation, ModeSum };

// Normalized Im-integrals in t = u/q0:
//   s_ee = Im int_0^1 [t^2 cot(tX) + t^4 (cot(tX) cos(2tB) + sin(2tB))] dt
//   s_bb = Im int_0^1 (1 + t^2)(cot(tX) - t^2 (cos(2tB) cot(tX) + sin(2tB))) dt
// with X = q0 d and B = b q0.
struct CavityIntegrals {
    double s_ee = 0.0;
    double s_bb = 0.0;
    double err_ee = 0.0;
    double err_bb = 0.0;
    int modes = 0;
};

CavityIntegrals cavity_im_integrals(double q0d, double b_over_d, CavityMethod method = CavityMethod::EpsilonExtrapolation);

// The closed-form brackets, split into the cos(2bq0) block (t1), the
// Li_2/Arg block (t2) and the sin(2bq0) block (t3), divided by the common
// denominator. value = t1 + t2 + t3 and is complex as written.
struct ClosedFormTerms {
    cplx t1, t2, t3, value;
};

struct CavityClosedForm {
    ClosedFormTerms ee;
    ClosedFormTerms bb;
};

CavityClosedForm cavity_closed_brackets(double q0d, double b_over_d);
std::string describe(const CavityClosedForm& cf, const CavityIntegrals& ref);

// Rates in units of Gamma_0.
RateBreakdown cavity_components_integral(const CavityPoint& p);
// Closed forms (real parts) cross-validated against the integral path at
// relative tolerance xval_tol; throws CrossValidationError on disagreement.
RateBreakdown cavity_components_closed(const CavityPoint& p, double xval_tol = 1e-6);
// Closed forms without the cross-validation step.
RateBreakdown cavity_components_closed_unchecked(const CavityPoint& p);
double cavity_total_ratio(const CavityPoint& p, EvalPath path = EvalPath::RegularizedIntegral);
// Brace expression of the total ratio from the normalized Im-integrals.
double cavity_ratio_from_integrals(double omega_ratio, const CavityIntegrals& s);

CavityPoint cavity_point(const CavityRateInputs& in);
RateBreakdown cavity_components_integral(const CavityRateInputs& in);
RateBreakdown cavity_components_closed(const CavityRateInputs& in, double xval_tol = 1e-6);
double cavity_total_ratio(const CavityRateInputs& in);

}  // namespace vacrad
