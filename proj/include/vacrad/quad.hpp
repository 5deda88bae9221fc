#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace vacrad {

using cplx = std::complex<double>;

struct Integrand {
    std::function<cplx(double)> evaluator;
    double lo = 0.0;
    double hi = 1.0;
    // Abscissae where the integrand is singular or non-smooth; used as breakpoints.
    std::vector<double> known_poles;
};

struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_floor = 0.0;
    int max_subdivisions = 20000;
    // Number of equal pieces [lo, hi] is split into before adaptation
    // (useful for oscillatory integrands).
    int initial_pieces = 1;
};

struct QuadResult {
    cplx value;
    double err_est = 0.0;
    int evaluations = 0;
    int intervals = 0;
};

// Globally adaptive Gauss-Kronrod (10/21-point) quadrature of a complex-valued
// function. Stops when err_est <= max(rel_tol |value|, abs_floor, roundoff floor);
// throws ConvergenceError after max_subdivisions bisections.
QuadResult integrate(const Integrand& f, const QuadOptions& opts);
QuadResult integrate(const Integrand& f, double tol);

struct EpsilonSchedule {
    std::vector<double> eps_list;  // strictly decreasing, > 0
    int extrapolation_order = 5;   // degree of the extrapolating polynomial in eps

    void validate() const;

    static EpsilonSchedule geometric(double eps0, double ratio, int count, int order);
    // Default schedule for a phase window [phase_lo, phase_hi] of cot(phase):
    // eps0 is a quarter of the distance to the nearest pole outside the window
    // interior (capped at pi/4), halved 7 times, extrapolated at degree 5.
    static EpsilonSchedule for_phase_window(double phase_lo, double phase_hi);
};

// Integrand of the form g(u) cot(u d) + h(u) on [lo, hi]. Both g and h are real.
struct CotIntegrand {
    std::function<double(double)> cot_coefficient;  // g
    std::function<double(double)> regular;          // h
    double lo = 0.0;
    double hi = 1.0;
};

struct RegularizedResult {
    double value = 0.0;
    double err_est = 0.0;
    int poles = 0;
    std::vector<double> estimates;  // Im integral at each eps of the schedule
};

// Im int [g(u) cot(u d - i eps) + h(u)] du extrapolated to eps -> 0+, i.e. the
// retarded prescription. The u = 0 image 1/(u d) is subtracted from the cot
// (mode set n >= 1). Phases u d within 1e-9 of a pole at an endpoint raise
// ResonanceError; failure of the extrapolation to contract raises ConvergenceError.
RegularizedResult im_regularized(const CotIntegrand& f, double d, const EpsilonSchedule& schedule,
                                 double quad_tol = 1e-10);
RegularizedResult im_regularized(const CotIntegrand& f, double d);

// Two integrands over the same window evaluated in one pass (shared cot kernel).
std::pair<RegularizedResult, RegularizedResult> im_regularized_pair(const CotIntegrand& f1, const CotIntegrand& f2,
                                                                    double d, const EpsilonSchedule& schedule,
                                                                    double quad_tol = 1e-10);
std::pair<RegularizedResult, RegularizedResult> im_regularized_pair(const CotIntegrand& f1, const CotIntegrand& f2,
                                                                    double d);

// (pi/d) sum_{n>=1, n pi/d < q0} g(n pi/d)
double mode_sum(const std::function<double(double)>& g, double d, double q0);

// Pole abscissae n pi/d (n >= 1) strictly inside (lo, hi).
std::vector<double> cot_poles(double lo, double hi, double d);

// Im cot(x - i eps) - Im 1/(x - i eps), evaluated without cancellation.
cplx cot_minus_inverse(double x, double eps);

}  // namespace vacrad
