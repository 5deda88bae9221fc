#include "vacrad/quad.hpp"

#include "vacrad/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <exception>
#include <utility>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace vacrad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Gauss-Kronrod 21-point abscissae (positive half) and weights; the 10-point
// Gauss rule uses the odd-indexed Kronrod nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208067960475, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double a, b;
    cplx value;
    double err;
    double resabs;
    bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk21(const std::function<cplx(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const cplx fc = f(center);
    cplx resk = fc * kWgk[10];
    cplx resg = 0.0;
    double resabs = std::abs(fc) * kWgk[10];
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        const cplx f1 = f(center - dx);
        const cplx f2 = f(center + dx);
        resk += (f1 + f2) * kWgk[j];
        resabs += (std::abs(f1) + std::abs(f2)) * kWgk[j];
        if (j % 2 == 1) resg += (f1 + f2) * kWg[j / 2];
    }
    Segment s{a, b, resk * half, std::abs((resk - resg) * half), resabs * std::abs(half)};
    return s;
}

}  // namespace

QuadResult integrate(const Integrand& f, const QuadOptions& opts) {
    if (!(f.lo < f.hi)) throw DomainError(fmt::format("integration domain [{}, {}] is empty", f.lo, f.hi));
    if (!(opts.rel_tol >= 1e-13)) throw DomainError(fmt::format("quadrature tolerance {} below 1e-13", opts.rel_tol));

    std::vector<double> cuts{f.lo};
    const int pieces = std::max(1, opts.initial_pieces);
    std::vector<double> interior;
    for (int k = 1; k < pieces; ++k) interior.push_back(f.lo + (f.hi - f.lo) * k / pieces);
    for (double p : f.known_poles)
        if (p > f.lo && p < f.hi) interior.push_back(p);
    std::sort(interior.begin(), interior.end());
    for (double p : interior)
        if (p > cuts.back()) cuts.push_back(p);
    if (f.hi > cuts.back()) cuts.push_back(f.hi);
    else cuts.back() = f.hi;

    std::priority_queue<Segment> heap;
    cplx total = 0.0;
    double err = 0.0;
    double resabs = 0.0;
    int evals = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Segment s = gk21(f.evaluator, cuts[i], cuts[i + 1]);
        evals += 21;
        total += s.value;
        err += s.err;
        resabs += s.resabs;
        heap.push(s);
    }

    auto target = [&] {
        return std::max({opts.rel_tol * std::abs(total), opts.abs_floor, 50.0 * kEps * resabs});
    };

    int splits = 0;
    while (err > target()) {
        if (splits >= opts.max_subdivisions)
            throw ConvergenceError(fmt::format(
                "quadrature on [{}, {}] did not converge after {} subdivisions (err {:.3e}, value {:.6e})", f.lo,
                f.hi, splits, err, std::abs(total)));
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval cannot be bisected further in double precision.
            throw ConvergenceError(fmt::format("quadrature interval collapsed near {} (err {:.3e})", mid, worst.err));
        }
        Segment left = gk21(f.evaluator, worst.a, mid);
        Segment right = gk21(f.evaluator, mid, worst.b);
        evals += 42;
        total += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        resabs += left.resabs + right.resabs - worst.resabs;
        heap.push(left);
        heap.push(right);
        ++splits;
    }

    // Re-sum to shed the drift of the running updates.
    cplx value = 0.0;
    double err_sum = 0.0;
    const int intervals = static_cast<int>(heap.size());
    while (!heap.empty()) {
        value += heap.top().value;
        err_sum += heap.top().err;
        heap.pop();
    }
    return {value, err_sum, evals, intervals};
}

QuadResult integrate(const Integrand& f, double tol) {
    QuadOptions opts;
    opts.rel_tol = tol;
    return integrate(f, opts);
}

void EpsilonSchedule::validate() const {
    if (eps_list.size() < 3) throw DomainError("epsilon schedule needs at least 3 values");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0)) throw DomainError("epsilon schedule values must be positive");
        if (i > 0 && !(eps_list[i] < eps_list[i - 1])) throw DomainError("epsilon schedule must be strictly decreasing");
    }
    if (extrapolation_order < 1 || extrapolation_order + 1 >= static_cast<int>(eps_list.size()))
        throw DomainError(fmt::format("extrapolation order {} needs at least {} epsilon values", extrapolation_order,
                                      extrapolation_order + 2));
}

EpsilonSchedule EpsilonSchedule::geometric(double eps0, double ratio, int count, int order) {
    EpsilonSchedule s;
    s.extrapolation_order = order;
    double e = eps0;
    for (int i = 0; i < count; ++i, e /= ratio) s.eps_list.push_back(e);
    s.validate();
    return s;
}

namespace {

double distance_to_pole(double phase) {
    const double n = std::max(1.0, std::round(phase / kPi));
    return std::abs(phase - n * kPi);
}

}  // namespace

EpsilonSchedule EpsilonSchedule::for_phase_window(double phase_lo, double phase_hi) {
    const double radius = std::min({kPi, distance_to_pole(phase_lo), distance_to_pole(phase_hi)});
    return geometric(radius / 4.0, 2.0, 8, 5);
}

cplx cot_minus_inverse(double x, double eps) {
    const cplx z(x, -eps);
    if (std::abs(z) < 0.25) {
        const cplx z2 = z * z;
        // cot z - 1/z = -z/3 - z^3/45 - 2z^5/945 - z^7/4725 - 2z^9/93555 - 1382z^11/638512875 + O(z^13)
        return -z * (1.0 / 3 + z2 * (1.0 / 45 + z2 * (2.0 / 945 + z2 * (1.0 / 4725 + z2 * (2.0 / 93555 +
                                                                                         z2 * (1382.0 / 638512875))))));
    }
    const double sx = std::sin(x);
    const double sh = std::sinh(eps);
    const double den = 2.0 * (sh * sh + sx * sx);
    const double r2 = x * x + eps * eps;
    return {std::sin(2.0 * x) / den - x / r2, std::sinh(2.0 * eps) / den - eps / r2};
}

std::vector<double> cot_poles(double lo, double hi, double d) {
    std::vector<double> poles;
    const double step = kPi / d;
    for (long n = std::max(1L, static_cast<long>(std::floor(lo / step))); n * step < hi; ++n) {
        const double u = n * step;
        if (u > lo) poles.push_back(u);
    }
    return poles;
}

double mode_sum(const std::function<double(double)>& g, double d, double q0) {
    const double step = kPi / d;
    double sum = 0.0;
    for (long n = 1; n * step < q0; ++n) sum += g(n * step);
    return step * sum;
}

namespace {

// Neville evaluation at eps = 0 of the interpolating polynomial through (x[i], y[i]).
double neville_at_zero(const double* x, const double* y, int n) {
    std::vector<double> p(y, y + n);
    for (int m = 1; m < n; ++m)
        for (int i = 0; i + m < n; ++i) p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
    return p[0];
}

}  // namespace

namespace {

// Im[cot(x - i eps) - 1/(x - i eps)] with the eps-dependent factors precomputed.
struct ImCotKernel {
    double eps, sh2, two_sh_sq;
    explicit ImCotKernel(double e) : eps(e), sh2(std::sinh(2.0 * e)), two_sh_sq(2.0 * std::sinh(e) * std::sinh(e)) {}
    double operator()(double x) const {
        if (x * x + eps * eps < 0.0625) return cot_minus_inverse(x, eps).imag();
        const double sx = std::sin(x);
        return sh2 / (two_sh_sq + 2.0 * sx * sx) - eps / (x * x + eps * eps);
    }
};

void check_window(const CotIntegrand& f, double d) {
    if (!(d > 0)) throw DomainError(fmt::format("cavity length must be > 0 (got {})", d));
    if (!(f.lo < f.hi) || f.lo < 0) throw DomainError(fmt::format("invalid integration window [{}, {}]", f.lo, f.hi));
    for (double endpoint : {f.lo, f.hi}) {
        const double phase = endpoint * d;
        if (phase > 0.5 * kPi && distance_to_pole(phase) < 1e-9)
            throw ResonanceError(fmt::format("pole of cot(u d) at integration endpoint u = {} (u d = {})", endpoint, phase));
    }
}

RegularizedResult extrapolate(const EpsilonSchedule& schedule, std::vector<double> estimates, double quad_err,
                              double quad_tol, int poles) {
    RegularizedResult out;
    out.poles = poles;
    const int n_eps = static_cast<int>(estimates.size());
    const int order = schedule.extrapolation_order;
    const int windows = n_eps - order;
    std::vector<double> extrap(windows);
    for (int w = 0; w < windows; ++w)
        extrap[w] = neville_at_zero(schedule.eps_list.data() + w, estimates.data() + w, order + 1);

    const double scale = std::max(std::abs(extrap.back()), quad_err);
    const double noise = std::max(1e-9, 1e3 * quad_tol) * scale;
    const double last_diff = std::abs(extrap[windows - 1] - extrap[windows - 2]);
    if (windows >= 3) {
        const double prev_diff = std::abs(extrap[windows - 2] - extrap[windows - 3]);
        if (last_diff > prev_diff && last_diff > noise)
            throw ConvergenceError(fmt::format("epsilon extrapolation not contracting ({:.3e} after {:.3e})",
                                               last_diff, prev_diff));
    }
    if (last_diff > 1e-6 * scale)
        throw ConvergenceError(fmt::format("epsilon extrapolation unstable: successive estimates differ by {:.3e}",
                                           last_diff));
    out.value = extrap.back();
    out.err_est = last_diff + 16.0 * quad_err;
    out.estimates = std::move(estimates);
    return out;
}

// Integrates up to two cot integrands sharing a window at once: the first in
// the real part of the quadrature, the second in the imaginary part.
std::pair<RegularizedResult, RegularizedResult> regularized_impl(const CotIntegrand& a, const CotIntegrand* b,
                                                                 double d, const EpsilonSchedule& schedule,
                                                                 double quad_tol) {
    schedule.validate();
    check_window(a, d);
    const std::vector<double> poles = cot_poles(a.lo, a.hi, d);
    const int n_eps = static_cast<int>(schedule.eps_list.size());
    if (poles.empty()) {
        // The integrand is analytic in a strip around the real window, so the eps -> 0 limit of Im is exactly 0.
        RegularizedResult zero;
        zero.estimates.assign(n_eps, 0.0);
        return {zero, zero};
    }

    std::vector<double> est_a(n_eps), est_b(n_eps), errs(n_eps);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n_eps; ++k) {
        const ImCotKernel kernel(schedule.eps_list[k]);
        Integrand in;
        in.lo = a.lo;
        in.hi = a.hi;
        in.known_poles = poles;
        // For real u the regular part h is real and drops out of the imaginary part.
        in.evaluator = [&a, b, d, &kernel](double u) {
            const double im_cot = kernel(u * d);
            const double va = a.cot_coefficient(u) * im_cot;
            return cplx(va, b ? b->cot_coefficient(u) * im_cot : 0.0);
        };
        try {
            const QuadResult r = integrate(in, quad_tol);
            est_a[k] = r.value.real();
            est_b[k] = r.value.imag();
            errs[k] = r.err_est;
        } catch (...) {
#pragma omp critical(vacrad_im_regularized)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    const double quad_err = *std::max_element(errs.begin(), errs.end());
    const int n_poles = static_cast<int>(poles.size());
    RegularizedResult ra = extrapolate(schedule, std::move(est_a), quad_err, quad_tol, n_poles);
    RegularizedResult rb = b ? extrapolate(schedule, std::move(est_b), quad_err, quad_tol, n_poles) : RegularizedResult{};
    return {std::move(ra), std::move(rb)};
}

}  // namespace

RegularizedResult im_regularized(const CotIntegrand& f, double d, const EpsilonSchedule& schedule, double quad_tol) {
    return regularized_impl(f, nullptr, d, schedule, quad_tol).first;
}

std::pair<RegularizedResult, RegularizedResult> im_regularized_pair(const CotIntegrand& f1, const CotIntegrand& f2,
                                                                    double d, const EpsilonSchedule& schedule,
                                                                    double quad_tol) {
    if (f1.lo != f2.lo || f1.hi != f2.hi) throw DomainError("paired cot integrands must share the integration window");
    return regularized_impl(f1, &f2, d, schedule, quad_tol);
}

std::pair<RegularizedResult, RegularizedResult> im_regularized_pair(const CotIntegrand& f1, const CotIntegrand& f2,
                                                                    double d) {
    check_window(f1, d);
    return im_regularized_pair(f1, f2, d, EpsilonSchedule::for_phase_window(f1.lo * d, f1.hi * d));
}

RegularizedResult im_regularized(const CotIntegrand& f, double d) {
    check_window(f, d);
    return im_regularized(f, d, EpsilonSchedule::for_phase_window(f.lo * d, f.hi * d));
}

}  // namespace vacrad
