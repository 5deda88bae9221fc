#include "vacrad/specfun.hpp"

#include "vacrad/errors.hpp"
#include "vacrad/quad.hpp"

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace vacrad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;

double reduce_phase(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0) t += kTwoPi;
    const double snap = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(theta));
    if (t < snap || kTwoPi - t < snap) t = 0.0;
    return t;
}

// B_{2k}/(2k+1)! for k = 1..15
constexpr std::array<double, 15> kBernoulliCoef = {
    1.0 / 6.0 / 6.0,
    -1.0 / 30.0 / 120.0,
    1.0 / 42.0 / 5040.0,
    -1.0 / 30.0 / 362880.0,
    5.0 / 66.0 / 39916800.0,
    -691.0 / 2730.0 / 6227020800.0,
    7.0 / 6.0 / 1307674368000.0,
    -3617.0 / 510.0 / 355687428096000.0,
    43867.0 / 798.0 / 121645100408832000.0,
    -174611.0 / 330.0 / 51090942171709440000.0,
    854513.0 / 138.0 / 25852016738884976640000.0,
    -236364091.0 / 2730.0 / 15511210043330985984000000.0,
    8553103.0 / 6.0 / 10888869450418352160768000000.0,
    -23749461029.0 / 870.0 / 8841761993739701954543616000000.0,
    8615841276005.0 / 14322.0 / 8222838654177922817725562880000000.0,
};

// Li_2 via the Bernoulli series in u = -log(1 - z); requires |z| <= 1 and Re z <= 1/2.
cplx dilog_bernoulli(cplx z) {
    const cplx u = -std::log(1.0 - z);
    const cplx u2 = u * u;
    cplx sum = 0.0;
    for (int k = static_cast<int>(kBernoulliCoef.size()) - 1; k >= 0; --k) sum = sum * u2 + kBernoulliCoef[k];
    return u - 0.25 * u2 + u * u2 * sum;
}

cplx ipow_inv(double a, int s) {
    double p = 1.0;
    for (int i = 0; i < s; ++i) p *= a;
    return 1.0 / p;
}

void check_lerch_args(cplx z, int s, double a) {
    if (s < 1 || s > 5) throw DomainError(fmt::format("Lerch Phi order s = {} outside the supported range 1..5", s));
    if (!std::isfinite(a)) throw DomainError("Lerch Phi parameter a must be finite");
    if (a <= 0 && a == std::round(a)) throw DomainError(fmt::format("Lerch Phi pole at a = {}", a));
    if (!(std::abs(z) <= 1.0 + 1e-12)) throw DomainError(fmt::format("Lerch Phi requires |z| <= 1 (|z| = {})", std::abs(z)));
}

// (s-1)!^-1 int_0^inf t^{s-1} e^{-A t} / (1 - z e^{-t}) dt for A >= 1.
cplx lerch_integral(cplx z, int s, double A) {
    double fact = 1.0;
    for (int k = 2; k < s; ++k) fact *= k;

    // Truncate at T where the certified tail bound
    //   (1 - e^{-T})^{-1} e^{-A T} sum_{k<s} (A T)^k / k! / A^s
    // drops below 1e-18 A^{-s}.
    double T = 1.0;
    for (;; T += 0.5) {
        double term = 1.0, poly = 0.0;
        for (int k = 0; k < s; ++k) {
            poly += term;
            term *= A * T / (k + 1);
        }
        const double bound = std::exp(-A * T) * poly / (-std::expm1(-T));
        if (bound < 1e-18) break;
    }

    Integrand in;
    in.lo = 0.0;
    in.hi = T;
    const cplx one_minus_z = 1.0 - z;
    in.evaluator = [z, s, A, one_minus_z](double t) {
        double tp = 1.0;
        for (int k = 1; k < s; ++k) tp *= t;
        // 1 - z e^{-t} = (1 - z) - z expm1(-t), accurate for z near 1 and small t.
        return tp * std::exp(-A * t) / (one_minus_z - z * std::expm1(-t));
    };
    // The denominator has a near-zero at t ~ |arg z| when z is close to 1.
    const double theta = std::abs(std::arg(z));
    for (double bp = theta; bp > 0 && bp < std::min(1.0, T); bp *= 4.0) in.known_poles.push_back(bp);
    QuadOptions opts;
    opts.rel_tol = 1e-13;
    opts.max_subdivisions = 5000;
    const QuadResult r = integrate(in, opts);
    return r.value / fact;
}

}  // namespace

UnitCirclePoint::UnitCirclePoint(double theta) : theta_(reduce_phase(theta)) {
    if (!std::isfinite(theta)) throw DomainError("unit-circle phase must be finite");
}

cplx UnitCirclePoint::z() const {
    if (theta_ == 0.0) return 1.0;
    return {std::cos(theta_), std::sin(theta_)};
}

cplx dilog(cplx z) {
    if (z == 0.0) return 0.0;
    if (z == 1.0) return kZeta2;
    if (z == -1.0) return -0.5 * kZeta2;
    if (std::abs(z) > 1.0) {
        const cplx l = std::log(-z);
        return -dilog(1.0 / z) - kZeta2 - 0.5 * l * l;
    }
    if (z.real() > 0.5) return kZeta2 - std::log(z) * std::log(1.0 - z) - dilog_bernoulli(1.0 - z);
    return dilog_bernoulli(z);
}

cplx lerch_phi(cplx z, int s, double a) {
    check_lerch_args(z, s, a);
    if (z == 0.0) return ipow_inv(a, s);
    const double az = std::abs(z);
    const bool at_one = std::abs(z - 1.0) < 1e-15;
    if (at_one && s == 1) throw DomainError("Lerch Phi(1, 1, a) diverges");

    if (az <= 0.5) {
        // Direct series; for n + a >= 1 the tail after N terms is bounded by |z|^N / ((N + a)^s (1 - |z|)).
        cplx sum = 0.0;
        cplx zn = 1.0;
        for (int n = 0; n < 10000; ++n) {
            const double base = n + a;
            sum += zn * ipow_inv(base, s);
            zn *= z;
            const double next = n + 1 + a;
            if (next >= 1.0) {
                const double tail = std::abs(zn) * ipow_inv(next, s).real() / (1.0 - az);
                if (tail <= 1e-17 * std::abs(sum)) return sum;
            }
        }
        throw ConvergenceError("Lerch Phi series did not meet its tail bound");
    }

    // Shift a up to A >= 8 so the integral representation is well conditioned:
    // Phi(z, s, a) = sum_{n<M} z^n/(n + a)^s + z^M Phi(z, s, a + M).
    const int shift = a < 8.0 ? static_cast<int>(std::ceil(8.0 - a)) : 0;
    cplx head = 0.0;
    cplx zn = 1.0;
    for (int n = 0; n < shift; ++n) {
        head += zn * ipow_inv(n + a, s);
        zn *= z;
    }
    return head + zn * lerch_integral(at_one ? cplx(1.0) : z, s, a + shift);
}

cplx lerch_phi(const UnitCirclePoint& z, int s, double a) {
    if (z.on_branch_point() && s == 1) throw DomainError("Lerch Phi(z, 1, a) diverges at z = 1");
    return lerch_phi(z.z(), s, a);
}

cplx hyp2f1_reduced(double beta, cplx z) {
    if (beta == 0.0) return 1.0;
    if (std::abs(z - 1.0) < 1e-15) throw DomainError("2F1(1, beta; 1 + beta; z) diverges at z = 1");
    return beta * lerch_phi(z, 1, beta);
}

cplx hyp2f1_reduced(double beta, const UnitCirclePoint& z) {
    if (z.on_branch_point()) throw DomainError("2F1(1, beta; 1 + beta; z) diverges at z = 1");
    return hyp2f1_reduced(beta, z.z());
}

double arg_one_minus_exp(double theta) {
    const double t = reduce_phase(theta);
    if (t == 0.0) throw DomainError(fmt::format("Arg(1 - exp(-i theta)) at the branch point theta = {}", theta));
    return 0.5 * (kPi - t);
}

}  // namespace vacrad
