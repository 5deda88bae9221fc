#include "vacrad/decay.hpp"

#include "vacrad/errors.hpp"
#include "vacrad/quad.hpp"

#include <fmt/format.h>

#include <cmath>

namespace vacrad {

namespace {

// int_0^1 t^p cos(y t) dt by Taylor series; used for |y| <= 1.
double cms(double y, int p) {
    const double y2 = y * y;
    double term = 1.0, sum = 0.0;
    for (int j = 0; j < 30; ++j) {
        const double add = term / (2 * j + p + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
        term *= -y2 / ((2 * j + 1) * (2 * j + 2));
    }
    return sum;
}

void check_point(const DecayPoint& p) {
    if (!(p.xi > 1.0))
        throw DomainError(fmt::format("decay rates require Omega < omega0, i.e. xi > 1 (got xi = {})", p.xi));
    if (!(p.x > 0.0)) throw DomainError(fmt::format("x = 2 k0 b must be > 0 (got {})", p.x));
    if (!(p.beta >= 0.0)) throw DomainError(fmt::format("v_max/c must be >= 0 (got {})", p.beta));
}

double pow5(double v) { return v * v * v * v * v; }

// Moment form of the perpendicular correction, used below kMotionSeriesThreshold.
double perp_motion_series(double xi, double x) {
    const double s = 1 + 1 / xi, D = 1 - 1 / xi;
    auto diff = [](double y) { return cms(y, 2) - cms(y, 4); };
    const double sum = pow5(s) * (2.0 / 15 - diff(x * s)) + pow5(D) * (2.0 / 15 - diff(x * D));
    return xi * xi * 0.75 * (0.5 * sum - 2.0 / 15 - diff(x));
}

double par_motion_series(double xi, double x) {
    const double s = 1 + 1 / xi, D = 1 - 1 / xi;
    auto plus = [](double y) { return cms(y, 2) + cms(y, 4); };
    auto diff = [](double y) { return cms(y, 2) - cms(y, 4); };
    auto inv_q2 = [x](double q) { return q * q * q / 4 * (16.0 / 15 + cms(x * q, 0) - 3 * cms(x * q, 2)); };
    const double a2 = 0.25 * (pow5(s) * (8.0 / 15 + plus(x * s)) + pow5(D) * (8.0 / 15 + plus(x * D))) -
                      0.5 * (8.0 / 15 - plus(x));
    const double cross = xi * std::pow(s, 4) / 2 * (2.0 / 15 + diff(x * s)) - xi * std::pow(D, 4) / 2 * (2.0 / 15 + diff(x * D));
    return 0.75 * (xi * xi * a2 + inv_q2(s) + inv_q2(D) + cross);
}

}  // namespace

void DecayConfig::validate() const {
    atom.validate();
    if (!(motion.amplitude_a >= 0)) throw DomainError("amplitude a must be >= 0");
    if (!(motion.offset_b > motion.amplitude_a)) throw DomainError("offset b must exceed amplitude a");
    if (!(motion.omega_cm > 0)) throw DomainError("oscillation frequency Omega must be > 0");
    if (!(beta() < 0.1)) throw DomainError(fmt::format("v_max/c = {} exceeds the non-relativistic ceiling 0.1", beta()));
    if (!(xi() > 1.0))
        throw DomainError(fmt::format("Omega >= omega0 (xi = {}) gives q2 < 0; the decay integrals are undefined there", xi()));
}

double static_perp_bracket(double x) {
    if (x <= kStaticSeriesThreshold) return 1.0 + 1.5 * (cms(x, 0) - cms(x, 2));
    return 1.0 - 3.0 * (std::cos(x) / (x * x) - std::sin(x) / (x * x * x));
}

double static_par_bracket(double x) {
    if (x <= kStaticSeriesThreshold) return 1.0 - 0.75 * (cms(x, 0) + cms(x, 2));
    return 1.0 - 1.5 * (std::sin(x) / x - std::sin(x) / (x * x * x) + std::cos(x) / (x * x));
}

double perp_motion_coefficient(double xi, double x) {
    if (x < kMotionSeriesThreshold) return perp_motion_series(xi, x);
    const double s = 1 + 1 / xi, D = 1 - 1 / xi;
    const double x2 = x * x, x5 = pow5(x);
    auto block = [x, x2](double q) {
        return 0.25 * pow5(q) * pow5(x) + 15 * q * x * (-3 + 0.25 * x2 * q * q) * std::cos(q * x) +
               15 * (3 - 1.25 * x2 * q * q) * std::sin(x * q);
    };
    const double bracket = block(D) + block(s) - 0.5 * x5 + 30 * x * (-3 + 0.25 * x2) * std::cos(x) -
                           30 * (-3 + 1.25 * x2) * std::sin(x);
    return xi * xi / (5 * x5) * bracket;
}

double par_motion_coefficient(double xi, double x, ParallelFormula form) {
    if (x < kMotionSeriesThreshold && form == ParallelFormula::Corrected) return par_motion_series(xi, x);
    const double s = 1 + 1 / xi, D = 1 - 1 / xi;
    const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
    const double static_sin = form == ParallelFormula::Corrected ? 3 - 1.75 * x2 + 0.25 * x4 : 3 - x2;
    auto per_q = [](double y) {
        return pow5(y) + 15 * y * std::cos(y) * (-3 + 0.75 * y * y) +
               15 * (3 - 1.75 * y * y + 0.25 * y * y * y * y) * std::sin(y);
    };
    auto inv_q2 = [](double y) {
        return pow5(y) / 30 + y * y / 16 * (-3 * y * std::cos(y) + (3 - y * y) * std::sin(y));
    };
    auto cross = [](double y) {
        return 0.25 * pow5(y) - 15 * y * (-3 + 0.25 * y * y) * std::cos(y) - 15 * (3 - 1.25 * y * y) * std::sin(y);
    };
    const double xD = x * D, xs = x * s;
    const double t = xi * xi * (-pow5(x) / 30 + 0.5 * (std::cos(x) * (-3 * x + 0.75 * x3) + std::sin(x) * static_sin) +
                                (per_q(xD) + per_q(xs)) / 60) +
                     inv_q2(xD) / (D * D) + inv_q2(xs) / (s * s) - xi / (30 * D) * cross(xD) + xi / (30 * s) * cross(xs);
    return 6.0 / pow5(x) * t;
}

double decay_perp_ratio(const DecayPoint& p) {
    check_point(p);
    const double base = static_perp_bracket(p.x);
    if (p.beta == 0.0) return base;
    return base + p.beta * p.beta * perp_motion_coefficient(p.xi, p.x);
}

double decay_par_ratio(const DecayPoint& p, ParallelFormula form) {
    check_point(p);
    const double base = static_par_bracket(p.x);
    if (p.beta == 0.0) return base;
    return base + p.beta * p.beta * par_motion_coefficient(p.xi, p.x, form);
}

double decay_perp_asymptote(const DecayPoint& p) {
    const double s = 1 + 1 / p.xi, D = 1 - 1 / p.xi;
    return 1.0 + p.beta * p.beta * p.xi * p.xi / 20.0 * (pow5(D) + pow5(s) - 2.0);
}

double decay_par_asymptote(const DecayPoint& p) {
    const double s = 1 + 1 / p.xi, D = 1 - 1 / p.xi;
    return 1.0 + 6.0 * p.beta * p.beta *
                     (p.xi * p.xi * (pow5(D) + pow5(s) - 2.0) / 60.0 + (D * D * D + s * s * s) / 30.0 +
                      p.xi * (std::pow(s, 4) - std::pow(D, 4)) / 120.0);
}

namespace {

// Direct quadrature of the nine mode integrals, with hbar = c = omega0 = 1, so
// k0 = 1, q1 = sigma, q2 = Delta, a = beta xi and Gamma_0 = 4|d|^2/3.
DecayRates oracle_dimensionless(const DecayPoint& p, double tol) {
    const double xi = p.xi, beta = p.beta, b = 0.5 * p.x;
    const double a = beta * xi;
    const double q1 = 1 + 1 / xi, q2 = 1 - 1 / xi;
    QuadOptions opts;
    opts.rel_tol = tol;
    auto integral = [&](double hi, auto&& f) {
        QuadOptions o = opts;
        o.initial_pieces = std::max(1, static_cast<int>(std::ceil(2.0 * b * hi / 3.0)));
        Integrand in{[&f](double u) { return cplx(f(u)); }, 0.0, hi, {}};
        return integrate(in, o).value.real();
    };
    auto cosb = [b](double u) { return std::cos(2 * u * b); };

    double perp = integral(1.0, [&](double u) { return 2 * (1 - u * u) * (1 + cosb(u)); });
    double par = integral(1.0, [&](double u) { return (1 + u * u) * (1 - cosb(u)); });
    if (beta > 0.0) {
        for (double q : {q1, q2}) {
            perp += integral(q, [&](double u) { return a * a / 2 * (1 - cosb(u)) * u * u * (q * q - u * u); });
            par += integral(q, [&](double u) { return a * a / 4 * (1 + cosb(u)) * u * u * (q * q + u * u); });
            par += integral(q, [&](double u) {
                const double qq = q * q, uu = u * u, w = (qq - uu) * (qq - uu);
                return beta * beta / (4 * qq) * ((w + uu * uu + qq * uu) + cosb(u) * (w - uu * uu - qq * uu));
            });
        }
        perp -= integral(1.0, [&](double u) { return a * a * (1 + cosb(u)) * u * u * (1 - u * u); });
        par -= integral(1.0, [&](double u) { return a * a / 2 * (1 - cosb(u)) * u * u * (1 + u * u); });
        par += integral(q1, [&](double u) { return beta / 2 * a / q1 * u * u * (q1 * q1 - u * u) * (cosb(u) + 1); });
        par -= integral(q2, [&](double u) { return beta / 2 * a / q2 * u * u * (q2 * q2 - u * u) * (cosb(u) + 1); });
    }
    return {perp * 0.75, par * 0.75};
}

}  // namespace

DecayRates decay_oracle_ratios(const DecayPoint& p, double tol) {
    check_point(p);
    return oracle_dimensionless(p, tol);
}

double decay_static(const DecayConfig& cfg) {
    cfg.validate();
    const double x = cfg.x();
    return gamma0(cfg.atom, cfg.atom.dipole_sq_perp) * static_perp_bracket(x) +
           gamma0(cfg.atom, cfg.atom.dipole_sq_par) * static_par_bracket(x);
}

double decay_perp_ratio(const DecayConfig& cfg) {
    cfg.validate();
    return decay_perp_ratio(cfg.point());
}

double decay_par_ratio(const DecayConfig& cfg, ParallelFormula form) {
    cfg.validate();
    return decay_par_ratio(cfg.point(), form);
}

DecayRates decay_oracle(const DecayConfig& cfg, double tol) {
    cfg.validate();
    // Integrals over u in [0, omega0/c], [0, q1], [0, q2] with CGS prefactors.
    const AtomConfig& at = cfg.atom;
    const double k0 = at.omega0 / at.c;
    const double q1 = (at.omega0 + cfg.motion.omega_cm) / at.c;
    const double q2 = (at.omega0 - cfg.motion.omega_cm) / at.c;
    const double b = cfg.motion.offset_b;
    const double a = cfg.motion.amplitude_a;
    const double vc = cfg.beta();
    const double dp = at.dipole_sq_perp / at.hbar;
    const double dl = at.dipole_sq_par / at.hbar;

    auto integral = [&](double hi, auto&& f) {
        QuadOptions o;
        o.rel_tol = tol;
        o.initial_pieces = std::max(1, static_cast<int>(std::ceil(2.0 * b * hi / 3.0)));
        Integrand in{[&f](double u) { return cplx(f(u)); }, 0.0, hi, {}};
        return integrate(in, o).value.real();
    };
    auto cosb = [b](double u) { return std::cos(2 * u * b); };
    const double k02 = k0 * k0;

    double perp = integral(k0, [&](double u) { return 2 * dp * (k02 - u * u) * (1 + cosb(u)); });
    double par = integral(k0, [&](double u) { return dl * (k02 + u * u) * (1 - cosb(u)); });
    if (a > 0.0) {
        for (double q : {q1, q2}) {
            perp += integral(q, [&](double u) { return dp * a * a / 2 * (1 - cosb(u)) * u * u * (q * q - u * u); });
            par += integral(q, [&](double u) { return dl * a * a / 4 * (1 + cosb(u)) * u * u * (q * q + u * u); });
            par += integral(q, [&](double u) {
                const double qq = q * q, uu = u * u, w = (qq - uu) * (qq - uu);
                return dl * vc * vc / (4 * qq) * ((w + uu * uu + qq * uu) + cosb(u) * (w - uu * uu - qq * uu));
            });
        }
        perp -= integral(k0, [&](double u) { return dp * a * a * (1 + cosb(u)) * u * u * (k02 - u * u); });
        par -= integral(k0, [&](double u) { return dl * a * a / 2 * (1 - cosb(u)) * u * u * (k02 + u * u); });
        par += integral(q1, [&](double u) { return dl * vc / 2 * a / q1 * u * u * (q1 * q1 - u * u) * (cosb(u) + 1); });
        par -= integral(q2, [&](double u) { return dl * vc / 2 * a / q2 * u * u * (q2 * q2 - u * u) * (cosb(u) + 1); });
    }
    return {perp, par};
}

}  // namespace vacrad
