#include "vacrad/halfspace.hpp"

#include "vacrad/errors.hpp"
#include "vacrad/quad.hpp"

#include <fmt/format.h>

#include <cmath>

namespace vacrad {

namespace {

void check_point(const HalfspacePoint& p) {
    if (!(p.omega_ratio >= 1.0))
        throw DomainError(fmt::format("emission requires omega_cm >= omega0 (omega_cm/omega0 = {})", p.omega_ratio));
    if (!(p.bq0 >= 0.0)) throw DomainError(fmt::format("b q0 must be >= 0 (got {})", p.bq0));
    if (!(p.beta >= 0.0)) throw DomainError(fmt::format("v_max/c must be >= 0 (got {})", p.beta));
}

// sum_j (-1)^j k^{2j} / ((2j)! (2j + p + 1)) = int_0^1 t^p cos(k t) dt
double cos_moment_series(double k, int p) {
    const double k2 = k * k;
    double term = 1.0;
    double sum = 0.0;
    for (int j = 0; j < 12; ++j) {
        sum += term / (2 * j + p + 1);
        term *= -k2 / ((2 * j + 1) * (2 * j + 2));
    }
    return sum;
}

}  // namespace

double halfspace_osc_ee(double B) {
    if (B < kHalfspaceSeriesThreshold) return cos_moment_series(2.0 * B, 4);
    const double B2 = B * B;
    return std::sin(2 * B) * (0.75 / (B2 * B2 * B) - 1.5 / (B2 * B) + 0.5 / B) +
           std::cos(2 * B) * (-1.5 / (B2 * B2) + 1.0 / B2);
}

double halfspace_osc_bb(double B) {
    if (B < kHalfspaceSeriesThreshold) return -0.5 * (cos_moment_series(2.0 * B, 2) + cos_moment_series(2.0 * B, 4));
    const double B2 = B * B;
    return std::cos(2 * B) * (-0.75 / B2 + 0.75 / (B2 * B2)) +
           std::sin(2 * B) * (0.875 / (B2 * B) - 0.5 / B - 0.375 / (B2 * B2 * B));
}

RateBreakdown halfspace_components(const HalfspacePoint& p) {
    check_point(p);
    const double r = 1.0 / p.omega_ratio;
    const double wm1 = p.omega_ratio - 1.0;
    const double K = p.beta * p.beta * wm1 * wm1 * wm1;
    const double osc_ee = halfspace_osc_ee(p.bq0);
    const double osc_bb = halfspace_osc_bb(p.bq0);

    RateBreakdown out;
    out.eb = K / 6.0 * (r - 1.0);
    out.ee = K / 4.0 * (1.0 - r) * (1.0 - r) * (1.0 / 3.0 + osc_ee);
    out.bb = K / 4.0 * (2.0 / 3.0 + osc_bb);
    out.total = out.eb + out.ee + out.bb;
    out.gamma0 = 1.0;
    out.gamma1 = gamma1_over_gamma0(p.omega_ratio, p.beta);
    const double A = (1.0 - r) * (1.0 - r) / (1.0 + r * r);
    const double Bc = 1.0 / (1.0 + r * r);
    out.ratio_total_over_gamma1 = 1.0 + 3.0 * A * osc_ee + 3.0 * Bc * osc_bb;
    out.series_path_used = p.bq0 < kHalfspaceSeriesThreshold;
    return out;
}

double halfspace_total_ratio(const HalfspacePoint& p) { return halfspace_components(p).ratio_total_over_gamma1; }

namespace {

RateBreakdown oracle_cgs(const AtomConfig& atom, const MotionConfig& motion, double tol) {
    const double w0 = atom.omega0;
    const double wm = motion.omega_cm;
    const double q0 = (wm - w0) / atom.c;
    const double b = motion.offset_b;
    const double beta2 = std::pow(motion.v_max() / atom.c, 2);
    const double d2h = atom.dipole_sq_total / atom.hbar;

    RateBreakdown out;
    out.gamma0 = gamma0(atom);
    out.gamma1 = gamma1(atom, motion);
    if (q0 > 0) {
        QuadOptions opts;
        opts.rel_tol = tol;
        opts.initial_pieces = std::max(1, static_cast<int>(std::ceil(2.0 * b * q0 / 3.0)));
        const double q02 = q0 * q0;
        const cplx I(0.0, 1.0);

        Integrand eb{[](double u) { return cplx(u * u); }, 0.0, q0, {}};
        Integrand ee{[&](double u) { return std::pow(u, 4) / q02 * std::exp(2.0 * I * u * b); }, 0.0, q0, {}};
        Integrand bb{[&](double u) { return (q02 + u * u) * (1.0 - std::exp(2.0 * I * u * b) * u * u / q02); }, 0.0,
                     q0, {}};

        out.eb = 2.0 * d2h / 3.0 * beta2 * (w0 - wm) / wm * integrate(eb, opts).value.real();
        out.ee = d2h / 3.0 * beta2 * std::pow((wm - w0) / wm, 2) *
                 (q0 * q02 / 3.0 + integrate(ee, opts).value.real());
        out.bb = d2h / 6.0 * beta2 * integrate(bb, opts).value.real();
    }
    out.total = out.eb + out.ee + out.bb;
    out.ratio_total_over_gamma1 = out.gamma1 > 0 ? out.total / out.gamma1 : 0.0;
    return out;
}

}  // namespace

RateBreakdown halfspace_oracle(const HalfspacePoint& p, double tol) {
    check_point(p);
    // Unit system hbar = c = omega0 = 1 with |d|^2 = 3/4, so that Gamma_0 = 1.
    AtomConfig atom;
    atom.omega0 = 1.0;
    atom.hbar = 1.0;
    atom.c = 1.0;
    atom.dipole_sq_total = 0.75;
    MotionConfig motion;
    motion.omega_cm = p.omega_ratio;
    motion.amplitude_a = p.beta / p.omega_ratio;
    const double q0 = p.omega_ratio - 1.0;
    motion.offset_b = q0 > 0 ? p.bq0 / q0 : 1.0;
    return oracle_cgs(atom, motion, tol);
}

HalfspacePoint halfspace_point(const AtomConfig& atom, const MotionConfig& motion) {
    const double q0 = (motion.omega_cm - atom.omega0) / atom.c;
    return {motion.omega_cm / atom.omega0, motion.v_max() / atom.c, motion.offset_b * q0};
}

RateBreakdown halfspace_components(const AtomConfig& atom, const MotionConfig& motion) {
    validate(atom, motion);
    return halfspace_components(halfspace_point(atom, motion)).scaled(gamma0(atom));
}

double halfspace_total_ratio(const AtomConfig& atom, const MotionConfig& motion) {
    validate(atom, motion);
    return halfspace_total_ratio(halfspace_point(atom, motion));
}

RateBreakdown halfspace_oracle(const AtomConfig& atom, const MotionConfig& motion, double tol) {
    validate(atom, motion);
    check_point(halfspace_point(atom, motion));
    return oracle_cgs(atom, motion, tol);
}

}  // namespace vacrad
