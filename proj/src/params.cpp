#include "vacrad/params.hpp"

#include "vacrad/errors.hpp"

#include <fmt/format.h>

namespace vacrad {

void AtomConfig::validate() const {
    if (!(omega0 > 0)) throw DomainError(fmt::format("omega0 must be > 0 (got {})", omega0));
    if (!(dipole_sq_total >= 0) || !(dipole_sq_perp >= 0) || !(dipole_sq_par >= 0))
        throw DomainError("dipole magnitudes must be >= 0");
    if (!(hbar > 0)) throw DomainError(fmt::format("hbar must be > 0 (got {})", hbar));
    if (!(c > 0)) throw DomainError(fmt::format("c must be > 0 (got {})", c));
}

void validate(const AtomConfig& atom, const MotionConfig& motion, const MotionLimits& limits) {
    atom.validate();
    if (!(motion.amplitude_a >= 0)) throw DomainError(fmt::format("amplitude a must be >= 0 (got {})", motion.amplitude_a));
    if (!(motion.offset_b > motion.amplitude_a))
        throw DomainError(fmt::format("offset b = {} must exceed amplitude a = {}", motion.offset_b, motion.amplitude_a));
    if (!(motion.omega_cm > 0)) throw DomainError(fmt::format("oscillation frequency must be > 0 (got {})", motion.omega_cm));
    const double beta = motion.v_max() / atom.c;
    if (!(beta < limits.max_beta))
        throw DomainError(fmt::format("v_max/c = {} exceeds the non-relativistic ceiling {}", beta, limits.max_beta));
}

void validate(const AtomConfig& atom, const MotionConfig& motion, const GeometryConfig& geom, const MotionLimits& limits) {
    validate(atom, motion, limits);
    if (geom.kind == GeometryKind::Cavity && !(geom.plate_gap_d > motion.offset_b + motion.amplitude_a))
        throw DomainError(fmt::format("plate gap d = {} must exceed b + a = {}", geom.plate_gap_d,
                                      motion.offset_b + motion.amplitude_a));
}

DimensionlessGroups groups(const AtomConfig& atom, const MotionConfig& motion, const GeometryConfig& geom) {
    DimensionlessGroups g;
    const double c = atom.c;
    const double w0 = atom.omega0;
    const double wm = motion.omega_cm;
    g.q0 = (wm - w0) / c;
    g.k0 = w0 / c;
    g.q1 = (w0 + wm) / c;
    g.q2 = (w0 - wm) / c;
    g.q2_negative = g.q2 < 0;
    g.r = w0 / wm;
    g.x = 2.0 * g.k0 * motion.offset_b;
    g.beta = motion.v_max() / c;
    g.xi = w0 / wm;
    g.sigma = 1.0 + 1.0 / g.xi;
    g.delta = 1.0 - 1.0 / g.xi;
    g.bq0 = motion.offset_b * g.q0;
    if (geom.kind == GeometryKind::Cavity) {
        g.beta_over = motion.offset_b / geom.plate_gap_d;
        g.q0d = g.q0 * geom.plate_gap_d;
    }
    return g;
}

double gamma0(const AtomConfig& atom, double dipole_sq) {
    const double k0 = atom.omega0 / atom.c;
    return 4.0 * dipole_sq * atom.omega0 * k0 * k0 / (3.0 * atom.hbar * atom.c);
}

double gamma0(const AtomConfig& atom) { return gamma0(atom, atom.dipole_sq_total); }

double gamma1_over_gamma0(double omega_ratio, double beta) {
    if (!(omega_ratio >= 1.0))
        throw DomainError(fmt::format("emission requires omega_cm >= omega0 (omega_cm/omega0 = {})", omega_ratio));
    const double r = 1.0 / omega_ratio;
    const double wm1 = omega_ratio - 1.0;
    return beta * beta * (1.0 + r * r) * wm1 * wm1 * wm1 / 12.0;
}

double gamma1(const AtomConfig& atom, const MotionConfig& motion) {
    const double beta = motion.v_max() / atom.c;
    return gamma0(atom) * gamma1_over_gamma0(motion.omega_cm / atom.omega0, beta);
}

}  // namespace vacrad
