#pragma once

#include <cmath>
#include <limits>

namespace vacrad {

namespace cgs {
inline constexpr double hbar = 1.054571817e-27;  // erg s
inline constexpr double c = 2.99792458e10;       // cm/s
}  // namespace cgs

struct AtomConfig {
    double omega0 = 1.0;           // rad/s
    double dipole_sq_total = 0.0;  // |<e|d|g>|^2, esu^2 cm^2
    double dipole_sq_perp = 0.0;
    double dipole_sq_par = 0.0;
    double hbar = cgs::hbar;
    double c = cgs::c;

    void validate() const;
};

struct MotionConfig {
    double amplitude_a = 0.0;  // cm
    double offset_b = 1.0;     // cm
    double omega_cm = 1.0;     // rad/s; plays the role of Omega for decay rates

    double v_max() const { return amplitude_a * omega_cm; }
};

struct MotionLimits {
    double max_beta = 0.1;  // ceiling on v_max/c
};

enum class GeometryKind { HalfSpace, Cavity };

struct GeometryConfig {
    GeometryKind kind = GeometryKind::HalfSpace;
    double plate_gap_d = 0.0;  // cm, cavity only

    static GeometryConfig half_space() { return {}; }
    static GeometryConfig cavity(double d) { return {GeometryKind::Cavity, d}; }
};

void validate(const AtomConfig& atom, const MotionConfig& motion, const MotionLimits& limits = {});
void validate(const AtomConfig& atom, const MotionConfig& motion, const GeometryConfig& geom,
              const MotionLimits& limits = {});

struct DimensionlessGroups {
    double q0 = 0;           // (omega_cm - omega0)/c
    double k0 = 0;           // omega0/c
    double q1 = 0;           // (omega0 + Omega)/c
    double q2 = 0;           // (omega0 - Omega)/c
    double r = 0;            // omega0/omega_cm
    double x = 0;            // 2 k0 b
    double beta = 0;         // v_max/c
    double beta_over = std::numeric_limits<double>::quiet_NaN();  // b/d, cavity only
    double xi = 0;           // omega0/Omega
    double sigma = 0;        // 1 + 1/xi
    double delta = 0;        // 1 - 1/xi
    double bq0 = 0;
    double q0d = std::numeric_limits<double>::quiet_NaN();
    bool q2_negative = false;
};

DimensionlessGroups groups(const AtomConfig& atom, const MotionConfig& motion, const GeometryConfig& geom);

// 4 |d|^2 omega0^3 / (3 hbar c^3)
double gamma0(const AtomConfig& atom);
double gamma0(const AtomConfig& atom, double dipole_sq);

// Gamma_1/Gamma_0 = (1/12) beta^2 (1 + r^2) (w - 1)^3 with w = omega_cm/omega0, r = 1/w.
double gamma1_over_gamma0(double omega_ratio, double beta);
double gamma1(const AtomConfig& atom, const MotionConfig& motion);

}  // namespace vacrad
