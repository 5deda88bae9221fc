#pragma once

#include <complex>

namespace vacrad {

using cplx = std::complex<double>;

enum class Component { xx, yy, zz };

struct GreensQuery {
    Component component = Component::xx;
    double z = 0.0;        // cm
    double z_prime = 0.0;  // cm
    cplx q = 1.0;          // omega/c; real in physical use, complex for limit checks
    double q_par = 0.0;

    // sqrt(1 - q_par^2/q^2), principal branch (+i sqrt|.| for evanescent modes).
    cplx eta() const;
};

// z(t) - z(t') = a m and z(t) + z(t') = 2b + a n, alpha = q a.
struct ExpansionTerms {
    double m = 0.0;
    double n = 0.0;
    double alpha = 0.0;
};

struct GreenValue {
    cplx value;
    // The delta(z - z') contact term is never evaluated numerically; it is
    // reported as a flag with coefficient -4 pi/q^2.
    bool has_contact_term = false;
    cplx contact_coefficient = 0.0;
};

struct ExpansionGuard {
    double alpha_max = 0.3;
};

// Single perfectly conducting plate at z = 0.
GreenValue g_halfspace(const GreensQuery& qy);
// Second-order expansion about z = z' = b, with b taken from qy.z. Exact to
// O(alpha^2) for m >= 0 (z(t) >= z(t')).
GreenValue g_halfspace_expanded(const GreensQuery& qy, const ExpansionTerms& terms, const ExpansionGuard& guard = {});

// Plates at z = 0 and z = d; ResonanceError when |1 - exp(-2 i eta q d)| < resonance_tol.
GreenValue g_cavity(const GreensQuery& qy, double d, double resonance_tol = 1e-9);
// Expansion about z = z' = b = qy.z; exact to O(alpha^2) for m <= 0 (z(t) <= z(t')).
GreenValue g_cavity_expanded(const GreensQuery& qy, const ExpansionTerms& terms, double d,
                             const ExpansionGuard& guard = {}, double resonance_tol = 1e-9);

}  // namespace vacrad
