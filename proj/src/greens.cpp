#include "vacrad/greens.hpp"

#include "vacrad/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

namespace vacrad {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

cplx eta_checked(const GreensQuery& qy) {
    if (qy.q == 0.0) throw DomainError("Green tensor requires q != 0");
    if (!(qy.q_par >= 0)) throw DomainError(fmt::format("q_par must be >= 0 (got {})", qy.q_par));
    const cplx eta = qy.eta();
    if (eta == 0.0) throw DomainError("singular Green prefactor: eta = 0 (grazing mode q_par = q)");
    return eta;
}

cplx prefactor(Component c, const cplx& eta, const cplx& q, double q_par) {
    switch (c) {
    case Component::xx: return 2.0 * kPi * I * eta * q / (q * q);
    case Component::yy: return 2.0 * kPi * I / (eta * q);
    case Component::zz: return 2.0 * kPi * I * q_par * q_par / (eta * q * q * q);
    }
    return 0.0;
}

GreenValue with_contact(cplx value, bool contact, const cplx& q) {
    GreenValue g;
    g.value = value;
    g.has_contact_term = contact;
    if (contact) g.contact_coefficient = -4.0 * kPi / (q * q);
    return g;
}

void check_heights(const GreensQuery& qy) {
    if (!(qy.z > 0) || !(qy.z_prime > 0))
        throw DomainError(fmt::format("heights must be > 0 (z = {}, z' = {})", qy.z, qy.z_prime));
}

void check_cavity_heights(const GreensQuery& qy, double d) {
    check_heights(qy);
    if (!(qy.z < d) || !(qy.z_prime < d))
        throw DomainError(fmt::format("heights must lie inside the cavity (z = {}, z' = {}, d = {})", qy.z, qy.z_prime, d));
}

void check_alpha(const ExpansionTerms& t, const ExpansionGuard& guard) {
    if (!(std::abs(t.alpha) <= guard.alpha_max))
        throw DomainError(fmt::format("expansion parameter alpha = {} exceeds the validity ceiling {}", t.alpha,
                                      guard.alpha_max));
    if (!(std::abs(t.m) <= 2.0) || !(std::abs(t.n) <= 2.0))
        throw DomainError(fmt::format("oscillation factors must satisfy |m|, |n| <= 2 (m = {}, n = {})", t.m, t.n));
}

void check_resonance(const cplx& denom, double tol, const cplx& phase) {
    if (std::abs(denom) < tol)
        throw ResonanceError(fmt::format("cavity resonance: eta q d = {}{:+}i is a multiple of pi", phase.real(),
                                         phase.imag()));
}

}  // namespace

cplx GreensQuery::eta() const {
    const cplx ratio = q_par / q;
    cplx arg = 1.0 - ratio * ratio;
    if (arg.imag() == 0.0) arg = cplx(arg.real(), 0.0);  // -0.0 would select the lower branch
    return std::sqrt(arg);
}

GreenValue g_halfspace(const GreensQuery& qy) {
    check_heights(qy);
    const cplx eta = eta_checked(qy);
    const cplx k = eta * qy.q;
    const cplx direct = std::exp(I * k * std::abs(qy.z - qy.z_prime));
    const cplx image = std::exp(I * k * (qy.z + qy.z_prime));
    const cplx pre = prefactor(qy.component, eta, qy.q, qy.q_par);
    if (qy.component == Component::zz) return with_contact(pre * (direct + image), true, qy.q);
    return with_contact(pre * (direct - image), false, qy.q);
}

GreenValue g_halfspace_expanded(const GreensQuery& qy, const ExpansionTerms& t, const ExpansionGuard& guard) {
    check_heights(qy);
    check_alpha(t, guard);
    const cplx eta = eta_checked(qy);
    const double b = qy.z;
    const cplx eb = std::exp(2.0 * I * b * eta * qy.q);
    const cplx ea = eta * t.alpha;
    const cplx pre = prefactor(qy.component, eta, qy.q, qy.q_par);
    if (qy.component == Component::zz) {
        const cplx br = (1.0 + eb) + I * ea * (t.n * eb + t.m) - 0.5 * ea * ea * (t.n * t.n * eb + t.m * t.m);
        return with_contact(pre * br, true, qy.q);
    }
    const cplx br = (1.0 - eb) - I * ea * (t.n * eb - t.m) + 0.5 * ea * ea * (t.n * t.n * eb - t.m * t.m);
    return with_contact(pre * br, false, qy.q);
}

GreenValue g_cavity(const GreensQuery& qy, double d, double resonance_tol) {
    check_cavity_heights(qy, d);
    const cplx eta = eta_checked(qy);
    const cplx k = eta * qy.q;
    const cplx e2d = std::exp(-2.0 * I * k * d);
    const cplx denom = 1.0 - e2d;
    check_resonance(denom, resonance_tol, k * d);
    const double sum = qy.z + qy.z_prime;
    const double diff = qy.z - qy.z_prime;
    const cplx direct = std::exp(-I * k * std::abs(diff));
    const cplx standing = 2.0 * e2d * std::cos(k * diff);
    const double sign = qy.component == Component::zz ? 1.0 : -1.0;
    const cplx images = sign * (std::exp(-I * k * sum) + e2d * std::exp(I * k * sum)) + standing;
    const cplx pre = prefactor(qy.component, eta, qy.q, qy.q_par);
    return with_contact(pre * (direct + images / denom), qy.component != Component::yy, qy.q);
}

GreenValue g_cavity_expanded(const GreensQuery& qy, const ExpansionTerms& t, double d, const ExpansionGuard& guard,
                             double resonance_tol) {
    check_cavity_heights(qy, d);
    check_alpha(t, guard);
    const cplx eta = eta_checked(qy);
    const cplx k = eta * qy.q;
    const double b = qy.z;
    const cplx eb = std::exp(2.0 * I * b * k);
    const cplx ed = std::exp(2.0 * I * d * k);
    const cplx denom = ed - 1.0;
    check_resonance(denom, resonance_tol, k * d);
    const cplx ea = eta * t.alpha;
    const cplx n2 = t.n * t.n, m2 = t.m * t.m;
    cplx br;
    if (qy.component == Component::zz) {
        br = (eb + 1.0) * (eb + ed) + I * ea * (t.n * (eb * eb - ed) + t.m * eb * (ed - 1.0)) -
             0.5 * ea * ea * (n2 * (eb * eb + ed) + m2 * (eb + eb * ed));
    } else {
        br = (-1.0 + eb) * (-eb + ed) + I * ea * (-t.n * (eb * eb - ed) + t.m * eb * (ed - 1.0)) +
             0.5 * ea * ea * (n2 * (eb * eb + ed) - m2 * (eb + eb * ed));
    }
    const cplx pre = prefactor(qy.component, eta, qy.q, qy.q_par);
    return with_contact(pre * std::exp(-2.0 * I * b * k) / denom * br, qy.component != Component::yy, qy.q);
}

}  // namespace vacrad
