#include "vacrad/cavity.hpp"

#include "vacrad/errors.hpp"
#include "vacrad/halfspace.hpp"
#include "vacrad/quad.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

namespace vacrad {

namespace {

constexpr double kPi = std::numbers::pi;

void check_point(const CavityPoint& p) {
    if (!(p.omega_ratio >= 1.0))
        throw DomainError(fmt::format("emission requires omega_cm >= omega0 (omega_cm/omega0 = {})", p.omega_ratio));
    if (!(p.q0d >= 0.0)) throw DomainError(fmt::format("q0 d must be >= 0 (got {})", p.q0d));
    if (!(p.b_over_d > 0.0 && p.b_over_d < 1.0))
        throw DomainError(fmt::format("b/d must lie in (0, 1) (got {})", p.b_over_d));
    if (!(p.beta >= 0.0)) throw DomainError(fmt::format("v_max/c must be >= 0 (got {})", p.beta));
}

double rate_scale(const CavityPoint& p) {
    const double wm1 = p.omega_ratio - 1.0;
    return p.beta * p.beta * wm1 * wm1 * wm1;
}

RateBreakdown assemble(const CavityPoint& p, double s_ee, double s_bb) {
    const double r = 1.0 / p.omega_ratio;
    const double K = rate_scale(p);
    RateBreakdown out;
    out.eb = K / 6.0 * (r - 1.0);
    out.ee = K / 4.0 * (1.0 - r) * (1.0 - r) * s_ee;
    out.bb = K / 8.0 * s_bb;
    out.total = out.eb + out.ee + out.bb;
    out.gamma0 = 1.0;
    out.gamma1 = gamma1_over_gamma0(p.omega_ratio, p.beta);
    out.ratio_total_over_gamma1 = cavity_ratio_from_integrals(p.omega_ratio, {s_ee, s_bb, 0.0, 0.0, 0});
    return out;
}

}  // namespace

void check_off_resonance(double q0d) {
    if (q0d < 0.5 * kPi) return;
    const double n = std::round(q0d / kPi);
    if (std::abs(q0d - n * kPi) < kCavityResonanceGuard)
        throw ResonanceError(fmt::format("q0 d = {} lies within {} of the cavity resonance {} pi", q0d,
                                         kCavityResonanceGuard, n));
}

CavityIntegrals cavity_im_integrals(double X, double rho, CavityMethod method) {
    if (!(X >= 0.0)) throw DomainError(fmt::format("q0 d must be >= 0 (got {})", X));
    CavityIntegrals out;
    if (X == 0.0) return out;
    const double B = rho * X;
    auto g_ee = [B](double t) { return t * t + std::pow(t, 4) * std::cos(2 * t * B); };
    auto h_ee = [B](double t) { return std::pow(t, 4) * std::sin(2 * t * B); };
    auto g_bb = [B](double t) { return (1 + t * t) * (1 - t * t * std::cos(2 * t * B)); };
    auto h_bb = [B](double t) { return -(1 + t * t) * t * t * std::sin(2 * t * B); };

    if (method == CavityMethod::ModeSum) {
        // Mode sum over u_n = n pi/d < q0; in t = u/q0 the "length" is X.
        out.s_ee = mode_sum(g_ee, X, 1.0);
        out.s_bb = mode_sum(g_bb, X, 1.0);
        out.modes = static_cast<int>(cot_poles(0.0, 1.0, X).size());
        return out;
    }
    const auto [ree, rbb] = im_regularized_pair({g_ee, h_ee, 0.0, 1.0}, {g_bb, h_bb, 0.0, 1.0}, X);
    out.s_ee = ree.value;
    out.s_bb = rbb.value;
    out.err_ee = ree.err_est;
    out.err_bb = rbb.err_est;
    out.modes = ree.poles;
    return out;
}

double cavity_ratio_from_integrals(double omega_ratio, const CavityIntegrals& s) {
    const double r = 1.0 / omega_ratio;
    const double den = 1.0 + r * r;
    return 1.0 - 2.0 / den - (1.0 - r) * (1.0 - r) / den + 1.5 / den * s.s_bb + 3.0 * (1.0 - r) * (1.0 - r) / den * s.s_ee;
}

CavityClosedForm cavity_closed_brackets(double X, double rho) {
    if (!(X > 0.0)) throw DomainError(fmt::format("closed forms need q0 d > 0 (got {})", X));
    if (!(rho > 0.0 && rho < 1.0)) throw DomainError(fmt::format("b/d must lie in (0, 1) (got {})", rho));
    // Plate gap d = 1, so q0 = X and b = rho.
    const double d = 1.0, q0 = X, b = rho;
    const UnitCirclePoint z(2.0 * d * q0);
    auto P = [&](int s, double a) { return lerch_phi(z, s, a); };
    auto F = [&](double beta) { return hyp2f1_reduced(beta, z); };
    const cplx li2 = dilog(std::conj(z.z()));
    const double arg = arg_one_minus_exp(2.0 * d * q0);

    const double bq = b * q0, dq = d * q0;
    const double b2q2 = bq * bq, b4q4 = b2q2 * b2q2;
    const double b4 = std::pow(b, 4), b5 = std::pow(b, 5), d2 = d * d, d3 = d2 * d, d4 = d2 * d2, d5 = d4 * d;
    const double q02 = q0 * q0, q03 = q02 * q0, q04 = q02 * q02, q05 = q04 * q0;
    const double c2 = std::cos(2.0 * bq), s2 = std::sin(2.0 * bq);

    const cplx p2 = P(2, -rho) + P(2, rho);
    const cplx p4 = P(4, -rho) + P(4, rho);
    const cplx p3 = P(3, -rho) - P(3, rho);
    const cplx p5 = P(5, rho) - P(5, -rho);
    const cplx f = F(-rho) + F(rho);
    const cplx li_arg = dq * (dq + 3.0 * arg) + 3.0 * li2;

    CavityClosedForm out;
    {
        const double den = 12.0 * b5 * d5 * q05;
        ClosedFormTerms& t = out.ee;
        t.t1 = 6.0 * bq * d * c2 * (d4 * (-3.0 + 2.0 * b2q2) + b4 * (-2.0 * d2 * q02 * p2 + 3.0 * p4)) / den;
        t.t2 = 4.0 * b5 * d3 * q03 * li_arg / den;
        t.t3 = -3.0 * s2 * (6.0 * b5 * d2 * q02 * p3 + 3.0 * b5 * p5 +
                            d5 * (-3.0 + 6.0 * b2q2 - 2.0 * b4q4 + 2.0 * b4q4 * f)) / den;
        t.value = t.t1 + t.t2 + t.t3;
    }
    {
        const double den = 4.0 * b5 * d5 * q05;
        ClosedFormTerms& t = out.bb;
        t.t1 = 6.0 * bq * d * c2 * (d4 * (1.0 - b2q2) + b4 * (d2 * q02 * p2 - p4)) / den;
        t.t2 = 16.0 / 3.0 * b5 * d3 * q03 * li_arg / den;
        t.t3 = s2 * (d5 * (-3.0 + 7.0 * b2q2 - 4.0 * b4q4) +
                     b4 * (7.0 * b * d2 * q02 * p3 + 3.0 * b * p5 + 4.0 * d5 * q04 * f)) / den;
        t.value = t.t1 + t.t2 + t.t3;
    }
    return out;
}

std::string describe(const CavityClosedForm& cf, const CavityIntegrals& ref) {
    auto c = [](cplx v) { return fmt::format("{:.10g}{:+.10g}i", v.real(), v.imag()); };
    return fmt::format(
        "EE closed {} (cos block {}, Li2/Arg block {}, sin block {}) vs integral {:.10g}; "
        "BB closed {} (cos block {}, Li2/Arg block {}, sin block {}) vs integral {:.10g}",
        c(cf.ee.value), c(cf.ee.t1), c(cf.ee.t2), c(cf.ee.t3), ref.s_ee, c(cf.bb.value), c(cf.bb.t1), c(cf.bb.t2),
        c(cf.bb.t3), ref.s_bb);
}

RateBreakdown cavity_components_integral(const CavityPoint& p) {
    check_point(p);
    check_off_resonance(p.q0d);
    const CavityIntegrals s = cavity_im_integrals(p.q0d, p.b_over_d);
    return assemble(p, s.s_ee, s.s_bb);
}

RateBreakdown cavity_components_closed_unchecked(const CavityPoint& p) {
    check_point(p);
    check_off_resonance(p.q0d);
    if (p.q0d == 0.0) return assemble(p, 0.0, 0.0);
    const CavityClosedForm cf = cavity_closed_brackets(p.q0d, p.b_over_d);
    return assemble(p, cf.ee.value.real(), cf.bb.value.real());
}

RateBreakdown cavity_components_closed(const CavityPoint& p, double xval_tol) {
    check_point(p);
    check_off_resonance(p.q0d);
    if (p.q0d == 0.0) return assemble(p, 0.0, 0.0);
    const CavityClosedForm cf = cavity_closed_brackets(p.q0d, p.b_over_d);
    const CavityIntegrals ref = cavity_im_integrals(p.q0d, p.b_over_d);
    auto agrees = [xval_tol](cplx closed, double integral) {
        const double diff = std::abs(closed - integral);
        return integral != 0.0 ? diff <= xval_tol * std::abs(integral) : diff <= 1e-12;
    };
    if (!agrees(cf.ee.value, ref.s_ee) || !agrees(cf.bb.value, ref.s_bb))
        throw CrossValidationError(fmt::format("closed form disagrees with regularized integral at q0 d = {}, b/d = {}: {}",
                                               p.q0d, p.b_over_d, describe(cf, ref)));
    return assemble(p, cf.ee.value.real(), cf.bb.value.real());
}

double cavity_total_ratio(const CavityPoint& p, EvalPath path) {
    if (path == EvalPath::ClosedForm) return cavity_components_closed(p).ratio_total_over_gamma1;
    return cavity_components_integral(p).ratio_total_over_gamma1;
}

CavityPoint cavity_point(const CavityRateInputs& in) {
    validate(in.atom, in.motion, GeometryConfig::cavity(in.d));
    const double q0 = (in.motion.omega_cm - in.atom.omega0) / in.atom.c;
    return {in.motion.omega_cm / in.atom.omega0, in.motion.v_max() / in.atom.c, q0 * in.d, in.motion.offset_b / in.d};
}

RateBreakdown cavity_components_integral(const CavityRateInputs& in) {
    return cavity_components_integral(cavity_point(in)).scaled(gamma0(in.atom));
}

RateBreakdown cavity_components_closed(const CavityRateInputs& in, double xval_tol) {
    return cavity_components_closed(cavity_point(in), xval_tol).scaled(gamma0(in.atom));
}

double cavity_total_ratio(const CavityRateInputs& in) { return cavity_total_ratio(cavity_point(in), in.eval_path); }

}  // namespace vacrad
