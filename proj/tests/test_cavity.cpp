#include "vacrad/cavity.hpp"
#include "vacrad/errors.hpp"
#include "vacrad/halfspace.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace vacrad;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("normalized Im-integrals, reference values") {
    // Residue sums evaluated with mpmath at 30 digits.
    struct Ref {
        double X, rho, ee, bb;
    };
    for (const Ref& r : {Ref{4, 0.5, 0.185625724706558271, 2.05319165807994411},
                         Ref{10, 0.5, 0.232114881565911723, 1.76457632164122013},
                         Ref{10, 0.25, 0.385124723958552450, 1.54955392588797977},
                         Ref{25, 0.75, 0.244724984053040850, 1.23817907804401456}}) {
        const CavityIntegrals a = cavity_im_integrals(r.X, r.rho);
        const CavityIntegrals m = cavity_im_integrals(r.X, r.rho, CavityMethod::ModeSum);
        CHECK(a.s_ee == doctest::Approx(r.ee).epsilon(1e-10));
        CHECK(a.s_bb == doctest::Approx(r.bb).epsilon(1e-10));
        CHECK(m.s_ee == doctest::Approx(r.ee).epsilon(1e-14));
        CHECK(m.s_bb == doctest::Approx(r.bb).epsilon(1e-14));
        CHECK(a.modes == static_cast<int>(std::floor(r.X / kPi)));
    }
}

TEST_CASE("integral and mode-sum routes agree on random points") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> X(3.3, 150.0), rho(0.05, 0.95);
    for (int i = 0; i < 20; ++i) {
        const double x = X(rng), r = rho(rng);
        if (std::abs(x - kPi * std::round(x / kPi)) < 1e-3) continue;
        const CavityIntegrals a = cavity_im_integrals(x, r);
        const CavityIntegrals m = cavity_im_integrals(x, r, CavityMethod::ModeSum);
        CHECK(a.s_ee == doctest::Approx(m.s_ee).epsilon(1e-8));
        CHECK(a.s_bb == doctest::Approx(m.s_bb).epsilon(1e-8));
        CHECK(a.err_bb < 1e-6);
    }
}

TEST_CASE("below cutoff there are no modes") {
    for (double X : {0.1, 1.0, 3.1}) {
        const CavityIntegrals s = cavity_im_integrals(X, 0.5);
        CHECK(s.s_ee == 0.0);
        CHECK(s.s_bb == 0.0);
        CHECK(s.modes == 0);
        // Only the velocity-coupling term survives: 2 (r - 1)/(1 + r^2).
        const double r = 1 / 3.0;
        CHECK(cavity_total_ratio(CavityPoint{3.0, 1e-3, X, 0.5}) == doctest::Approx(2 * (r - 1) / (1 + r * r)));
    }
}

TEST_CASE("resonance guard") {
    CHECK_THROWS_AS(check_off_resonance(2 * kPi + 5e-4), ResonanceError);
    CHECK_NOTHROW(check_off_resonance(2 * kPi + 2e-3));
    CHECK_NOTHROW(check_off_resonance(0.5));
    CHECK_THROWS_AS(cavity_total_ratio(CavityPoint{2.0, 1e-3, kPi, 0.5}), ResonanceError);
}

TEST_CASE("ratio assembles from the integrals") {
    const CavityPoint p{2.0, 1e-3, 10.0, 0.3};
    const RateBreakdown r = cavity_components_integral(p);
    CHECK(r.total == doctest::Approx(r.eb + r.ee + r.bb));
    CHECK(r.ratio_total_over_gamma1 == doctest::Approx(cavity_total_ratio(p)).epsilon(1e-13));
    CHECK(cavity_ratio_from_integrals(2.0, cavity_im_integrals(10.0, 0.3)) == doctest::Approx(cavity_total_ratio(p)));
}

TEST_CASE("wide cavity sits below the single plate by the half-weight u = 0 term") {
    // Mode sums over n >= 1 omit the n = 0 half weight, (3/2)/(1 + r^2) * pi/(2 q0 d),
    // once averaged over a period in q0 d.
    const double X0 = 300.0, B = 5.0, w = 3.0, r = 1 / w;
    const double jump = kPi * std::ceil(X0 / kPi);
    double avg = 0.0;
    const int n = 24;
    for (auto [lo, hi] : {std::pair{X0, jump}, {jump, X0 + kPi}}) {
        for (int k = 0; k < n; ++k) {
            const double X = lo + (hi - lo) * (k + 0.5) / n;
            avg += (hi - lo) / n * cavity_ratio_from_integrals(w, cavity_im_integrals(X, B / X, CavityMethod::ModeSum));
        }
    }
    avg /= kPi;
    const double hs = halfspace_total_ratio(HalfspacePoint{w, 1e-3, B});
    const double half_mode = 1.5 / (1 + r * r) * kPi / (2 * (X0 + kPi / 2));
    CHECK(hs - avg == doctest::Approx(half_mode).epsilon(0.02));
}

TEST_CASE("closed-form brackets are reproduced as written and reported on mismatch") {
    // Regression values of the printed closed forms (complex as printed).
    const CavityClosedForm cf = cavity_closed_brackets(4.0, 0.5);
    CHECK(cf.ee.value.real() == doctest::Approx(0.6397458071).epsilon(1e-9));
    CHECK(cf.ee.value.imag() == doctest::Approx(0.0566349507).epsilon(1e-8));
    CHECK(cf.bb.value.real() == doctest::Approx(1.561849464).epsilon(1e-9));
    CHECK(cf.bb.value.imag() == doctest::Approx(-0.3194597780).epsilon(1e-8));
    CHECK(std::abs(cf.ee.t1 + cf.ee.t2 + cf.ee.t3 - cf.ee.value) < 1e-14);

    const CavityPoint p{2.0, 1e-3, 4.0, 0.5};
    CHECK_THROWS_AS(cavity_components_closed(p), CrossValidationError);
    try {
        cavity_components_closed(p);
    } catch (const CrossValidationError& e) {
        CHECK(std::string(e.what()).find("Li2/Arg block") != std::string::npos);
    }
    CHECK_NOTHROW(cavity_components_closed_unchecked(p));
    CHECK_THROWS_AS(cavity_total_ratio(p, EvalPath::ClosedForm), CrossValidationError);
}

TEST_CASE("absolute inputs") {
    CavityRateInputs in;
    in.atom.omega0 = 2e15;
    in.atom.dipole_sq_total = 6.4e-36;
    in.motion.omega_cm = 3 * in.atom.omega0;
    in.motion.amplitude_a = 1e-3 * in.atom.c / in.motion.omega_cm;
    const double q0 = (in.motion.omega_cm - in.atom.omega0) / in.atom.c;
    in.d = 10.0 / q0;
    in.motion.offset_b = 0.3 * in.d;
    const CavityPoint p = cavity_point(in);
    CHECK(p.q0d == doctest::Approx(10.0));
    CHECK(p.b_over_d == doctest::Approx(0.3));
    CHECK(cavity_components_integral(in).total == doctest::Approx(gamma0(in.atom) * cavity_components_integral(p).total));
    CHECK(cavity_total_ratio(in) == doctest::Approx(cavity_total_ratio(p)));
    in.d = 0.5 * in.motion.offset_b;
    CHECK_THROWS_AS(cavity_point(in), DomainError);
}
