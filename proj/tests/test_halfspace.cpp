#include "vacrad/errors.hpp"
#include "vacrad/halfspace.hpp"

#include <doctest.h>

#include <cmath>

using namespace vacrad;

TEST_CASE("oscillatory brackets match reference quadrature") {
    // int_0^1 t^4 cos(2Bt) dt and -1/2 int_0^1 (t^2 + t^4) cos(2Bt) dt, mpmath at 30 digits.
    struct Ref {
        double b, ee, bb;
    };
    for (const Ref& r : {Ref{0.05, 0.199286177122433698721668742184, -0.26581005276978191363690573291},
                         Ref{0.5, 0.133076685139860238463798032334, -0.186105156034121583306584462795},
                         Ref{3.0, 0.0569960961918232201306852389292, -0.0331784103668396484240346157384},
                         Ref{40.0, -0.0124692485355474930253665312565, 0.0124617351728674985372893079306}}) {
        CHECK(halfspace_osc_ee(r.b) == doctest::Approx(r.ee).epsilon(1e-12));
        CHECK(halfspace_osc_bb(r.b) == doctest::Approx(r.bb).epsilon(1e-12));
    }
}

TEST_CASE("total ratio reference values") {
    CHECK(halfspace_total_ratio(HalfspacePoint{1.1, 1e-3, 1.0}) == doctest::Approx(0.999738675043897974248639535949).epsilon(1e-12));
    CHECK(halfspace_total_ratio(HalfspacePoint{3.0, 1e-3, 10.0}) == doctest::Approx(0.928684115671985465330940575514).epsilon(1e-12));
    CHECK(halfspace_total_ratio(HalfspacePoint{2.0, 1e-3, 0.05}) == doctest::Approx(0.481627579625983626504427486326).epsilon(1e-12));
}

TEST_CASE("contact limit bq0 -> 0") {
    // 1 + 3A/5 - 4B'/5 with A = (1 - r)^2/(1 + r^2), B' = 1/(1 + r^2); 48/85 at w = 1.1.
    CHECK(halfspace_total_ratio(HalfspacePoint{1.1, 1e-3, 0.0}) == doctest::Approx(48.0 / 85.0).epsilon(1e-14));
    CHECK(halfspace_components(HalfspacePoint{1.1, 1e-3, 1e-4}).series_path_used);
    CHECK_FALSE(halfspace_components(HalfspacePoint{1.1, 1e-3, 1.0}).series_path_used);
}

TEST_CASE("series and closed form join smoothly") {
    for (double w : {1.1, 3.0}) {
        const double below = halfspace_total_ratio(HalfspacePoint{w, 1e-3, kHalfspaceSeriesThreshold * (1 - 1e-12)});
        const double above = halfspace_total_ratio(HalfspacePoint{w, 1e-3, kHalfspaceSeriesThreshold});
        CHECK(std::abs(below - above) < 1e-11);
    }
}

TEST_CASE("closed forms agree with the quadrature oracle") {
    for (double w : {1.05, 1.1, 2.0, 3.0, 5.0}) {
        for (double b : {0.0, 0.03, 0.1, 0.7, 4.0, 25.0, 150.0}) {
            const HalfspacePoint p{w, 2e-3, b};
            const RateBreakdown cf = halfspace_components(p), orc = halfspace_oracle(p);
            CHECK(cf.eb == doctest::Approx(orc.eb).epsilon(1e-10));
            CHECK(cf.ee == doctest::Approx(orc.ee).epsilon(1e-10));
            CHECK(cf.bb == doctest::Approx(orc.bb).epsilon(1e-10));
        }
    }
}

TEST_CASE("breakdown bookkeeping") {
    const HalfspacePoint p{3.0, 1e-3, 2.0};
    const RateBreakdown r = halfspace_components(p);
    CHECK(r.total == doctest::Approx(r.eb + r.ee + r.bb));
    CHECK(r.gamma0 == 1.0);
    CHECK(r.gamma1 == doctest::Approx(gamma1_over_gamma0(3.0, 1e-3)));
    CHECK(r.ratio_total_over_gamma1 == doctest::Approx(r.total / r.gamma1));
    CHECK(r.eb < 0);  // (r - 1) < 0 above resonance
    const RateBreakdown s = r.scaled(2.5e7);
    CHECK(s.total == doctest::Approx(2.5e7 * r.total));
    CHECK(s.ratio_total_over_gamma1 == r.ratio_total_over_gamma1);
}

TEST_CASE("absolute rates scale with Gamma_0") {
    AtomConfig atom;
    atom.omega0 = 2e15;
    atom.dipole_sq_total = 6.4e-36;
    MotionConfig m;
    m.omega_cm = 1.1 * atom.omega0;
    m.amplitude_a = 1e-3 * atom.c / m.omega_cm;
    m.offset_b = 3.0 * atom.c / (m.omega_cm - atom.omega0);
    const HalfspacePoint p = halfspace_point(atom, m);
    CHECK(p.bq0 == doctest::Approx(3.0));
    CHECK(p.beta == doctest::Approx(1e-3));
    CHECK(halfspace_components(atom, m).total == doctest::Approx(gamma0(atom) * halfspace_components(p).total));
    CHECK(halfspace_oracle(atom, m).total == doctest::Approx(halfspace_components(atom, m).total).epsilon(1e-10));
    CHECK(halfspace_total_ratio(atom, m) == doctest::Approx(halfspace_total_ratio(p)));
}

TEST_CASE("emission needs omega_cm >= omega0") {
    CHECK_THROWS_AS(halfspace_total_ratio(HalfspacePoint{0.9, 1e-3, 1.0}), DomainError);
    CHECK_THROWS_AS(halfspace_total_ratio(HalfspacePoint{1.1, 1e-3, -1.0}), DomainError);
}
