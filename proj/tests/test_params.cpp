#include "vacrad/errors.hpp"
#include "vacrad/params.hpp"

#include <doctest.h>

#include <cmath>

using namespace vacrad;

namespace {

AtomConfig sodium_like() {
    AtomConfig a;
    a.omega0 = 3.2e15;
    a.dipole_sq_total = 6.4e-36;
    a.dipole_sq_perp = 2.1e-36;
    a.dipole_sq_par = 4.3e-36;
    return a;
}

}  // namespace

TEST_CASE("vacuum rate from CGS inputs") {
    const AtomConfig a = sodium_like();
    const double k0 = a.omega0 / a.c;
    CHECK(gamma0(a) == doctest::Approx(4 * a.dipole_sq_total * a.omega0 * a.omega0 * a.omega0 / (3 * a.hbar * a.c * a.c * a.c)).epsilon(1e-14));
    CHECK(gamma0(a, a.dipole_sq_perp) == doctest::Approx(4 * a.dipole_sq_perp * k0 * k0 * k0 / (3 * a.hbar)).epsilon(1e-14));
    // A 1 a.u. dipole at 589 nm gives a rate of order 1e7 - 1e8 per second.
    CHECK(gamma0(a) > 1e6);
    CHECK(gamma0(a) < 1e9);
}

TEST_CASE("Gamma_1 over Gamma_0") {
    CHECK(gamma1_over_gamma0(1.0, 1e-3) == 0.0);
    const double w = 3.0, beta = 2e-3, r = 1 / w;
    CHECK(gamma1_over_gamma0(w, beta) == doctest::Approx(beta * beta * (1 + r * r) * 8.0 / 12.0));
    CHECK_THROWS_AS(gamma1_over_gamma0(0.9, 1e-3), DomainError);
}

TEST_CASE("dimensionless groups") {
    const AtomConfig a = sodium_like();
    MotionConfig m;
    m.omega_cm = 1.1 * a.omega0;
    m.amplitude_a = 1e-8;
    m.offset_b = 2e-4;
    const DimensionlessGroups g = groups(a, m, GeometryConfig::cavity(5e-4));
    CHECK(g.r == doctest::Approx(1 / 1.1));
    CHECK(g.q0 == doctest::Approx(0.1 * a.omega0 / a.c));
    CHECK(g.bq0 == doctest::Approx(g.q0 * 2e-4));
    CHECK(g.q0d == doctest::Approx(g.q0 * 5e-4));
    CHECK(g.beta_over == doctest::Approx(0.4));
    CHECK(g.beta == doctest::Approx(m.v_max() / a.c));
    CHECK(g.x == doctest::Approx(2 * a.omega0 / a.c * 2e-4));
    CHECK(g.sigma == doctest::Approx(1 + 1 / g.xi));
    CHECK(g.delta == doctest::Approx(1 - 1 / g.xi));
    CHECK_FALSE(std::isnan(g.q0d));
    CHECK(std::isnan(groups(a, m, GeometryConfig::half_space()).q0d));
}

TEST_CASE("configuration validation") {
    AtomConfig a = sodium_like();
    MotionConfig m;
    m.omega_cm = 2 * a.omega0;
    m.offset_b = 1e-4;
    m.amplitude_a = 1e-8;
    CHECK_NOTHROW(validate(a, m));

    MotionConfig bad = m;
    bad.amplitude_a = 2e-4;  // a > b: the atom would cross the plate
    CHECK_THROWS_AS(validate(a, bad), DomainError);

    bad = m;
    bad.amplitude_a = 0.2 * a.c / m.omega_cm;  // v_max = 0.2 c
    CHECK_THROWS_AS(validate(a, bad), DomainError);

    CHECK_THROWS_AS(validate(a, m, GeometryConfig::cavity(5e-5)), DomainError);

    AtomConfig neg = a;
    neg.omega0 = -1;
    CHECK_THROWS_AS(neg.validate(), DomainError);
    neg = a;
    neg.dipole_sq_perp = -1;
    CHECK_THROWS_AS(neg.validate(), DomainError);
}
