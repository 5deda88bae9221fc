#include "vacrad/errors.hpp"
#include "vacrad/quad.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace vacrad;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("Gauss-Kronrod on smooth and oscillatory integrands") {
    Integrand f{[](double x) { return cplx(std::exp(x), std::sin(x)); }, 0.0, 2.0, {}};
    const QuadResult r = integrate(f, 1e-12);
    CHECK(std::abs(r.value - cplx(std::exp(2.0) - 1, 1 - std::cos(2.0))) < 1e-12);

    Integrand osc{[](double t) { return cplx(std::cos(200 * t)); }, 0.0, 1.0, {}};
    CHECK(integrate(osc, 1e-12).value.real() == doctest::Approx(std::sin(200.0) / 200).epsilon(1e-11));
}

TEST_CASE("integrable endpoint singularity and breakpoints") {
    Integrand f{[](double x) { return cplx(1 / std::sqrt(x)); }, 0.0, 1.0, {}};
    CHECK(integrate(f, 1e-10).value.real() == doctest::Approx(2.0).epsilon(1e-9));
    Integrand kink{[](double x) { return cplx(std::abs(x - 0.3)); }, 0.0, 1.0, {0.3}};
    const QuadResult r = integrate(kink, 1e-13);
    CHECK(r.value.real() == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-14));
    CHECK(r.intervals <= 4);
}

TEST_CASE("quadrature tolerance and subdivision limits") {
    Integrand f{[](double x) { return cplx(x); }, 0.0, 1.0, {}};
    CHECK_THROWS_AS(integrate(f, 1e-16), DomainError);
    QuadOptions tight;
    tight.max_subdivisions = 3;
    tight.rel_tol = 1e-13;
    Integrand wild{[](double x) { return cplx(std::sin(1 / (x + 1e-4))); }, 0.0, 1.0, {}};
    CHECK_THROWS_AS(integrate(wild, tight), ConvergenceError);
}

TEST_CASE("epsilon schedule validation") {
    CHECK_NOTHROW(EpsilonSchedule::geometric(0.5, 2, 8, 5).validate());
    CHECK_THROWS_AS(EpsilonSchedule::geometric(0.5, 2, 4, 5).validate(), DomainError);
    EpsilonSchedule up{{0.1, 0.2, 0.3, 0.4}, 2};
    CHECK_THROWS_AS(up.validate(), DomainError);
    const EpsilonSchedule s = EpsilonSchedule::for_phase_window(0.0, 10.0);
    CHECK(s.eps_list.size() == 8);
    CHECK(s.eps_list.front() <= kPi / 4);
}

TEST_CASE("cot(x - i eps) - 1/(x - i eps)") {
    for (double x : {0.01, 0.2, 1.0, 2.5, 40.0}) {
        for (double eps : {1e-3, 0.05, 0.4}) {
            const cplx z(x, -eps);
            const cplx direct = std::cos(z) / std::sin(z) - 1.0 / z;
            CHECK(std::abs(cot_minus_inverse(x, eps) - direct) < 1e-12 * std::max(1.0, std::abs(direct)));
        }
    }
    // Removable singularity at the origin: -z/3 - z^3/45.
    CHECK(std::abs(cot_minus_inverse(0.0, 0.0)) == 0.0);
}

TEST_CASE("regularized cot integral equals the residue sum") {
    // Im int_0^1 u^2 cot(u d - i 0+) du = (pi/d) sum_{n pi/d < 1} (n pi/d)^2
    const double d = 20.0;
    CotIntegrand f{[](double u) { return u * u; }, [](double u) { return std::sin(u); }, 0.0, 1.0};
    const RegularizedResult r = im_regularized(f, d);
    double sum = 0;
    for (int n = 1; n * kPi / d < 1; ++n) sum += std::pow(n * kPi / d, 2) * kPi / d;
    CHECK(r.poles == 6);
    CHECK(r.value == doctest::Approx(sum).epsilon(1e-9));
    CHECK(mode_sum(f.cot_coefficient, d, 1.0) == doctest::Approx(sum).epsilon(1e-14));
    CHECK(cot_poles(0.0, 1.0, d).size() == 6);
}

TEST_CASE("paired evaluation matches single evaluations") {
    const double d = 13.0;
    CotIntegrand a{[](double u) { return 1 + u * u; }, nullptr, 0.0, 1.0};
    CotIntegrand b{[](double u) { return u * std::cos(3 * u); }, nullptr, 0.0, 1.0};
    const auto [ra, rb] = im_regularized_pair(a, b, d);
    CHECK(ra.value == doctest::Approx(im_regularized(a, d).value).epsilon(1e-10));
    CHECK(rb.value == doctest::Approx(im_regularized(b, d).value).epsilon(1e-10));
    CotIntegrand shifted = b;
    shifted.hi = 0.9;
    CHECK_THROWS_AS(im_regularized_pair(a, shifted, d), DomainError);
}

TEST_CASE("no poles gives exactly zero; endpoint poles are rejected") {
    CotIntegrand f{[](double u) { return 1 + u; }, nullptr, 0.0, 1.0};
    CHECK(im_regularized(f, 3.0).value == 0.0);
    CHECK(mode_sum(f.cot_coefficient, 3.0, 1.0) == 0.0);
    CHECK_THROWS_AS(im_regularized(f, kPi), ResonanceError);
    CHECK_THROWS_AS(im_regularized(f, -1.0), DomainError);
}
