#include "vacrad/errors.hpp"
#include "vacrad/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace vacrad;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference values computed with mpmath at 30 digits.
void check_close(cplx got, cplx want, double tol = 1e-14) {
    INFO("got " << got << " want " << want);
    CHECK(std::abs(got - want) <= tol * std::abs(want));
}

}  // namespace

TEST_CASE("dilog special values are exact") {
    CHECK(dilog(cplx(0.0)) == cplx(0.0));
    CHECK(dilog(cplx(1.0)) == cplx(kPi * kPi / 6));
    CHECK(dilog(cplx(-1.0)) == cplx(-kPi * kPi / 12));
}

TEST_CASE("dilog reference values") {
    check_close(dilog({0.5, 0.5}), {0.45398526915029558331, 0.64376733288926874874});
    check_close(dilog(0.9), {1.2997147230049587252, 0.0});
    check_close(dilog(std::polar(1.0, 1.0)), {0.32413774005332981724, 1.0139591323607685043});
    check_close(dilog({-0.3, 0.9}), {-0.40762768541956664547, 0.7487522726891895306});
    check_close(dilog(std::polar(1.0, 1e-3)), {1.6433635205214315399, 0.0079077552928710260104});
    check_close(dilog({0.99, 0.01}), {1.5844181626351652688, 0.045211436422238448912});
}

TEST_CASE("Re Li2 on the unit circle follows the Bernoulli polynomial") {
    for (int k = 1; k < 64; ++k) {
        const double th = 2 * kPi * k / 64;
        CHECK(dilog(std::polar(1.0, th)).real() == doctest::Approx(kPi * kPi / 6 - th * (2 * kPi - th) / 4).epsilon(1e-13));
    }
}

TEST_CASE("dilog reflection and inversion identities") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        const cplx z(u(rng), u(rng));
        if (std::abs(z) < 0.05 || std::abs(1.0 - z) < 0.05 || std::abs(z.imag()) < 1e-3) continue;
        // Li2(z) + Li2(1 - z) = pi^2/6 - log(z) log(1 - z)
        const cplx refl = dilog(z) + dilog(1.0 - z) - (kPi * kPi / 6 - std::log(z) * std::log(1.0 - z));
        CHECK(std::abs(refl) < 1e-13);
        // Li2(z) + Li2(1/z) = -pi^2/6 - log(-z)^2 / 2
        const cplx inv = dilog(z) + dilog(1.0 / z) + kPi * kPi / 6 + 0.5 * std::pow(std::log(-z), 2);
        CHECK(std::abs(inv) < 1e-13);
    }
}

TEST_CASE("Lerch Phi reference values") {
    check_close(lerch_phi(UnitCirclePoint(kPi / 3), 2, 0.4), {6.3417194331467358068, 0.53662136785510095302});
    const double re[] = {-2.6591219531453179556, 12.564049470088290282, -34.824646285540686676, 126.64625111112790635,
                         -406.9652281119858095};
    const double im[] = {1.605813841043043892, 1.7394899695991961012, 2.1181713679817491644, 2.8170990457877429516,
                         3.9085589343270244177};
    for (int s = 1; s <= 5; ++s) check_close(lerch_phi(UnitCirclePoint(0.7), s, -0.3), {re[s - 1], im[s - 1]});
    check_close(lerch_phi(UnitCirclePoint(0.01), 1, 0.5), {5.9992415195559327613, 1.5408195043848383853});
    check_close(lerch_phi(cplx(0, 0.5), 3, 0.2), {124.97730572357073415, 0.28574067888550256674});
}

TEST_CASE("Lerch Phi recurrence on random unit-circle points") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(0.02, 2 * kPi - 0.02), shift(-2.9, 4.0);
    std::uniform_int_distribution<int> order(1, 5);
    for (int i = 0; i < 100; ++i) {
        const UnitCirclePoint z(angle(rng));
        const int s = order(rng);
        const double a = shift(rng);
        if (std::abs(a - std::round(a)) < 0.05) continue;
        const cplx p0 = lerch_phi(z, s, a), p1 = lerch_phi(z, s, a + 1);
        // Near a = -n the two sums are large and nearly cancel.
        CHECK(std::abs(p0 - z.z() * p1 - std::pow(a, -s)) <= 1e-14 * (std::abs(p0) + std::abs(p1)));
    }
}

TEST_CASE("Lerch Phi reduces to polylogarithms at a = 1") {
    for (double th : {0.3, 1.0, 2.5, 4.0}) {
        const UnitCirclePoint z(th);
        check_close(z.z() * lerch_phi(z, 2, 1.0), dilog(z.z()), 1e-13);
        check_close(z.z() * lerch_phi(z, 1, 1.0), -std::log(1.0 - z.z()), 1e-13);
    }
}

TEST_CASE("Lerch Phi domain errors") {
    CHECK_THROWS_AS(lerch_phi(cplx(1.5, 0), 2, 0.5), DomainError);
    CHECK_THROWS_AS(lerch_phi(cplx(0.5, 0), 0, 0.5), DomainError);
    CHECK_THROWS_AS(lerch_phi(cplx(0.5, 0), 6, 0.5), DomainError);
    CHECK_THROWS_AS(lerch_phi(cplx(0.5, 0), 2, -2.0), DomainError);
    CHECK_THROWS_AS(lerch_phi(UnitCirclePoint(0.0), 1, 0.5), DomainError);
}

TEST_CASE("reduced 2F1") {
    check_close(hyp2f1_reduced(0.3, UnitCirclePoint(1.0)), {0.99246083649356670441, 0.24981594787379360791});
    check_close(hyp2f1_reduced(-0.3, UnitCirclePoint(2.0)), {1.2186072116967472078, -0.26875090085583655305});
    // 2F1(1, 1; 2; z) = -log(1 - z)/z
    const cplx z(0.3, 0.4);
    check_close(hyp2f1_reduced(1.0, z), -std::log(1.0 - z) / z, 1e-14);
}

TEST_CASE("unit circle angles are reduced to [0, 2 pi)") {
    CHECK(UnitCirclePoint(2 * kPi).on_branch_point());
    CHECK(UnitCirclePoint(-kPi / 2).theta() == doctest::Approx(3 * kPi / 2));
    CHECK(UnitCirclePoint(5 * kPi).theta() == doctest::Approx(kPi));
}

TEST_CASE("Arg(1 - exp(-i theta))") {
    CHECK(arg_one_minus_exp(kPi / 2) == doctest::Approx(kPi / 4));
    CHECK(arg_one_minus_exp(1e-12) == doctest::Approx(kPi / 2));
    CHECK(arg_one_minus_exp(kPi) == doctest::Approx(0.0));
    for (double th : {0.4, 1.7, 3.9, 6.0})
        CHECK(arg_one_minus_exp(th) == doctest::Approx(std::arg(1.0 - std::polar(1.0, -th))).epsilon(1e-14));
}
