#include "vacrad/curves.hpp"
#include "vacrad/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace vacrad;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<CurvePoint> sampled(double lo, double hi, int n, double (*f)(double)) {
    std::vector<CurvePoint> out;
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        out.push_back({x, f(x), kNoFlags});
    }
    return out;
}

}  // namespace

TEST_CASE("extrema of a known function") {
    const auto ext = find_extrema(sampled(0, 4 * kPi, 100, [](double x) { return std::sin(x); }));
    REQUIRE(ext.size() == 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(ext[k].x == doctest::Approx((2 * k + 1) * kPi / 2).epsilon(1e-3));
        CHECK(ext[k].kind == (k % 2 == 0 ? ExtremumKind::Maximum : ExtremumKind::Minimum));
    }
    CHECK(find_extrema(sampled(0, 1, 50, [](double x) { return std::exp(x); })).empty());
    CHECK_THROWS_AS(find_extrema(sampled(0, 1, 2, [](double x) { return x; })), DomainError);
}

TEST_CASE("curve spec validation") {
    CurveSpec s;
    s.points = 1;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.points = 10;
    s.lo = 5;
    s.hi = 5;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.hi = 10;
    s.x_definition = XDefinition::TwoK0B;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.x_definition = XDefinition::TwoOmegaCmBOverC;
    CHECK_NOTHROW(s.validate());
    CHECK(to_string(s.axis()) == "x = 2*omega_cm*b/c");
    CHECK(family_from_string("cavity_ratio") == Family::CavityRatio);
    CHECK_THROWS_AS(family_from_string("cavity"), ConfigError);
    CHECK(flags_from_string(flags_to_string(kResonanceSkipped | kSeriesPathUsed)) == (kResonanceSkipped | kSeriesPathUsed));
}

TEST_CASE("half-space tail approaches 1") {
    CurveSpec s;
    s.family = Family::HalfspaceRatio;
    s.lo = 100;
    s.hi = 200;
    s.points = 2;
    s.params.omega_ratio = 1.1;
    for (const CurvePoint& p : sweep(s)) CHECK(std::abs(*p.y - 1) < 0.05);
}

TEST_CASE("cavity below cutoff is flat and resonances are flagged") {
    CurveSpec s;
    s.family = Family::CavityRatio;
    s.params.omega_ratio = 3.0;
    s.lo = 0.1;
    s.hi = 4.5;  // q0 d = 2x/3 < pi
    s.points = 20;
    const auto flat = sweep(s);
    for (const CurvePoint& p : flat) CHECK(*p.y == *flat.front().y);

    s.lo = 1.5 * kPi - 0.3;  // q0 d = pi sits exactly on the middle point
    s.hi = 1.5 * kPi + 0.3;
    s.points = 3;
    const auto res = sweep(s);
    CHECK_FALSE(res[1].y.has_value());
    CHECK((res[1].flags & kResonanceSkipped) != 0);
    CHECK(res[0].y.has_value());
    CHECK(res[2].y.has_value());
}

TEST_CASE("parallel sweep matches the serial reference bit for bit") {
    for (Family f : {Family::HalfspaceRatio, Family::CavityRatio, Family::DecayPerp, Family::DecayPar}) {
        CurveSpec s;
        s.family = f;
        s.lo = 0.5;
        s.hi = 30;
        s.points = 64;
        s.params.omega_ratio = 3.0;
        const auto a = sweep(s), b = sweep_serial(s);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].x == b[i].x);
            CHECK(a[i].y == b[i].y);
            CHECK(a[i].flags == b[i].flags);
        }
        CHECK(sweep(s)[17].y == a[17].y);
    }
}

TEST_CASE("refinement keeps the coarse samples") {
    CurveSpec coarse;
    coarse.family = Family::DecayPar;
    coarse.lo = 0.1;
    coarse.hi = 40;
    coarse.points = 41;
    CurveSpec fine = coarse;
    fine.points = 81;
    const auto c = sweep(coarse), f = sweep(fine);
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(f[2 * i].x == doctest::Approx(c[i].x).epsilon(1e-14));
        CHECK(*f[2 * i].y == doctest::Approx(*c[i].y).epsilon(1e-12));
    }
    // Linear interpolation of the fine curve at coarse midpoints stays close to the coarse chord.
    for (std::size_t i = 10; i + 1 < c.size(); ++i)
        CHECK(std::abs(*f[2 * i + 1].y - 0.5 * (*c[i].y + *c[i + 1].y)) < 0.02);
}

TEST_CASE("half-space extrema spacing approaches pi in 2 b q0") {
    CurveSpec s;
    s.family = Family::HalfspaceRatio;
    s.params.omega_ratio = 3.0;
    s.lo = 30;
    s.hi = 120;
    s.points = 600;
    const auto ext = find_extrema(sweep(s));
    REQUIRE(ext.size() >= 5);
    for (std::size_t i = 1; i < ext.size(); ++i)
        CHECK(phase_variable(s, ext[i].x) - phase_variable(s, ext[i - 1].x) == doctest::Approx(kPi).epsilon(0.02));
}

TEST_CASE("decay asymptote and estimate") {
    CurveSpec s;
    s.family = Family::DecayPerp;
    s.lo = 200;
    s.hi = 400;
    s.points = 300;
    s.params.beta = 1e-3;
    const auto pts = sweep(s);
    CHECK(estimate_asymptote(pts) == doctest::Approx(analytic_asymptote(s)).epsilon(1e-3));
    CHECK(analytic_asymptote(s) > 1.0);
}
