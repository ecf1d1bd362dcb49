#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "reebcert/orbit_enum.hpp"

using namespace reebcert;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2 * pi;

double ang_dist(double a, double b)
{
    double d = std::fmod(std::abs(a - b), two_pi);
    return std::min(d, two_pi - d);
}
} // namespace

TEST_CASE("monodromy classification trichotomy")
{
    CHECK(classify_monodromy({0, -1, 1, 0}).kind == MonodromyKind::Elliptic);
    CHECK(classify_monodromy({0, -1, 1, 0}).order == 4);
    CHECK(classify_monodromy({0, -1, 1, 1}).order == 6);  // trace 1
    CHECK(classify_monodromy({0, -1, 1, -1}).order == 3); // trace -1
    CHECK(classify_monodromy({1, 1, 0, 1}).kind == MonodromyKind::Parabolic);
    CHECK(classify_monodromy({2, 1, 1, 1}).kind == MonodromyKind::Hyperbolic);
    CHECK(classify_monodromy({1, 0, 0, 1}).kind == MonodromyKind::Identity);
    CHECK(classify_monodromy({-1, 0, 0, -1}).kind == MonodromyKind::MinusIdentity);
    CHECK_THROWS(classify_monodromy({2, 0, 0, 1}));
}

TEST_CASE("elliptic orders are exact powers")
{
    for (const Monodromy m : {Monodromy{0, -1, 1, 0}, Monodromy{0, -1, 1, 1},
                              Monodromy{0, -1, 1, -1}}) {
        const auto cls = classify_monodromy(m);
        Monodromy p{1, 0, 0, 1};
        for (int k = 1; k < cls.order; ++k) {
            p = p * m;
            CHECK_FALSE(p == Monodromy{1, 0, 0, 1});
        }
        CHECK(p * m == Monodromy{1, 0, 0, 1});
    }
}

TEST_CASE("class orbits")
{
    const ClassOrbit fixed = class_orbit({1, 1, 0, 1}, {1, 0});
    REQUIRE(fixed.finite);
    CHECK(fixed.vectors == std::vector<std::array<std::int64_t, 2>>{{1, 0}});

    CHECK_FALSE(class_orbit({1, 1, 0, 1}, {0, 1}).finite);
    CHECK_FALSE(class_orbit({2, 1, 1, 1}, {1, 0}).finite);

    const ClassOrbit quarter = class_orbit({0, -1, 1, 0}, {1, 0});
    REQUIRE(quarter.finite);
    CHECK(quarter.vectors.size() == 4);
}

TEST_CASE("parabolic orbit finite exactly on eigendirections")
{
    // Iteration oracle: norms must strictly grow off the eigendirection.
    const Monodromy m{1, 1, 0, 1};
    std::array<std::int64_t, 2> w{0, 1};
    std::int64_t prev = 1;
    for (int k = 0; k < 20; ++k) {
        w = m.apply(w);
        const std::int64_t norm2 = w[0] * w[0] + w[1] * w[1];
        CHECK(norm2 > prev);
        prev = norm2;
    }
}

TEST_CASE("fiber class validation")
{
    CHECK_THROWS(validate_fiber_class({0, 0}));
    CHECK_THROWS(validate_fiber_class({2, 2}));
    CHECK_NOTHROW(validate_fiber_class({2, 1}));
    CHECK_NOTHROW(validate_fiber_class({-1, 0}));
}

TEST_CASE("enumerate_t3 spec angles")
{
    const auto e1 = enumerate_t3(2, {1, 0});
    REQUIRE(e1.orbits.size() == 2);
    CHECK(e1.orbits[0].theta == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(e1.orbits[1].theta == doctest::Approx(pi).epsilon(1e-14));
    REQUIRE(e1.orbits[1].turns.has_value());
    CHECK(e1.orbits[1].turns->first == 1);
    CHECK(e1.orbits[1].turns->second == 2);

    const auto e2 = enumerate_t3(1, {0, 1});
    REQUIRE(e2.orbits.size() == 1);
    CHECK(e2.orbits[0].theta == doctest::Approx(pi / 2).epsilon(1e-14));

    const auto e3 = enumerate_t3(3, {-1, 0});
    REQUIRE(e3.orbits.size() == 3);
    CHECK(e3.orbits[0].theta == doctest::Approx(pi / 3).epsilon(1e-14));
    CHECK(e3.orbits[1].theta == doctest::Approx(pi).epsilon(1e-14));
    CHECK(e3.orbits[2].theta == doctest::Approx(5 * pi / 3).epsilon(1e-14));
}

TEST_CASE("enumerate_t3 counts and direction residuals")
{
    for (int n = 1; n <= 12; ++n) {
        const auto e = enumerate_t3(n, {1, 0});
        CHECK(e.orbits.size() == static_cast<std::size_t>(n));
    }
    for (int n = 1; n <= 6; ++n)
        for (const FiberClass cls : {FiberClass{1, 0}, FiberClass{1, 1},
                                     FiberClass{2, 1}, FiberClass{-3, 5}}) {
            const auto e = enumerate_t3(n, cls);
            REQUIRE(e.orbits.size() == static_cast<std::size_t>(n));
            const double norm = std::hypot(static_cast<double>(cls.p),
                                           static_cast<double>(cls.q));
            for (const auto &o : e.orbits) {
                const double cx = std::cos(n * o.theta), sx = std::sin(n * o.theta);
                CHECK(std::abs(cx * cls.q - sx * cls.p) / norm < 1e-10);
                CHECK(cx * cls.p + sx * cls.q > 0);
            }
        }
    CHECK_THROWS(enumerate_t3(0, {1, 0}));
    CHECK_THROWS(enumerate_t3(2, {2, 4}));
}

TEST_CASE("angular profiles: evaluation and period solving")
{
    const auto lin = AngularProfile::linear(2.0, 0.5);
    CHECK(lin.delta() == doctest::Approx(4 * pi));
    CHECK(lin.eval(1.0) == doctest::Approx(2.5));

    const auto pw = AngularProfile::piecewise({{0.0, 0.0}, {pi, 3 * pi}, {two_pi, 4 * pi}});
    CHECK(pw.delta() == doctest::Approx(4 * pi));
    CHECK(pw.eval(pi) == doctest::Approx(3 * pi));
    CHECK(pw.eval(pi + two_pi) == doctest::Approx(7 * pi));

    // f covers [0, 4pi): two solutions of f = 0 mod 2pi.
    const auto roots = pw.solve_in_period(0.0);
    REQUIRE(roots.size() == 2);
    for (double r : roots) CHECK(ang_dist(pw.eval(r), 0.0) < 1e-9);

    CHECK_THROWS(AngularProfile::linear(-1.0));
    CHECK_THROWS(AngularProfile::piecewise({{0.0, 0.0}, {two_pi, -1.0}}));
    CHECK_THROWS(AngularProfile::piecewise({{0.1, 0.0}, {two_pi, 1.0}}));
}

TEST_CASE("seam compatibility residual")
{
    // Identity gluing: any integer slope closes up.
    CHECK(bundle_seam_residual({1, 0, 0, 1}, AngularProfile::linear(2.0)) < 1e-12);
    // Quarter turn against a full period does not.
    CHECK(bundle_seam_residual({0, -1, 1, 0}, AngularProfile::linear(1.0)) > 0.5);

    for (const Monodromy m : {Monodromy{1, 0, 0, 1}, Monodromy{0, -1, 1, 0},
                              Monodromy{1, 1, 0, 1}, Monodromy{2, 1, 1, 1}})
        for (int n = 1; n <= 3; ++n)
            for (double phase : {0.0, 0.3, 1.5}) {
                const auto p = compatible_linear_profile(m, n, phase);
                CHECK(bundle_seam_residual(m, p) < 1e-9);
                CHECK(p.delta() > 2 * (n - 1) * pi);
                CHECK(p.delta() <= 2 * n * pi + 1e-12);
            }
}

TEST_CASE("enumerate_bundle with identity gluing matches enumerate_t3")
{
    const auto bundle = enumerate_bundle({1, 0, 0, 1}, AngularProfile::linear(2.0),
                                         {1, 0});
    const auto t3 = enumerate_t3(2, {1, 0});
    REQUIRE(bundle.kind == OrbitEnumeration::Kind::Finite);
    REQUIRE(bundle.orbits.size() == t3.orbits.size());
    for (std::size_t i = 0; i < t3.orbits.size(); ++i)
        CHECK(ang_dist(bundle.orbits[i].theta, t3.orbits[i].theta) < 1e-9);
}

TEST_CASE("parabolic bundle: fixed class finite, moving class shift-indexed")
{
    const Monodromy m{1, 1, 0, 1};
    const auto profile = compatible_linear_profile(m, 1, pi / 2);
    const auto fixed = enumerate_bundle(m, profile, {1, 0});
    CHECK(fixed.kind == OrbitEnumeration::Kind::Finite);
    CHECK(fixed.orbits.size() == 1);

    const auto moving = enumerate_bundle(m, profile, {0, 1});
    REQUIRE(moving.kind == OrbitEnumeration::Kind::ShiftIndexed);
    REQUIRE(moving.rule.has_value());
    for (std::int64_t k = -2; k <= 2; ++k) {
        const auto thetas = shift_thetas_for_lift(*moving.rule, k);
        CHECK_FALSE(thetas.empty());
    }
}

TEST_CASE("hyperbolic bundle is always shift-indexed")
{
    const Monodromy m{2, 1, 1, 1};
    const auto profile = compatible_linear_profile(m, 2);
    for (const FiberClass cls : {FiberClass{1, 0}, FiberClass{0, 1}, FiberClass{1, 1}})
        CHECK(enumerate_bundle(m, profile, cls).kind ==
              OrbitEnumeration::Kind::ShiftIndexed);
}

TEST_CASE("incompatible profile is rejected with a residual")
{
    CHECK_THROWS(enumerate_bundle({0, -1, 1, 0}, AngularProfile::linear(1.0), {1, 0}));
}
