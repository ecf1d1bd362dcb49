#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "reebcert/json_io.hpp"

using namespace reebcert;

TEST_CASE("rational strings")
{
    CHECK(rational_to_string(Rational(-3, 7)) == "-3/7");
    CHECK(rational_to_string(Rational(4)) == "4");
    CHECK(rational_from_string("-3/7") == Rational(-3, 7));
    CHECK(rational_from_string("4") == Rational(4));
    CHECK_THROWS(rational_from_string("1/0"));
}

TEST_CASE("ring elements round-trip")
{
    std::mt19937 rng(41);
    std::uniform_int_distribution<std::int64_t> exp(-3, 3);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        GroupRingElem e(2);
        for (int i = 0; i < 4; ++i)
            e = e + GroupRingElem::term({exp(rng), exp(rng)}, Rational(num(rng), 3));
        CHECK(elem_from_json(elem_to_json(e), 2) == e);
    }
    CHECK_THROWS(elem_from_json(json::array({{Monomial{1, 2}, "1"}}), 1));
}

TEST_CASE("matrices round-trip row-major")
{
    RingMatrix m(2, 3, 1);
    m.at(0, 1) = GroupRingElem::t_power(2, Rational(1, 2));
    m.at(1, 2) = GroupRingElem::one(1) - GroupRingElem::t_power(-1);
    const json j = matrix_to_json(m);
    CHECK(j.size() == 2);
    CHECK(j.at(0).size() == 3);
    CHECK(matrix_from_json(j, 1) == m);
}

TEST_CASE("monodromy round-trip")
{
    const Monodromy m{2, 1, 1, 1};
    CHECK(monodromy_to_json(m) == json::array({2, 1, 1, 1}));
    CHECK(monodromy_from_json(monodromy_to_json(m)) == m);
    CHECK_THROWS(monodromy_from_json(json::array({1, 2})));
}

TEST_CASE("profiles round-trip")
{
    const auto lin = AngularProfile::linear(2.5, 0.25);
    const auto lin2 = profile_from_json(profile_to_json(lin));
    CHECK(lin2.is_linear());
    CHECK(lin2.slope() == doctest::Approx(2.5));
    CHECK(lin2.phase() == doctest::Approx(0.25));

    const auto pw = AngularProfile::piecewise(
        {{0.0, 0.0}, {3.0, 5.0}, {2 * 3.14159265358979323846, 7.0}});
    const auto pw2 = profile_from_json(profile_to_json(pw));
    CHECK_FALSE(pw2.is_linear());
    CHECK(pw2.delta() == doctest::Approx(pw.delta()));
    CHECK(pw2.eval(1.7) == doctest::Approx(pw.eval(1.7)));
}

TEST_CASE("enumeration schema")
{
    const auto fin = enumeration_to_json(enumerate_t3(2, {1, 0}));
    CHECK(fin.at("kind") == "finite");
    CHECK(fin.at("orbits").size() == 2);
    CHECK(fin.at("orbits").at(1).contains("turns"));

    const Monodromy m{2, 1, 1, 1};
    const auto shift = enumeration_to_json(
        enumerate_bundle(m, compatible_linear_profile(m, 1), {1, 0}));
    CHECK(shift.at("kind") == "shift");
    CHECK(shift.at("rule").at("monodromy") == json::array({2, 1, 1, 1}));
    CHECK(shift.at("rule").at("samples").size() == 5);
}

TEST_CASE("automorphisms round-trip")
{
    const MonomialAutomorphism fin(
        {1, 2, 0}, {UnitMonomial{1, {0, 0}}, UnitMonomial{-1, {2, -1}},
                    UnitMonomial{Rational(1, 2), {0, 3}}});
    CHECK(automorphism_from_json(automorphism_to_json(fin)) == fin);

    const MonomialAutomorphism shift(
        2, UnitMonomial{1, {0}}, {{3, UnitMonomial{1, {1}}}});
    CHECK(automorphism_from_json(automorphism_to_json(shift)) == shift);
}

TEST_CASE("certificate schema")
{
    const MonomialAutomorphism swap2({1, 0},
                                     {UnitMonomial::one(1), UnitMonomial::one(1)});
    CHECK(certificate_to_json(order(swap2)) == json{{"order", 2}});

    const MonomialAutomorphism s(1, UnitMonomial::one(1));
    const auto j = certificate_to_json(order(s));
    CHECK(j.at("order") == "infinite");
    CHECK(j.at("witness").at("kind") == "shift");
}

TEST_CASE("census and shooting serialization")
{
    CriticalCensus c;
    c.maxima = 4;
    c.saddles = 8;
    CriticalPoint p;
    p.kind = MorseKind::Maximum;
    c.points.push_back(p);
    const auto no_points = census_to_json(c, false);
    CHECK_FALSE(no_points.contains("points"));
    const auto with_points = census_to_json(c, true);
    CHECK(with_points.at("points").at(0).at("kind") == "maximum");

    ShootingResult r;
    r.theta_star = 1.5;
    r.class_winding = {1, 0};
    const auto js = shooting_to_json({r});
    CHECK(js.at(0).at("class") == json::array({1, 0}));
}
