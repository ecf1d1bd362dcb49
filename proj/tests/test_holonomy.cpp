#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "reebcert/automorphism.hpp"
#include "reebcert/complexes.hpp"

using namespace reebcert;

namespace {

// gamma_k -> gamma_{k+1 mod n}, with e^{A_{x,theta}} on the wrap-around.
MonomialAutomorphism t3_loop(int n)
{
    LoopData loop;
    loop.orbit_permutation.resize(n);
    loop.torus_classes.assign(n, Monomial{0, 0});
    for (int k = 0; k < n; ++k) loop.orbit_permutation[k] = (k + 1) % n;
    loop.torus_classes[n - 1] = Monomial{1, 0};
    return automorphism_from_loop(loop);
}

} // namespace

TEST_CASE("loop automorphism matrix for the rotating T^3 family")
{
    const auto eta = t3_loop(3);
    const RingMatrix m = eta.to_matrix();
    // Column k carries gamma_k to gamma_{k+1}; the last column has e^{A_{x,theta}}.
    CHECK(m.at(1, 0) == GroupRingElem::one(2));
    CHECK(m.at(2, 1) == GroupRingElem::one(2));
    CHECK(m.at(0, 2) == GroupRingElem::term({1, 0}, 1));
    CHECK(m.at(0, 0).is_zero());
}

TEST_CASE("pure multiplication loops")
{
    LoopData loop;
    loop.orbit_permutation = {0, 1};
    loop.torus_classes = {Monomial{0, 0, 1}, Monomial{0, 0, 1}};
    const auto a = automorphism_from_loop(loop);
    CHECK(a.perm() == std::vector<int>{0, 1});
    for (const auto &u : a.multipliers()) CHECK(u.exp == Monomial{0, 0, 1});
    CHECK_THROWS(automorphism_from_loop({{0, 0}, {Monomial{0}, Monomial{0}}}));
}

TEST_CASE("composition and inverses")
{
    const auto eta = t3_loop(2);
    CHECK((eta * eta.inverse()).is_identity());
    CHECK((eta.inverse() * eta).is_identity());

    // Squared: diagonal with both entries e^{A_{x,theta}}.
    const auto sq = eta * eta;
    CHECK(sq.perm() == std::vector<int>{0, 1});
    CHECK(sq.multipliers()[0].exp == Monomial{1, 0});
    CHECK(sq.multipliers()[1].exp == Monomial{1, 0});

    const MonomialAutomorphism s1(1, UnitMonomial::one(1));
    const MonomialAutomorphism s2(2, UnitMonomial::one(1));
    CHECK((s1 * s2).shift() == 3);
    CHECK((s1 * s1.inverse()).is_identity());
}

TEST_CASE("composition is associative")
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::int64_t> exp(-3, 3);
    auto random_aut = [&](int n) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<UnitMonomial> mult;
        for (int i = 0; i < n; ++i)
            mult.push_back({rng() % 2 ? Rational(1) : Rational(-1),
                            Monomial{exp(rng), exp(rng)}});
        return MonomialAutomorphism(std::move(perm), std::move(mult));
    };
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_aut(5), b = random_aut(5), c = random_aut(5);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a.to_matrix() * b.to_matrix() == (a * b).to_matrix());
    }
}

TEST_CASE("order certificates")
{
    for (int n = 1; n <= 6; ++n) {
        const auto cert = order(t3_loop(n));
        CHECK_FALSE(cert.finite);
        CHECK(cert.witness_kind == "cycle-twist");
        CHECK(cert.witness_twist == Monomial{1, 0});
    }

    const MonomialAutomorphism swap2({1, 0}, {UnitMonomial::one(1), UnitMonomial::one(1)});
    const auto c2 = order(swap2);
    REQUIRE(c2.finite);
    CHECK(c2.order == 2);

    const MonomialAutomorphism neg({0}, {UnitMonomial{-1, Monomial{0}}});
    CHECK(order(neg).order == 2);

    const MonomialAutomorphism dbl({0}, {UnitMonomial{2, Monomial{0}}});
    const auto cd = order(dbl);
    CHECK_FALSE(cd.finite);
    CHECK(cd.witness_kind == "coefficient");

    CHECK(order(MonomialAutomorphism(1, UnitMonomial::one(1))).witness_kind == "shift");
    CHECK(order(MonomialAutomorphism(0, UnitMonomial{-1, Monomial{0}})).order == 2);
    const auto twisted_tail = order(MonomialAutomorphism(0, UnitMonomial{1, Monomial{2}}));
    CHECK_FALSE(twisted_tail.finite);
}

TEST_CASE("order certificate soundness against brute force")
{
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> size(1, 5);
    std::uniform_int_distribution<std::int64_t> exp(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = size(rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<UnitMonomial> mult;
        for (int i = 0; i < n; ++i)
            mult.push_back({rng() % 2 ? Rational(1) : Rational(-1),
                            rng() % 2 ? Monomial{0} : Monomial{exp(rng)}});
        const MonomialAutomorphism a(perm, mult);
        const auto cert = order(a);

        // Any finite order divides lcm of (cycle length * 2), so powering up
        // to that bound decides the question.
        std::int64_t bound = 1;
        {
            std::vector<bool> seen(n, false);
            for (int s = 0; s < n; ++s) {
                if (seen[s]) continue;
                std::int64_t len = 0;
                for (int i = s; !seen[i]; i = a.perm()[i]) {
                    seen[i] = true;
                    ++len;
                }
                bound = std::lcm(bound, 2 * len);
            }
        }
        std::int64_t brute = 0;
        MonomialAutomorphism p = a;
        for (std::int64_t j = 1; j <= bound; ++j) {
            if (p.is_identity()) {
                brute = j;
                break;
            }
            p = a * p;
        }
        if (cert.finite) {
            CHECK(cert.order == brute);
        } else {
            CHECK(brute == 0);
        }
    }
}

TEST_CASE("subgroup rank of commuting pure multiplications")
{
    auto pure = [](int n, const Monomial &e) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        return MonomialAutomorphism(perm, std::vector<UnitMonomial>(n, {1, e}));
    };

    Monomial a14(9, 0), a24(9, 0), a34(9, 0);
    a14[2] = 1;
    a24[5] = 1;
    a34[7] = 1;
    CHECK(subgroup_rank({pure(4, a14), pure(4, a24), pure(4, a34)}) == 3);
    CHECK(subgroup_rank({pure(1, Monomial{1})}) == 1);
    CHECK(subgroup_rank({pure(2, Monomial{1, 1}), pure(2, Monomial{1, 1})}) == 1);
    CHECK(subgroup_rank({pure(2, Monomial{1, 0}), pure(2, Monomial{0, 1}),
                         pure(2, Monomial{1, 1})}) == 2);

    CHECK_THROWS(subgroup_rank({t3_loop(2)}));
    CHECK_THROWS(subgroup_rank({MonomialAutomorphism(1, UnitMonomial::one(1))}));
}

TEST_CASE("induced action on homology")
{
    const GradedComplex c = build_morse_bott(std::vector<OrbitGeneratorPair>(3),
                                             MorseBottMode::Full, 1, Monomial{1});
    const auto hm1 = homology(c, -1);

    // Multiplication by t reduces to the identity modulo (1-t).
    std::vector<int> id{0, 1, 2};
    const MonomialAutomorphism mult_t(
        id, std::vector<UnitMonomial>(3, UnitMonomial{1, Monomial{1}}));
    CHECK(act_on_homology(mult_t, hm1).is_identity());

    // The identity stays the identity, and a free presentation is untouched.
    const auto ident = MonomialAutomorphism::identity_finite(3, 1);
    CHECK(act_on_homology(ident, hm1).is_identity());

    HomologyPresentation free_h;
    free_h.generators = 2;
    free_h.relations = RingMatrix(2, 0, 2);
    const auto eta = t3_loop(2);
    CHECK(act_on_homology(eta, free_h) == eta);
}

TEST_CASE("non-chain-maps are rejected")
{
    // Relations (1-t^2) gamma_0 = 0 and (1-t^3) gamma_1 = 0: swapping the
    // generators does not preserve the relation submodule.
    HomologyPresentation h;
    h.degree = -1;
    h.generators = 2;
    h.relations = RingMatrix(2, 2, 1);
    h.relations.at(0, 0) = GroupRingElem::one(1) - GroupRingElem::t_power(2);
    h.relations.at(1, 1) = GroupRingElem::one(1) - GroupRingElem::t_power(3);
    const MonomialAutomorphism swap2({1, 0},
                                     {UnitMonomial::one(1), UnitMonomial::one(1)});
    CHECK_THROWS(act_on_homology(swap2, h));
}

TEST_CASE("marked-point morphisms")
{
    const auto e = eta_k(1, 2);
    CHECK(e.degree_shift == 2);
    CHECK(e.multiplier == GroupRingElem::t_power(1));
    CHECK(compose_with_degree(e, 3).multiplier == GroupRingElem::t_power(1, 3));

    const auto e2 = eta_k(2, 3);
    CHECK(e2.degree_shift == 4);
    CHECK(e2.multiplier == GroupRingElem::t_power(1, 2));

    // Additivity is multiplier addition.
    CHECK((eta_k(1, 2) + eta_k(4, 2)).multiplier == eta_k(5, 2).multiplier);
    CHECK_THROWS(eta_k(1, 2) + eta_k(1, 3));
    CHECK_THROWS(eta_k(1, 1));

    CHECK(eta_k(0, 2).multiplier.is_zero());
}
