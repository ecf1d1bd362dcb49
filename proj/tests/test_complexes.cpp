#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reebcert/complexes.hpp"
#include "reebcert/laurent_snf.hpp"

using namespace reebcert;

namespace {

bool associates(const GroupRingElem &a, const GroupRingElem &b)
{
    return laurent_divides(a, b) && laurent_divides(b, a);
}

const GroupRingElem one_minus_t = GroupRingElem::one(1) - GroupRingElem::t_power(1);

} // namespace

TEST_CASE("zero differentials form a complex")
{
    GradedComplex c;
    c.ring_rank = 1;
    c.rank_at_degree[0] = 2;
    c.rank_at_degree[-1] = 2;
    c.differentials.emplace(0, RingMatrix(2, 2, 1));
    CHECK(verify_complex(c));
}

TEST_CASE("(1-t) twice is not a complex")
{
    GradedComplex c;
    c.ring_rank = 1;
    c.rank_at_degree[1] = 1;
    c.rank_at_degree[0] = 1;
    c.rank_at_degree[-1] = 1;
    RingMatrix d(1, 1, 1);
    d.at(0, 0) = one_minus_t;
    c.differentials.emplace(1, d);
    c.differentials.emplace(0, d);
    CHECK_FALSE(verify_complex(c));
    CHECK_THROWS(homology(c, 0));
}

TEST_CASE("shape mismatch is a structural error")
{
    GradedComplex c;
    c.ring_rank = 1;
    c.rank_at_degree[0] = 2;
    c.rank_at_degree[-1] = 1;
    c.differentials.emplace(0, RingMatrix(2, 2, 1));
    CHECK_THROWS(verify_complex(c));
}

TEST_CASE("quotient-mode orbit complex: free of rank n in both degrees")
{
    for (int n = 1; n <= 5; ++n) {
        const GradedComplex c = build_morse_bott(
            std::vector<OrbitGeneratorPair>(n), MorseBottMode::Quotient, 2, {});
        CHECK(verify_complex(c));
        const auto h0 = homology(c, 0);
        const auto hm1 = homology(c, -1);
        CHECK(h0.generators == n);
        CHECK(hm1.generators == n);
        CHECK(hm1.relations.is_zero());
    }
}

TEST_CASE("full-mode orbit complex: torsion (1-t) at degree -1, zero at degree 0")
{
    for (int n = 1; n <= 5; ++n) {
        const GradedComplex c =
            build_morse_bott(std::vector<OrbitGeneratorPair>(n), MorseBottMode::Full,
                             1, Monomial{1});
        CHECK(verify_complex(c));

        const auto hm1 = homology(c, -1);
        CHECK(hm1.generators == n);
        REQUIRE(hm1.normal_form.has_value());
        REQUIRE(static_cast<int>(hm1.normal_form->size()) == n);
        for (const auto &f : *hm1.normal_form) CHECK(associates(f, one_minus_t));

        const auto h0 = homology(c, 0);
        CHECK(h0.generators == 0);
    }
}

TEST_CASE("full-mode differential is (1-t) times the identity")
{
    const GradedComplex c = build_morse_bott(std::vector<OrbitGeneratorPair>(3),
                                             MorseBottMode::Full, 1, Monomial{1});
    const RingMatrix &d = c.differentials.at(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(d.at(i, j) == (i == j ? one_minus_t : GroupRingElem::zero(1)));
}

TEST_CASE("empty complex has zero homology")
{
    GradedComplex c;
    c.ring_rank = 1;
    const auto h = homology(c, 0);
    CHECK(h.generators == 0);
}

TEST_CASE("degree offset moves the generator pair")
{
    const GradedComplex c = build_morse_bott(std::vector<OrbitGeneratorPair>(2),
                                             MorseBottMode::Quotient, 1, {}, 5);
    CHECK(c.rank_at(5) == 2);
    CHECK(c.rank_at(4) == 2);
    CHECK(c.rank_at(0) == 0);
}

TEST_CASE("build_morse_bott rejects bad input")
{
    CHECK_THROWS(build_morse_bott({}, MorseBottMode::Quotient, 1, {}));
    CHECK_THROWS(build_morse_bott(std::vector<OrbitGeneratorPair>(1),
                                  MorseBottMode::Full, 2, Monomial{1}));
    std::vector<OrbitGeneratorPair> bad(1);
    bad[0].degree_top = 3;
    bad[0].degree_bottom = 0;
    CHECK_THROWS(build_morse_bott(bad, MorseBottMode::Quotient, 1, {}));
}

TEST_CASE("multivariate homology needs zero outgoing differential")
{
    GradedComplex c;
    c.ring_rank = 2;
    c.rank_at_degree[0] = 1;
    c.rank_at_degree[-1] = 1;
    RingMatrix d(1, 1, 2);
    d.at(0, 0) = GroupRingElem::one(2) - GroupRingElem::term({1, 0}, 1);
    c.differentials.emplace(0, d);
    CHECK_THROWS(homology(c, 0));
    const auto hm1 = homology(c, -1); // zero outgoing: presentation only
    CHECK(hm1.generators == 1);
    CHECK_FALSE(hm1.normal_form.has_value());
}

TEST_CASE("torus betti numbers")
{
    CHECK(torus_betti(1) == std::vector<long long>{1, 1});
    CHECK(torus_betti(3) == std::vector<long long>{1, 3, 3, 1});
    CHECK(torus_betti(5) == std::vector<long long>{1, 5, 10, 10, 5, 1});
    CHECK_THROWS(torus_betti(0));

    for (int m = 1; m <= 10; ++m) {
        const auto row = torus_betti(m);
        long long sum = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            sum += row[i];
            CHECK(row[i] == row[row.size() - 1 - i]);
        }
        CHECK(sum == (1LL << m));
    }
}
