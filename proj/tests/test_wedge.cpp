#include <doctest.h>

#include "oracles.hpp"
#include "vsl/wedge.hpp"

using namespace vsl;

namespace {

const Fp P = kPinnedPrimes[0];

WedgeVector random_vector(oracles::Gen& g, std::size_t p, std::size_t N, int terms)
{
    WedgeVector v(p, N, P);
    for (int i = 0; i < terms; ++i)
        v.add(WedgeBasisElement(g.subset(N, p)), 1 + g.below(P - 1));
    return v;
}

Functional random_functional(oracles::Gen& g, std::size_t N, double zeros = 0.0)
{
    Functional f;
    f.prime = P;
    for (std::size_t i = 0; i < N; ++i)
        f.coefficients.push_back(g.coin(zeros) ? 0 : Fp(g.below(P)));
    return f;
}

}  // namespace

TEST_CASE("rank and unrank")
{
    CHECK(wedge_rank(WedgeBasisElement({4})) == 4);
    CHECK(wedge_rank(WedgeBasisElement({0, 1})) == 0);
    CHECK(wedge_rank(WedgeBasisElement({0, 2})) == 1);
    CHECK(wedge_rank(WedgeBasisElement({1, 2})) == 2);
    CHECK_THROWS(WedgeBasisElement({2, 1}));
    CHECK_THROWS(WedgeBasisElement({1, 1}));
    CHECK_THROWS_AS(wedge_unrank(2, 3, 3), std::domain_error);
    for (std::uint32_t N = 0; N <= 12; ++N)
        for (std::uint32_t p = 0; p <= std::min<std::uint32_t>(N, 6); ++p) {
            const auto subsets = oracles::colex_subsets(N, p);
            REQUIRE(subsets.size() == binom64(N, p));
            for (std::size_t r = 0; r < subsets.size(); ++r) {
                const auto e = wedge_unrank(p, r, N);
                REQUIRE(e.indices == subsets[r]);
                REQUIRE(wedge_rank(e) == r);
            }
        }
    CHECK_THROWS_AS(binom64(200, 100), std::overflow_error);
}

TEST_CASE("deletion signs")
{
    const WedgeBasisElement e({1, 4, 6});
    CHECK(deletion_sign(e, 0) == 1);
    CHECK(deletion_sign(e, 1) == -1);
    CHECK(deletion_sign(e, 2) == 1);
    CHECK(e.without(1).indices == std::vector<std::uint32_t>{1, 6});
}

TEST_CASE("contraction basics")
{
    // iota(v1 ^ v2) = phi(v1) v2 - phi(v2) v1
    Functional phi{{0, 3, 5}, P};
    WedgeVector v(2, 3, P);
    v.add(WedgeBasisElement({1, 2}), 1);
    const auto c = contract(phi, v);
    CHECK(c.coefficient(WedgeBasisElement({2})) == 3);
    CHECK(c.coefficient(WedgeBasisElement({1})) == P - 5);

    Functional dual{{1, 0, 0}, P};
    WedgeVector w(2, 3, P);
    w.add(WedgeBasisElement({0, 2}), 1);
    const auto cw = contract(dual, w);
    CHECK(cw.nnz() == 1);
    CHECK(cw.coefficient(WedgeBasisElement({2})) == 1);

    WedgeVector scalar(0, 3, P);
    scalar.add(WedgeBasisElement(std::vector<std::uint32_t>{}), 7);
    CHECK(contract(phi, scalar).is_zero());
}

TEST_CASE("contraction is a square-zero linear map")
{
    oracles::Gen g(11);
    for (int t = 0; t < 200; ++t) {
        const std::size_t N = g.range(2, 10), p = g.range(1, std::min<int>(5, N));
        const auto phi = random_functional(g, N, 0.2), psi = random_functional(g, N, 0.2);
        const auto v = random_vector(g, p, N, 5), w = random_vector(g, p, N, 5);
        REQUIRE(contract(phi, contract(phi, v)).is_zero());
        auto vw = v;
        vw += w.scaled(3);
        auto lhs = contract(phi, vw), rhs = contract(phi, v);
        rhs += contract(phi, w).scaled(3);
        REQUIRE(lhs == rhs);
        // anticommutation of two contractions
        auto ab = contract(phi, contract(psi, v));
        ab += contract(psi, contract(phi, v));
        REQUIRE(ab.is_zero());
    }
}

TEST_CASE("determinant")
{
    CHECK(determinant_mod({2, 1, 1, 3}, 2, P) == 5);
    CHECK(determinant_mod({1, 2, 2, 4}, 2, P) == 0);
    CHECK(determinant_mod({0, 1, 1, 0}, 2, P) == P - 1);
    CHECK(determinant_mod({}, 0, P) == 1);
}

TEST_CASE("alpha_s")
{
    oracles::Gen g(3);
    SUBCASE("s = 1 is contraction")
    {
        for (int t = 0; t < 50; ++t) {
            const auto phi = random_functional(g, 6);
            const auto v = random_vector(g, 3, 6, 4);
            const std::vector<Functional> fs{phi};
            REQUIRE(alpha_s(fs, v) == contract(phi, v));
        }
    }
    SUBCASE("paired block gives +-u")
    {
        // w1 = e0, w2 = e1 dual to the functionals, u = e2 killed by both
        std::vector<Functional> fs{{{1, 0, 0, 0}, P}, {{0, 1, 0, 0}, P}};
        WedgeVector v(3, 4, P);
        v.add(WedgeBasisElement({0, 1, 2}), 1);
        const auto a = alpha_s(fs, v);
        REQUIRE(a.nnz() == 1);
        const Fp c = a.coefficient(WedgeBasisElement({2}));
        CHECK((c == 1 || c == P - 1));
    }
    SUBCASE("equals the composite of contractions up to one global sign")
    {
        // (n,d) = (2,2): N = 6, s = 3, p = 5
        int sign = 0;
        for (int t = 0; t < 100; ++t) {
            std::vector<Functional> fs;
            for (int k = 0; k < 3; ++k)
                fs.push_back(random_functional(g, 6));
            const auto v = random_vector(g, 5, 6, 3);
            const auto a = alpha_s(fs, v);
            auto comp = v;
            for (const auto& f : fs)
                comp = contract(f, comp);
            if (a.is_zero() && comp.is_zero())
                continue;
            const int here = a == comp ? 1 : a == comp.scaled(P - 1) ? -1 : 0;
            REQUIRE(here != 0);
            if (sign == 0)
                sign = here;
            REQUIRE(here == sign);
        }
        CHECK(sign != 0);
    }
    SUBCASE("gamma is alternating")
    {
        std::vector<Functional> fs{random_functional(g, 5), random_functional(g, 5)};
        const auto v = random_vector(g, 3, 5, 4);
        auto swapped = fs;
        std::swap(swapped[0], swapped[1]);
        auto sum = alpha_s(fs, v);
        sum += alpha_s(swapped, v);
        CHECK(sum.is_zero());
    }
    SUBCASE("p <= s is refused")
    {
        std::vector<Functional> fs{random_functional(g, 5), random_functional(g, 5)};
        CHECK_THROWS_AS(alpha_s(fs, random_vector(g, 2, 5, 2)), std::domain_error);
        CHECK_NOTHROW(detail::alpha_contract(fs, random_vector(g, 2, 5, 2)));
    }
}
