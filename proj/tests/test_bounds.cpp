#include <doctest.h>

#include "oracles.hpp"
#include "vsl/bounds.hpp"

using namespace vsl;

TEST_CASE("binom")
{
    CHECK(binom(5, 2) == 10);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(7, 0) == 1);
    CHECK(binom(4, -1) == 0);
    CHECK_THROWS_AS(binom(-1, 2), std::domain_error);
    CHECK(binom(200, 100).str() == "90548514656103281165404177077484163874504589675413336841320");
    for (int a = 0; a <= 40; ++a)
        for (int k = 0; k <= a; ++k)
            REQUIRE(binom(a, k) == BigInt(oracles::choose(a, k)));
}

TEST_CASE("h0")
{
    CHECK(h0(2, 3) == 10);
    CHECK(h0(3, 2) == 10);
    CHECK(h0(2, -1) == 0);
    CHECK_THROWS_AS(h0(0, 2), std::domain_error);
}

TEST_CASE("params invariants")
{
    CHECK_THROWS_AS(VeroneseParams(0, 2), std::domain_error);
    CHECK_THROWS_AS(VeroneseParams(2, 0), std::domain_error);
    CHECK_NOTHROW(VeroneseParams(2, 3, -7));
}

TEST_CASE("el_range")
{
    auto r = el_range(VeroneseParams(2, 3), 1);
    CHECK(r.applicable);
    CHECK(*r.lo == 1);
    CHECK(*r.hi == 6);
    r = el_range(VeroneseParams(2, 3), 2);
    CHECK(*r.lo == 7);
    CHECK(*r.hi == 7);
    r = el_range(VeroneseParams(2, 2), 1);
    CHECK_FALSE(r.applicable);
    CHECK(*r.lo == 1);
    CHECK(*r.hi == 3);
    r = el_range(VeroneseParams(2, 4), 2);
    CHECK(*r.lo == 10);
    CHECK(*r.hi == 12);
    CHECK_THROWS_AS(el_range(VeroneseParams(2, 3), 0), std::domain_error);
    CHECK_THROWS_AS(el_range(VeroneseParams(2, 3), 3), std::domain_error);
    CHECK(el_range(VeroneseParams(2, 3), 1).contains(6));
    CHECK_FALSE(el_range(VeroneseParams(2, 3), 1).contains(7));
}

TEST_CASE("closed-form bounds")
{
    CHECK(linear_conj_bound(VeroneseParams(2, 3)) == 7);
    CHECK(linear_conj_bound(VeroneseParams(3, 4)) == 22);
    CHECK(linear_conj_bound(VeroneseParams(2, 4)) == 11);
    CHECK_THROWS_AS(linear_conj_bound(VeroneseParams(1, 4)), std::domain_error);

    CHECK(main_thm_bound(VeroneseParams(3, 2)) == 7);
    CHECK(main_thm_bound(VeroneseParams(3, 4)) == 25);
    CHECK(main_thm_bound(VeroneseParams(4, 1)) == 4);
    CHECK_THROWS_AS(main_thm_bound(VeroneseParams(2, 4)), std::domain_error);

    CHECK(qn_thm_bound(VeroneseParams(2, 3)) == 6);
    CHECK(qn_thm_bound(VeroneseParams(2, 4)) == 9);
    CHECK(qn_thm_bound(VeroneseParams(3, 4)) == 30);
    CHECK_THROWS_AS(qn_thm_bound(VeroneseParams(2, 2)), std::domain_error);

    CHECK(projection_codim(VeroneseParams(3, 2)) == 6);
    CHECK(projection_codim(VeroneseParams(2, 3)) == 4);
    CHECK(projection_codim(VeroneseParams(1, 5)) == 1);

    CHECK(green_vanishing_bound(VeroneseParams(2, 2, -1), 1) == 3);
    CHECK(green_vanishing_bound(VeroneseParams(3, 1, -1), 1) == 1);
    CHECK(green_vanishing_bound(VeroneseParams(2, 3, 0), 1) == 10);
    CHECK_THROWS(green_vanishing_bound(VeroneseParams(2, 3), -1));

    CHECK(gb_bound(3) == 7);
    CHECK(gb_bound(4) == 10);
    CHECK(gb_bound(1) == 1);
}

TEST_CASE("main bound at n = 3")
{
    // main_thm_bound at n=3 is C(d+2,3)+d+1, not C(d+2,3)+d+n-1
    for (int d = 1; d <= 10; ++d)
        CHECK(main_thm_bound(VeroneseParams(3, d)) == binom(d + 2, 3) + d + 1);
}

TEST_CASE("duality_partner")
{
    CHECK(duality_partner(VeroneseParams(2, 3), 7, 2) == DualIndex{0, 1, -3});
    CHECK(duality_partner(VeroneseParams(1, 3), 1, 1) == DualIndex{1, 1, -2});
    CHECK(duality_partner(VeroneseParams(2, 5), 4, 2).q == 1);
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d)
            for (int b = -4; b <= 2; ++b)
                for (int p = -2; p <= 12; ++p)
                    for (int q = 0; q <= 4; ++q) {
                        const VeroneseParams par(n, d, b);
                        const auto x = duality_partner(par, p, q);
                        const auto y = duality_partner(VeroneseParams(n, d, x.b), x.p, x.q);
                        REQUIRE(y == DualIndex{p, q, b});
                    }
}

TEST_CASE("Pascal and ordering invariants")
{
    for (int n = 1; n <= 7; ++n) {
        for (int d = 1; d <= 12; ++d) {
            const VeroneseParams par(n, d);
            REQUIRE(binom(d + n, n) - binom(d + n - 1, n - 1) == binom(d + n - 1, n));
            REQUIRE(projection_codim(par) == h0(n, d) - h0(n, d - 1));
            if (n >= 2 && d >= n + 1) {
                REQUIRE(*el_range(par, 1).hi + 1 == linear_conj_bound(par));
                REQUIRE(qn_thm_bound(par) == *el_range(par, n).lo - 1);
            }
            if (n >= 3) {
                REQUIRE(main_thm_bound(par) >= linear_conj_bound(par));
                REQUIRE((main_thm_bound(par) == linear_conj_bound(par)) == (d == 1));
                REQUIRE(binom(d - 2 + n, n) + projection_codim(par) == main_thm_bound(par));
            }
        }
    }
}

TEST_CASE("bounds beyond 64 bits")
{
    const auto v = main_thm_bound(VeroneseParams(40, 60));
    CHECK(v > BigInt(std::numeric_limits<long long>::max()));
    CHECK_THROWS_AS(to_ll(v), std::overflow_error);
}
