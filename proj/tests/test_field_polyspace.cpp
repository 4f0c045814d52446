#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "vsl/bounds.hpp"
#include "vsl/field.hpp"
#include "vsl/polyspace.hpp"

using namespace vsl;

TEST_CASE("pinned primes")
{
    for (auto p : kPinnedPrimes) {
        CHECK(is_prime(p));
        CHECK(p < (1u << 31));
        CHECK(p > (1u << 30));
    }
    CHECK(std::set<std::uint32_t>(kPinnedPrimes.begin(), kPinnedPrimes.end()).size() == 10);
    CHECK_FALSE(is_prime(2147483649ull));
    CHECK_THROWS(FieldSpec::prime(2147483646u));
    CHECK_THROWS(FieldSpec::prime(2));
    CHECK(FieldSpec::rationals().name() == "QQ");
    CHECK(FieldSpec::prime(kPinnedPrimes[0]).name() == "GF(2147483647)");
    CHECK(FieldSpec::from_seed(3) == FieldSpec::from_seed(3));
}

TEST_CASE("modular arithmetic")
{
    const Fp p = kPinnedPrimes[1];
    oracles::Gen g(5);
    for (int i = 0; i < 1000; ++i) {
        const Fp a = 1 + g.below(p - 1);
        REQUIRE(modp::mul(a, modp::inv(a, p), p) == 1);
        REQUIRE(modp::add(a, modp::neg(a, p), p) == 0);
    }
    CHECK(modp::from_int(-1, p) == p - 1);
    CHECK_THROWS(modp::inv(0, p));
}

TEST_CASE("monomial bases")
{
    const auto b12 = monomial_basis(1, 2);
    REQUIRE(b12.size() == 3);
    CHECK(b12[0].exponents == std::vector<int>{2, 0});
    CHECK(b12[1].exponents == std::vector<int>{1, 1});
    CHECK(b12[2].exponents == std::vector<int>{0, 2});
    CHECK(monomial_basis(2, 3).size() == 10);
    CHECK(monomial_basis(2, -1).empty());
    CHECK_THROWS_AS(monomial_basis(0, 2), std::domain_error);
    for (int n = 1; n <= 6; ++n)
        for (int m = 0; m <= 12; ++m) {
            const auto B = basis(n, m);
            REQUIRE(B->size() == oracles::forms(n, m));
            for (std::size_t i = 0; i + 1 < B->size(); ++i)
                REQUIRE(grevlex_greater((*B)[i], (*B)[i + 1]));
            if (m <= 6)
                for (std::size_t i = 0; i < B->size(); ++i)
                    REQUIRE(*B->index_of((*B)[i]) == i);
        }
}

TEST_CASE("grevlex order in three variables")
{
    // x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
    const auto b = monomial_basis(2, 2);
    const std::vector<std::vector<int>> want{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    for (std::size_t i = 0; i < want.size(); ++i)
        CHECK(b[i].exponents == want[i]);
}

TEST_CASE("multiply")
{
    const Monomial a{{2, 0}}, b{{1, 1}}, one{{0, 0}};
    CHECK(multiply(a, b).exponents == std::vector<int>{3, 1});
    CHECK(multiply(a, one) == a);
    CHECK(multiply(Monomial{{1, 1, 0}}, Monomial{{0, 2, 1}}).degree() == 5);
    CHECK_THROWS_AS(multiply(a, Monomial{{1, 0, 0}}), std::domain_error);
    oracles::Gen g(9);
    const auto B = monomial_basis(3, 3);
    for (int i = 0; i < 200; ++i) {
        const auto& x = B[g.below(B.size())];
        const auto& y = B[g.below(B.size())];
        const auto& z = B[g.below(B.size())];
        REQUIRE(multiply(x, y) == multiply(y, x));
        REQUIRE(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
}

TEST_CASE("restriction split")
{
    auto s = restriction_split(2, 2);
    REQUIRE(s.transversal.size() == 3);
    const auto b = monomial_basis(2, 2);
    std::set<std::vector<int>> tr;
    for (auto i : s.transversal)
        tr.insert(b[i].exponents);
    CHECK(tr == std::set<std::vector<int>>{{0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
    CHECK(restriction_split(3, 2).transversal.size() == 6);
    CHECK(restriction_split(1, 7).transversal.size() == 1);
    for (int n = 1; n <= 5; ++n)
        for (int d = 0; d <= 6; ++d) {
            s = restriction_split(n, d);
            REQUIRE(s.divisible.size() == oracles::forms(n, d - 1));
            REQUIRE(s.transversal.size() == oracles::forms(n - 1, d));
        }
}

TEST_CASE("points and evaluation")
{
    const Fp p = kPinnedPrimes[0];
    PointOverField x({3, 6, 9}, p);
    CHECK(x.coordinates()[0] == 1);
    CHECK(x.coordinates()[1] == 2);
    CHECK_THROWS(PointOverField({0, 0}, p));
    PointOverField on_d({0, 5, 7}, p);
    CHECK(on_d.on_hyperplane_x0());
    CHECK(on_d.coordinates()[1] == 1);
    CHECK(evaluate(Monomial{{2, 0}}, PointOverField({1, 1}, p)) == 1);
    CHECK(evaluate(Monomial{{1, 1, 0}}, on_d) == 0);
    CHECK(evaluate(Monomial{{0, 0, 0}}, on_d) == 1);
    oracles::Gen g(2);
    const auto B = monomial_basis(2, 2);
    for (int i = 0; i < 100; ++i) {
        PointOverField y({Fp(g.below(p)), Fp(g.below(p)), Fp(1 + g.below(p - 1))}, p);
        const auto& a = B[g.below(B.size())];
        const auto& c = B[g.below(B.size())];
        REQUIRE(evaluate(multiply(a, c), y) == modp::mul(evaluate(a, y), evaluate(c, y), p));
    }
}
