#include <doctest.h>

#include "oracles.hpp"
#include "vsl/koszul.hpp"
#include "vsl/linalg.hpp"
#include "vsl/oracle.hpp"

using namespace vsl;

namespace {

std::vector<SparseRow> to_rows(const std::vector<std::vector<std::uint64_t>>& a)
{
    std::vector<SparseRow> rows;
    for (const auto& r : a) {
        SparseRow s;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c]) {
                s.cols.push_back(static_cast<std::uint32_t>(c));
                s.vals.push_back(static_cast<Fp>(r[c]));
            }
        rows.push_back(std::move(s));
    }
    return rows;
}

}  // namespace

TEST_CASE("sparse rank basics")
{
    const Fp P = kPinnedPrimes[0];
    CHECK(sparse_rank_mod({}, 0, P) == 0);
    CHECK(sparse_rank_mod(std::vector<SparseRow>(5), 7, P) == 0);
    std::vector<SparseRow> id;
    for (std::uint32_t i = 0; i < 40; ++i)
        id.push_back({{i}, {1}});
    CHECK(sparse_rank_mod(id, 40, P) == 40);
}

TEST_CASE("sparse rank agrees with naive elimination on random matrices")
{
    oracles::Gen g(17);
    const std::uint64_t P = kPinnedPrimes[3];
    for (int t = 0; t < 300; ++t) {
        const std::size_t r = g.range(1, 40), c = g.range(1, 40);
        auto a = g.sparse_matrix(r, c, g.range(1, 30) / 100.0, P);
        if (g.coin(0.3) && r > 2) {
            // force dependencies
            for (std::size_t k = 0; k < c; ++k)
                a[r - 1][k] = (a[0][k] + 2 * a[1][k]) % P;
        }
        REQUIRE(sparse_rank_mod(to_rows(a), c, P) == oracles::rank_mod(a, P));
    }
}

TEST_CASE("rank depends on the characteristic")
{
    // det [[1,2],[2,1]] = -3
    std::vector<SparseRow> rows{{{0, 1}, {1, 2}}, {{0, 1}, {2, 1}}};
    CHECK(sparse_rank_mod(rows, 2, 3) == 1);
    CHECK(sparse_rank_mod(rows, 2, 5) == 2);
}

TEST_CASE("dense matrix over GF(p)")
{
    const Fp P = kPinnedPrimes[0];
    oracles::Gen g(23);
    for (int t = 0; t < 100; ++t) {
        const std::size_t r = g.range(1, 12), c = g.range(1, 12);
        const auto a = g.sparse_matrix(r, c, 0.4, P);
        DenseMatrixModP m(r, c, P);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = static_cast<Fp>(a[i][j]);
        const auto rank = m.rank();
        REQUIRE(rank == oracles::rank_mod(a, P));
        const auto ker = m.nullspace();
        REQUIRE(ker.size() == c - rank);
        for (const auto& v : ker)
            for (std::size_t i = 0; i < r; ++i) {
                std::uint64_t s = 0;
                for (std::size_t j = 0; j < c; ++j)
                    s = (s + std::uint64_t(m(i, j)) * v[j]) % P;
                REQUIRE(s == 0);
            }
        // a consistent right-hand side is solved, a random one maybe not
        std::vector<Fp> x(c), b(r, 0);
        for (auto& xi : x)
            xi = static_cast<Fp>(g.below(P));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                b[i] = modp::add(b[i], modp::mul(m(i, j), x[j], P), P);
        const auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < r; ++i) {
            Fp s = 0;
            for (std::size_t j = 0; j < c; ++j)
                s = modp::add(s, modp::mul(m(i, j), (*sol)[j], P), P);
            REQUIRE(s == b[i]);
        }
    }
    DenseMatrixModP z(2, 1, P);
    CHECK_FALSE(z.solve({1, 0}).has_value());
}

TEST_CASE("rational rank")
{
    const auto F = FieldSpec::prime(kPinnedPrimes[0]);
    const auto G = FieldSpec::prime(kPinnedPrimes[5]);
    for (auto [n, d] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}}) {
        const VeroneseParams par(n, d);
        for (int q = 0; q <= 2; ++q)
            for (int p = 0; p <= 10; ++p)
                for (const auto& bd : block_multidegrees(par, p, q)) {
                    const auto blk = differential_block({par, p, q, bd.mdeg});
                    if (blk.nrows() > 400 || blk.ncols() > 400)
                        continue;
                    const auto r = sparse_rank(blk, F);
                    REQUIRE(r == sparse_rank(blk, G));
                    REQUIRE(r == rational_rank(blk));
                }
    }
    KoszulBlockMatrix empty;
    CHECK(rational_rank(empty) == 0);
}

TEST_CASE("dense limit refusal")
{
    const auto blk = differential_block({VeroneseParams(2, 3), 3, 1, MultiDegree{{5, 4, 3}}});
    REQUIRE(blk.ncols() > 10);
    CHECK_THROWS_AS(rational_rank(blk, 10), DenseLimitExceeded);
}

TEST_CASE("full d_{1,1} of the conic has rank 5")
{
    CHECK(oracle::dense_rank(VeroneseParams(1, 2), 1, 1, kPinnedPrimes[0]) == 5);
}
