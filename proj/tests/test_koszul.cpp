#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "vsl/koszul.hpp"
#include "vsl/linalg.hpp"

using namespace vsl;

TEST_CASE("block multidegrees match exhaustive enumeration")
{
    const auto bd = block_multidegrees(VeroneseParams(1, 2), 1, 1);
    REQUIRE(bd.size() == 5);
    const std::vector<std::vector<int>> m{{0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}};
    const std::vector<std::uint64_t> sz{1, 2, 3, 2, 1};
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(bd[i].mdeg.weights == m[i]);
        CHECK(bd[i].dim == sz[i]);
        total += bd[i].dim;
    }
    CHECK(total == 9);

    const auto one = block_multidegrees(VeroneseParams(1, 2), 0, 0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].mdeg.weights == std::vector<int>{0, 0});
    CHECK(one[0].dim == 1);
    CHECK(block_multidegrees(VeroneseParams(2, 2, -3), 1, 1).empty());

    for (auto [n, d, b] : {std::tuple{1, 3, 0}, {2, 2, 0}, {2, 2, -1}, {2, 3, 1}, {3, 1, 0}}) {
        const VeroneseParams par(n, d, b);
        for (int q = 0; q <= 2; ++q)
            for (int p = 0; p <= 6; ++p) {
                const auto h = oracles::block_histogram(n, d, b, p, q);
                const auto got = block_multidegrees(par, p, q);
                REQUIRE(got.size() == h.size());
                std::uint64_t sum = 0;
                for (const auto& x : got) {
                    REQUIRE(h.at(x.mdeg.weights) == x.dim);
                    sum += x.dim;
                }
                REQUIRE(sum == KoszulSpace{par, p, q}.dimension());
            }
    }
}

TEST_CASE("space basis is a partition")
{
    const KoszulSpace sp{VeroneseParams(2, 2), 2, 1};
    const auto B = koszul_space_basis(sp);
    std::set<KoszulElement> seen;
    for (const auto& [m, elems] : B.groups)
        for (const auto& e : elems) {
            REQUIRE(seen.insert(e).second);
            REQUIRE(element_multidegree(sp, e) == m);
        }
    CHECK(seen.size() == sp.dimension());
    CHECK(sp.dimension() == 15 * 6);
}

TEST_CASE("hand block of the conic")
{
    const auto blk = differential_block({VeroneseParams(1, 2), 1, 1, MultiDegree{{2, 2}}});
    CHECK(blk.ncols() == 3);
    CHECK(blk.nrows() == 1);
    REQUIRE(blk.entries.size() == 3);
    for (const auto& e : blk.entries)
        CHECK(e.sign == 1);
    CHECK(sparse_rank(blk, FieldSpec::prime(kPinnedPrimes[0])) == 1);

    const auto zero = differential_block({VeroneseParams(1, 2), 0, 1, MultiDegree{{1, 1}}});
    CHECK(zero.nrows() == 0);
    CHECK(zero.ncols() == 1);
}

TEST_CASE("d^2 = 0 blockwise, and the mutated convention breaks it")
{
    const Fp P = kPinnedPrimes[0];
    auto product_zero = [&](const VeroneseParams& par, int p, int q, SignConvention conv) {
        for (const auto& bd : block_multidegrees(par, p, q)) {
            const auto A = DenseMatrixModP::from_block(differential_block({par, p, q, bd.mdeg}, conv), P);
            const auto B = DenseMatrixModP::from_block(differential_block({par, p - 1, q + 1, bd.mdeg}, conv), P);
            for (std::size_t i = 0; i < B.rows(); ++i)
                for (std::size_t j = 0; j < A.cols(); ++j) {
                    std::uint64_t s = 0;
                    for (std::size_t k = 0; k < B.cols(); ++k)
                        s = (s + std::uint64_t(B(i, k)) * A(k, j)) % P;
                    if (s)
                        return false;
                }
        }
        return true;
    };
    for (auto [n, d] : {std::pair{1, 3}, {2, 2}})
        for (int q = 0; q <= 2; ++q)
            for (int p = 2; p <= 6; ++p)
                REQUIRE(product_zero(VeroneseParams(n, d), p, q, SignConvention::alternating));
    CHECK_FALSE(product_zero(VeroneseParams(2, 2), 2, 0, SignConvention::constant_plus));
}

TEST_CASE("orbit reduction")
{
    const auto a = orbit_reduce({MultiDegree{{4, 0}}, MultiDegree{{0, 4}}});
    REQUIRE(a.size() == 1);
    CHECK(a[0].representative.weights == std::vector<int>{4, 0});
    CHECK(a[0].orbit_size == 2);
    const auto b = orbit_reduce({MultiDegree{{2, 2}}});
    REQUIRE(b.size() == 1);
    CHECK(b[0].orbit_size == 1);

    // (2,2,p=1,q=1): total weight 4 in 3 slots, partitions of 4 into <= 3 parts
    std::vector<MultiDegree> ms;
    for (const auto& x : block_multidegrees(VeroneseParams(2, 2), 1, 1))
        ms.push_back(x.mdeg);
    const auto r = orbit_reduce(ms);
    CHECK(r.size() == 4);  // 4, 3+1, 2+2, 2+1+1
    CHECK(std::accumulate(r.begin(), r.end(), std::uint64_t(0),
                          [](std::uint64_t s, const OrbitClass& c) { return s + c.orbit_size; }) == ms.size());
}

TEST_CASE("ranks are constant on orbits")
{
    const auto F = FieldSpec::prime(kPinnedPrimes[2]);
    for (auto [n, d, p, q] : {std::tuple{2, 2, 2, 1}, {2, 2, 3, 1}, {1, 4, 2, 1}, {2, 3, 2, 1}}) {
        const VeroneseParams par(n, d);
        std::map<MultiDegree, std::size_t> rank_of_rep;
        for (const auto& bd : block_multidegrees(par, p, q)) {
            const auto r = sparse_rank(differential_block({par, p, q, bd.mdeg}), F);
            auto [it, fresh] = rank_of_rep.try_emplace(sorted_descending(bd.mdeg), r);
            REQUIRE(it->second == r);
        }
    }
}

TEST_CASE("wedge index ceiling is a refusal")
{
    const auto old = max_wedge_subsets();
    set_max_wedge_subsets(10);
    CHECK_THROWS_AS(WedgeWeightIndex(2, 2, 3), ResourceLimitError);
    set_max_wedge_subsets(old);
    CHECK_NOTHROW(WedgeWeightIndex(2, 2, 3));
}
