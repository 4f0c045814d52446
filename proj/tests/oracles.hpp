// Independent reference computations and hand-rolled generators for tests.
// Nothing here uses the block machinery.
#ifndef VSL_TESTS_ORACLES_HPP
#define VSL_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracles {

// Pascal-triangle binomial in 64 bits, no shortcuts.
inline std::uint64_t choose(long long a, long long k)
{
    if (k < 0 || a < 0 || k > a)
        return 0;
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (long long i = 1; i <= a; ++i)
        for (long long j = std::min(i, k); j >= 1; --j)
            row[j] += row[j - 1];
    return row[k];
}

inline std::uint64_t forms(int n, long long m) { return m < 0 ? 0 : choose(m + n, n); }

// Eagon-Northcott: rational normal curve of degree d.
inline std::uint64_t rnc_linear(int d, int p)
{
    if (p < 1 || p > d - 1)
        return 0;
    return p * choose(d, p + 1);
}

// Quadrics through the Veronese: Sym^2 H0(O(d)) minus H0(O(2d)).
inline std::uint64_t quadrics(int n, int d)
{
    const auto N = forms(n, d);
    return N * (N + 1) / 2 - forms(n, 2 * d);
}

// All exponent vectors of degree m in n+1 variables, any order.
inline std::vector<std::vector<int>> all_exponents(int n, int m)
{
    std::vector<std::vector<int>> out;
    if (m < 0)
        return out;
    std::vector<int> e(n + 1, 0);
    auto rec = [&](auto& self, int i, int left) -> void {
        if (i == n) {
            e[n] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, m);
    return out;
}

// Every k-subset of [0, N) in colex order by brute-force sorting.
inline std::vector<std::vector<std::uint32_t>> colex_subsets(std::uint32_t N, std::uint32_t k)
{
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint64_t mask = 0; mask < (1ull << N); ++mask) {
        if (static_cast<std::uint32_t>(__builtin_popcountll(mask)) != k)
            continue;
        std::vector<std::uint32_t> s;
        for (std::uint32_t i = 0; i < N; ++i)
            if (mask >> i & 1)
                s.push_back(i);
        out.push_back(s);
    }
    // colex: compare from the largest element down
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

// Multidegree histogram of C_{p,q} by exhaustive enumeration.
inline std::map<std::vector<int>, std::uint64_t> block_histogram(int n, int d, int b, int p, int q)
{
    std::map<std::vector<int>, std::uint64_t> h;
    const auto V = all_exponents(n, d);
    const auto U = all_exponents(n, b + q * d);
    if (p < 0 || static_cast<std::size_t>(p) > V.size())
        return h;
    for (const auto& S : colex_subsets(static_cast<std::uint32_t>(V.size()), p)) {
        std::vector<int> w(n + 1, 0);
        for (auto i : S)
            for (int k = 0; k <= n; ++k)
                w[k] += V[i][k];
        for (const auto& u : U) {
            auto m = w;
            for (int k = 0; k <= n; ++k)
                m[k] += u[k];
            ++h[m];
        }
    }
    return h;
}

// Plain Gaussian elimination mod p on a dense copy.
inline std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p)
{
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    auto inv = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2;
        x %= p;
        while (e) {
            if (e & 1)
                r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] % p == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rank]);
        const auto iv = inv(a[rank][c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] % p == 0)
                continue;
            const auto f = a[r][c] % p * iv % p;
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] = (a[r][k] + (p - f) * (a[rank][k] % p)) % p;
        }
        ++rank;
    }
    return rank;
}

// Hand-rolled generator: sparse random matrices, subsets, residues.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }
    int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

    std::vector<std::uint32_t> subset(std::uint32_t N, std::uint32_t k)
    {
        std::vector<std::uint32_t> all(N);
        std::iota(all.begin(), all.end(), 0u);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(k);
        std::sort(all.begin(), all.end());
        return all;
    }

    std::vector<std::vector<std::uint64_t>> sparse_matrix(std::size_t r, std::size_t c, double density,
                                                          std::uint64_t p)
    {
        std::vector<std::vector<std::uint64_t>> a(r, std::vector<std::uint64_t>(c, 0));
        for (auto& row : a)
            for (auto& x : row)
                if (coin(density))
                    x = 1 + below(p - 1);
        return a;
    }
};

}  // namespace oracles

#endif  // VSL_TESTS_ORACLES_HPP
