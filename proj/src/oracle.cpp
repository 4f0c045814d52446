#include "vsl/oracle.hpp"

#include <stdexcept>

#include "vsl/polyspace.hpp"
#include "vsl/wedge.hpp"

namespace vsl::oracle {

namespace {

constexpr std::uint64_t kMaxEntries = 200'000'000;

std::uint64_t space_dim(const VeroneseParams& params, int p, int q, std::uint64_t* n_wedge, std::uint64_t* n_coeff)
{
    const std::uint64_t N = to_ll(h0(params.n, params.d));
    const long long m = params.b + static_cast<long long>(q) * params.d;
    *n_wedge = (p < 0 || static_cast<std::uint64_t>(p) > N) ? 0 : binom64(N, p);
    *n_coeff = m < 0 ? 0 : static_cast<std::uint64_t>(to_ll(h0(params.n, m)));
    return *n_wedge * *n_coeff;
}

}  // namespace

DenseMatrixModP dense_differential(const VeroneseParams& params, int p, int q, Fp prime)
{
    std::uint64_t sw, sc, tw, tc;
    const auto cols = space_dim(params, p, q, &sw, &sc);
    const auto rows = space_dim(params, p - 1, q + 1, &tw, &tc);
    if (rows * cols > kMaxEntries)
        throw std::length_error("oracle: dense differential too large");
    DenseMatrixModP a(rows, cols, prime);
    if (rows == 0 || cols == 0)
        return a;

    const int n = params.n;
    const auto vb = monomial_basis(n, params.d);
    const auto src = monomial_basis(n, params.b + q * params.d);
    const auto tgt = monomial_basis(n, params.b + (q + 1) * params.d);
    const std::size_t N = vb.size();
    for (std::uint64_t r = 0; r < sw; ++r) {
        const auto S = wedge_unrank(p, r, N);
        for (std::uint64_t u = 0; u < sc; ++u) {
            const std::uint64_t col = r * sc + u;
            for (std::size_t j = 0; j < S.indices.size(); ++j) {
                const auto prod = multiply(src[u], vb[S.indices[j]]);
                std::uint64_t t = 0;
                // linear scan keeps this independent of the hashed index
                while (!(tgt[t] == prod))
                    ++t;
                const std::uint64_t row = wedge_rank(S.without(j)) * tc + t;
                Fp& slot = a(row, col);
                slot = (j % 2 == 0) ? modp::add(slot, 1, prime) : modp::sub(slot, 1, prime);
            }
        }
    }
    return a;
}

std::uint64_t dense_rank(const VeroneseParams& params, int p, int q, Fp prime)
{
    return dense_differential(params, p, q, prime).rank();
}

std::uint64_t dense_kpq(const VeroneseParams& params, int p, int q, Fp prime)
{
    std::uint64_t w, c;
    const auto mid = space_dim(params, p, q, &w, &c);
    return mid - dense_rank(params, p, q, prime) - dense_rank(params, p + 1, q - 1, prime);
}

}  // namespace vsl::oracle
