#include "vsl/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <tuple>

#include "vsl/wedge.hpp"

namespace vsl {

namespace {

std::atomic<std::uint64_t> g_max_wedge_subsets{50'000'000};

}  // namespace

void set_max_wedge_subsets(std::uint64_t limit) { g_max_wedge_subsets = limit; }
std::uint64_t max_wedge_subsets() { return g_max_wedge_subsets; }

bool KoszulSpace::is_empty() const
{
    if (p < 0 || coeff_degree() < 0)
        return true;
    return static_cast<std::uint64_t>(p) > basis(params.n, params.d)->size();
}

std::uint64_t KoszulSpace::dimension() const
{
    if (is_empty())
        return 0;
    const std::uint64_t N = basis(params.n, params.d)->size();
    return binom64(N, p) * basis(params.n, coeff_degree())->size();
}

WedgeWeightIndex::WedgeWeightIndex(int n, int d, int p) : p_(p)
{
    auto vb = basis(n, d);
    const std::size_t N = vb->size();
    if (p < 0 || static_cast<std::size_t>(p) > N)
        return;
    const std::uint64_t count = binom64(N, p);
    if (count > max_wedge_subsets())
        throw ResourceLimitError("wedge index: C(" + std::to_string(N) + "," + std::to_string(p) +
                                 ") subsets exceed the configured ceiling");
    std::vector<std::uint32_t> c(p);
    for (int i = 0; i < p; ++i)
        c[i] = i;
    MultiDegree w{std::vector<int>(n + 1, 0)};
    for (std::uint64_t rank = 0; rank < count; ++rank) {
        std::fill(w.weights.begin(), w.weights.end(), 0);
        for (int i = 0; i < p; ++i) {
            const auto& e = (*vb)[c[i]].exponents;
            for (int k = 0; k <= n; ++k)
                w.weights[k] += e[k];
        }
        groups_[w].push_back(rank);
        // colex successor
        int i = 0;
        while (i < p && static_cast<std::size_t>(c[i]) + 1 == (i + 1 < p ? c[i + 1] : N))
            ++i;
        if (i == p)
            break;
        ++c[i];
        for (int j = 0; j < i; ++j)
            c[j] = j;
    }
}

const std::vector<std::uint64_t>* WedgeWeightIndex::find(const MultiDegree& w) const
{
    auto it = groups_.find(w);
    return it == groups_.end() ? nullptr : &it->second;
}

std::shared_ptr<const WedgeWeightIndex> wedge_weight_index(int n, int d, int p)
{
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const WedgeWeightIndex>> registry;
    {
        std::lock_guard lock(mu);
        auto it = registry.find({n, d, p});
        if (it != registry.end())
            return it->second;
    }
    // built outside the lock; a racing duplicate build is harmless
    auto built = std::make_shared<const WedgeWeightIndex>(n, d, p);
    std::lock_guard lock(mu);
    auto [it, inserted] = registry.emplace(std::make_tuple(n, d, p), built);
    return it->second;
}

MultiDegree wedge_weight(int n, int d, std::uint64_t rank, int p)
{
    auto vb = basis(n, d);
    std::vector<std::uint32_t> idx(p);
    wedge_unrank_into(p, rank, idx.data());
    MultiDegree w{std::vector<int>(n + 1, 0)};
    for (auto i : idx) {
        for (int k = 0; k <= n; ++k)
            w.weights[k] += (*vb)[i].exponents[k];
    }
    return w;
}

MultiDegree element_multidegree(const KoszulSpace& space, const KoszulElement& e)
{
    MultiDegree m = wedge_weight(space.params.n, space.params.d, e.wedge, space.p);
    const auto& u = (*basis(space.params.n, space.coeff_degree()))[e.coeff].exponents;
    for (std::size_t k = 0; k < u.size(); ++k)
        m.weights[k] += u[k];
    return m;
}

KoszulSpaceBasis koszul_space_basis(const KoszulSpace& space)
{
    KoszulSpaceBasis out{space, {}};
    if (space.is_empty())
        return out;
    const int n = space.params.n;
    auto index = wedge_weight_index(n, space.params.d, space.p);
    auto cb = basis(n, space.coeff_degree());
    for (const auto& [w, ranks] : index->groups()) {
        for (std::size_t ui = 0; ui < cb->size(); ++ui) {
            MultiDegree m = w;
            for (int k = 0; k <= n; ++k)
                m.weights[k] += (*cb)[ui].exponents[k];
            auto& g = out.groups[m];
            for (auto r : ranks)
                g.push_back({r, static_cast<std::uint32_t>(ui)});
        }
    }
    for (auto& [m, g] : out.groups)
        std::sort(g.begin(), g.end());
    return out;
}

std::vector<KoszulElement> block_elements(const KoszulSpace& space, const MultiDegree& m)
{
    std::vector<KoszulElement> out;
    if (space.is_empty())
        return out;
    const int n = space.params.n;
    if (m.weights.size() != static_cast<std::size_t>(n + 1))
        throw std::domain_error("block_elements: multidegree has wrong length");
    auto index = wedge_weight_index(n, space.params.d, space.p);
    auto cb = basis(n, space.coeff_degree());
    MultiDegree w{std::vector<int>(n + 1)};
    for (std::size_t ui = 0; ui < cb->size(); ++ui) {
        bool ok = true;
        for (int k = 0; k <= n; ++k) {
            w.weights[k] = m.weights[k] - (*cb)[ui].exponents[k];
            ok = ok && w.weights[k] >= 0;
        }
        if (!ok)
            continue;
        if (const auto* ranks = index->find(w)) {
            for (auto r : *ranks)
                out.push_back({r, static_cast<std::uint32_t>(ui)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BlockDimension> block_multidegrees(const VeroneseParams& params, int p, int q)
{
    const KoszulSpace space{params, p, q};
    if (space.is_empty())
        return {};
    const int n = params.n;
    auto index = wedge_weight_index(n, params.d, p);
    auto cb = basis(n, space.coeff_degree());
    std::map<MultiDegree, std::uint64_t> counts;
    for (const auto& [w, ranks] : index->groups()) {
        for (const auto& u : cb->elements()) {
            MultiDegree m = w;
            for (int k = 0; k <= n; ++k)
                m.weights[k] += u.exponents[k];
            counts[m] += ranks.size();
        }
    }
    std::vector<BlockDimension> out;
    out.reserve(counts.size());
    for (auto& [m, c] : counts)
        out.push_back({m, c});
    return out;
}

KoszulBlockMatrix differential_block(const BlockKey& key, SignConvention conv)
{
    KoszulBlockMatrix mat;
    mat.key = key;
    const KoszulSpace src{key.params, key.p, key.q};
    const KoszulSpace tgt{key.params, key.p - 1, key.q + 1};
    mat.cols = block_elements(src, key.mdeg);
    mat.rows = block_elements(tgt, key.mdeg);
    if (mat.cols.empty() || mat.rows.empty())
        return mat;

    const int n = key.params.n;
    const int p = key.p;
    auto vb = basis(n, key.params.d);
    auto cb_src = basis(n, src.coeff_degree());
    auto cb_tgt = basis(n, tgt.coeff_degree());

    std::vector<std::uint32_t> idx(p), rest(p - 1);
    std::vector<int> prod(n + 1);
    mat.entries.reserve(mat.cols.size() * p);
    for (std::uint32_t col = 0; col < mat.cols.size(); ++col) {
        const auto& e = mat.cols[col];
        wedge_unrank_into(p, e.wedge, idx.data());
        const auto& u = (*cb_src)[e.coeff].exponents;
        for (int j = 0; j < p; ++j) {
            std::copy(idx.begin(), idx.begin() + j, rest.begin());
            std::copy(idx.begin() + j + 1, idx.end(), rest.begin() + j);
            const auto& v = (*vb)[idx[j]].exponents;
            for (int k = 0; k <= n; ++k)
                prod[k] = u[k] + v[k];
            const auto ui = cb_tgt->index_of(prod.data());
            const KoszulElement target{wedge_rank(std::span<const std::uint32_t>(rest)),
                                       static_cast<std::uint32_t>(*ui)};
            auto it = std::lower_bound(mat.rows.begin(), mat.rows.end(), target);
            if (it == mat.rows.end() || !(*it == target))
                throw std::logic_error("differential_block: image left the multidegree block");
            const std::int8_t sign = conv == SignConvention::alternating ? std::int8_t(deletion_sign(j)) : std::int8_t(1);
            mat.entries.push_back({static_cast<std::uint32_t>(it - mat.rows.begin()), col, sign});
        }
    }
    return mat;
}

MultiDegree sorted_descending(MultiDegree m)
{
    std::sort(m.weights.begin(), m.weights.end(), std::greater<>());
    return m;
}

std::vector<OrbitClass> orbit_reduce(const std::vector<MultiDegree>& blocks)
{
    std::map<MultiDegree, std::uint64_t> orbits;
    for (const auto& m : blocks)
        ++orbits[sorted_descending(m)];
    std::vector<OrbitClass> out;
    out.reserve(orbits.size());
    for (auto& [rep, c] : orbits)
        out.push_back({rep, c});
    return out;
}

}  // namespace vsl
