#include "vsl/betti.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "vsl/parallel.hpp"
#include "vsl/wedge.hpp"

namespace vsl {

std::string_view to_string(EntryStatus s)
{
    switch (s) {
    case EntryStatus::ZERO: return "ZERO";
    case EntryStatus::NONZERO: return "NONZERO";
    case EntryStatus::SKIPPED: return "SKIPPED";
    }
    return "?";
}

const BettiEntry* BettiTable::find(int p, int q) const
{
    for (const auto& e : entries) {
        if (e.p == p && e.q == q)
            return &e;
    }
    return nullptr;
}

std::optional<std::uint64_t> BettiTable::dim(int p, int q) const
{
    const auto* e = find(p, q);
    if (!e || !e->result.computed())
        return std::nullopt;
    return e->result.dim;
}

struct BettiEngine::Plan {
    VeroneseParams params;
    int p = 0;
    int q = 0;
    std::optional<std::string> refusal;
    std::uint64_t middle = 0;

    struct Item {
        MultiDegree mdeg;
        std::uint64_t multiplicity;
        std::uint64_t dim;
        bool has_out;  // C_{p-1,q+1}[m] nonzero
        bool has_in;   // C_{p+1,q-1}[m] nonzero
    };
    std::vector<Item> items;
    std::vector<BlockKey> keys;
};

namespace {

std::map<MultiDegree, std::uint64_t> as_map(const std::vector<BlockDimension>& v)
{
    std::map<MultiDegree, std::uint64_t> m;
    for (const auto& b : v)
        m.emplace(b.mdeg, b.dim);
    return m;
}

std::uint32_t field_tag(const FieldSpec& f) { return f.characteristic(); }

FieldSpec companion_prime(const FieldSpec& f)
{
    for (std::size_t i = 0; i < kPinnedPrimes.size(); ++i) {
        if (kPinnedPrimes[i] == f.characteristic())
            return FieldSpec::prime(kPinnedPrimes[(i + 1) % kPinnedPrimes.size()]);
    }
    return FieldSpec::prime(kPinnedPrimes[0]);
}

}  // namespace

BettiEngine::BettiEngine(EngineConfig cfg) : cfg_(std::move(cfg))
{
    set_max_wedge_subsets(cfg_.max_wedge_subsets);
}

BettiEngine::Plan BettiEngine::plan(const VeroneseParams& params, int p, int q)
{
    Plan pl;
    pl.params = params;
    pl.p = p;
    pl.q = q;
    if (KoszulSpace{params, p, q}.is_empty())
        return pl;
    std::vector<BlockDimension> mid;
    std::map<MultiDegree, std::uint64_t> out_dims, in_dims;
    try {
        mid = block_multidegrees(params, p, q);
        out_dims = as_map(block_multidegrees(params, p - 1, q + 1));
        in_dims = as_map(block_multidegrees(params, p + 1, q - 1));
    }
    catch (const ResourceLimitError& e) {
        pl.refusal = e.what();
        return pl;
    }
    catch (const std::overflow_error& e) {
        pl.refusal = e.what();
        return pl;
    }
    const auto mid_dims = as_map(mid);
    for (const auto& b : mid)
        pl.middle += b.dim;

    std::vector<std::pair<MultiDegree, std::uint64_t>> groups;
    if (cfg_.use_orbits) {
        std::vector<MultiDegree> all;
        all.reserve(mid.size());
        for (const auto& b : mid)
            all.push_back(b.mdeg);
        for (auto& oc : orbit_reduce(all))
            groups.emplace_back(oc.representative, oc.orbit_size);
    }
    else {
        for (const auto& b : mid)
            groups.emplace_back(b.mdeg, 1);
    }

    std::uint64_t nnz = 0;
    for (auto& [m, mult] : groups) {
        Plan::Item it{m, mult, mid_dims.at(m), false, false};
        if (auto o = out_dims.find(m); o != out_dims.end()) {
            it.has_out = true;
            if (std::max(o->second, it.dim) > cfg_.max_block_dim)
                pl.refusal = "block of d_{p,q} is " + std::to_string(o->second) + "x" + std::to_string(it.dim) +
                             ", above max_block_dim " + std::to_string(cfg_.max_block_dim);
            nnz += it.dim * static_cast<std::uint64_t>(p);
            pl.keys.push_back({params, p, q, m});
        }
        if (auto i = in_dims.find(m); i != in_dims.end()) {
            it.has_in = true;
            if (std::max(i->second, it.dim) > cfg_.max_block_dim)
                pl.refusal = "block of d_{p+1,q-1} is " + std::to_string(it.dim) + "x" + std::to_string(i->second) +
                             ", above max_block_dim " + std::to_string(cfg_.max_block_dim);
            nnz += i->second * static_cast<std::uint64_t>(p + 1);
            pl.keys.push_back({params, p + 1, q - 1, m});
        }
        pl.items.push_back(std::move(it));
    }
    if (!pl.refusal && nnz > cfg_.max_total_nnz)
        pl.refusal = "estimated " + std::to_string(nnz) + " nonzeros exceed max_total_nnz";
    return pl;
}

std::optional<std::uint64_t> BettiEngine::known_rank(const BlockKey& key, const FieldSpec& f)
{
    {
        std::lock_guard lock(mu_);
        auto it = memo_.find({key, field_tag(f)});
        if (it != memo_.end())
            return it->second;
    }
    if (cfg_.cache && f.is_prime_field()) {
        BlockCacheKey ck{key.params.n, key.params.d, key.params.b, key.p, key.q, key.mdeg.weights, f.characteristic()};
        if (auto r = cfg_.cache->lookup(ck)) {
            std::lock_guard lock(mu_);
            memo_.emplace(std::make_pair(key, field_tag(f)), *r);
            return r;
        }
    }
    return std::nullopt;
}

std::uint64_t BettiEngine::block_rank(const BlockKey& key, const FieldSpec& f)
{
    if (auto r = known_rank(key, f))
        return *r;
    const auto mat = differential_block(key);
    const std::uint64_t r = f.is_prime_field() ? sparse_rank(mat, f) : rational_rank(mat, cfg_.dense_limit);
    ++eliminations_;
    {
        std::lock_guard lock(mu_);
        memo_.emplace(std::make_pair(key, field_tag(f)), r);
    }
    if (cfg_.cache && f.is_prime_field()) {
        BlockCacheKey ck{key.params.n, key.params.d, key.params.b, key.p, key.q, key.mdeg.weights, f.characteristic()};
        cfg_.cache->insert(ck, r);
    }
    return r;
}

void BettiEngine::compute_ranks(const std::vector<BlockKey>& keys, const FieldSpec& f)
{
    std::vector<BlockKey> todo;
    std::set<BlockKey> seen;
    for (const auto& k : keys) {
        if (seen.insert(k).second && !known_rank(k, f))
            todo.push_back(k);
    }
    parallel_for(todo.size(), cfg_.threads, [&](std::size_t i) { block_rank(todo[i], f); });
}

KpqResult BettiEngine::assemble(const Plan& pl, const FieldSpec& f)
{
    KpqResult res;
    res.middle = pl.middle;
    std::uint64_t dim = 0;
    for (const auto& it : pl.items) {
        const std::uint64_t ro = it.has_out ? block_rank({pl.params, pl.p, pl.q, it.mdeg}, f) : 0;
        const std::uint64_t ri = it.has_in ? block_rank({pl.params, pl.p + 1, pl.q - 1, it.mdeg}, f) : 0;
        if (ro + ri > it.dim)
            throw std::logic_error("rank(d_out) + rank(d_in) exceeds the middle dimension");
        dim += it.multiplicity * (it.dim - ro - ri);
        res.rank_out += it.multiplicity * ro;
        res.rank_in += it.multiplicity * ri;
    }
    res.dim = dim;
    res.status = dim == 0 ? EntryStatus::ZERO : EntryStatus::NONZERO;
    return res;
}

KpqResult BettiEngine::kpq_dim(const VeroneseParams& params, int p, int q, const FieldSpec& f)
{
    const Plan pl = plan(params, p, q);
    if (pl.refusal) {
        KpqResult r;
        r.note = *pl.refusal;
        return r;
    }
    try {
        compute_ranks(pl.keys, f);
        return assemble(pl, f);
    }
    catch (const DenseLimitExceeded& e) {
        KpqResult r;
        r.middle = pl.middle;
        r.note = e.what();
        return r;
    }
}

std::optional<std::uint64_t> BettiEngine::differential_rank(const VeroneseParams& params, int p, int q,
                                                            const FieldSpec& f)
{
    const Plan pl = plan(params, p, q);
    if (pl.refusal)
        return std::nullopt;
    std::vector<BlockKey> keys;
    for (const auto& it : pl.items) {
        if (it.has_out)
            keys.push_back({params, p, q, it.mdeg});
    }
    compute_ranks(keys, f);
    std::uint64_t total = 0;
    for (const auto& it : pl.items) {
        if (it.has_out)
            total += it.multiplicity * block_rank({params, p, q, it.mdeg}, f);
    }
    return total;
}

BettiTable BettiEngine::betti_table(const VeroneseParams& params, int p_min, int p_max, int q_min, int q_max,
                                    const FieldSpec& f, bool certify)
{
    if (p_min > p_max || q_min > q_max)
        throw std::invalid_argument("betti_table: empty range");
    BettiTable table;
    table.params = params;
    table.field = f;
    if (f.is_prime_field())
        table.primes.push_back(f.characteristic());

    auto run = [&](const FieldSpec& field) {
        std::vector<Plan> plans;
        std::vector<BlockKey> keys;
        for (int q = q_min; q <= q_max; ++q) {
            for (int p = p_min; p <= p_max; ++p) {
                plans.push_back(plan(params, p, q));
                if (!plans.back().refusal)
                    keys.insert(keys.end(), plans.back().keys.begin(), plans.back().keys.end());
            }
        }
        std::optional<std::string> bulk_error;
        try {
            compute_ranks(keys, field);
        }
        catch (const DenseLimitExceeded& e) {
            // fall back to per-entry computation so entries that fit still complete
            bulk_error = e.what();
        }
        std::vector<BettiEntry> out;
        for (const auto& pl : plans) {
            BettiEntry e{pl.p, pl.q, {}};
            if (pl.refusal) {
                e.result.note = *pl.refusal;
            }
            else {
                try {
                    if (bulk_error)
                        compute_ranks(pl.keys, field);
                    e.result = assemble(pl, field);
                }
                catch (const DenseLimitExceeded& ex) {
                    e.result.middle = pl.middle;
                    e.result.note = ex.what();
                }
            }
            out.push_back(std::move(e));
        }
        return out;
    };

    table.entries = run(f);
    if (!certify)
        return table;

    bool complete = true;
    const FieldSpec second = f.is_prime_field() ? companion_prime(f) : FieldSpec::prime(kPinnedPrimes[0]);
    table.primes.push_back(second.characteristic());
    const auto other = run(second);
    for (std::size_t i = 0; i < other.size(); ++i) {
        const auto& a = table.entries[i].result;
        const auto& b = other[i].result;
        if (!a.computed() || !b.computed()) {
            complete = false;
            continue;
        }
        if (a.dim != b.dim)
            table.disagreements.push_back("K_{" + std::to_string(other[i].p) + "," + std::to_string(other[i].q) +
                                          "}: " + f.name() + " gives " + std::to_string(a.dim) + ", " +
                                          second.name() + " gives " + std::to_string(b.dim));
    }
    const auto rational = run(FieldSpec::rationals());
    table.rational_checked = true;
    for (std::size_t i = 0; i < rational.size(); ++i) {
        const auto& a = table.entries[i].result;
        const auto& r = rational[i].result;
        if (!r.computed()) {
            table.rational_checked = false;
            continue;
        }
        if (a.computed() && a.dim != r.dim)
            table.disagreements.push_back("K_{" + std::to_string(rational[i].p) + "," +
                                          std::to_string(rational[i].q) + "}: " + f.name() + " gives " +
                                          std::to_string(a.dim) + ", QQ gives " + std::to_string(r.dim));
    }
    table.certified = complete && table.disagreements.empty();
    return table;
}

DualityCheck BettiEngine::duality_check(const VeroneseParams& params, int p, int q, const FieldSpec& f)
{
    DualityCheck c;
    c.partner = duality_partner(params, p, q);
    c.lhs = kpq_dim(params, p, q, f);
    if (c.partner.p > std::numeric_limits<int>::max() || c.partner.p < std::numeric_limits<int>::min())
        throw std::overflow_error("duality_check: partner index out of range");
    c.rhs = kpq_dim(VeroneseParams(params.n, params.d, c.partner.b), static_cast<int>(c.partner.p), c.partner.q, f);
    c.equal = c.lhs.computed() && c.rhs.computed() && c.lhs.dim == c.rhs.dim;
    return c;
}

GreenVanishingReport BettiEngine::green_vanishing_check(const VeroneseParams& params, int q, const FieldSpec& f)
{
    GreenVanishingReport rep;
    rep.params = params;
    rep.q = q;
    rep.bound = to_ll(green_vanishing_bound(params, q));
    const long long top = to_ll(h0(params.n, params.d));  // wedge^p V = 0 beyond this
    rep.vanishing_holds = true;
    rep.checked_up_to = std::max(rep.bound, top);
    for (long long p = rep.bound; p <= top; ++p) {
        const auto r = kpq_dim(params, static_cast<int>(p), q, f);
        if (!r.computed()) {
            rep.skipped = true;
            rep.note = "K_{" + std::to_string(p) + "," + std::to_string(q) + "} skipped: " + r.note;
            rep.checked_up_to = p - 1;
            break;
        }
        if (r.dim != 0) {
            rep.vanishing_holds = false;
            rep.note = "K_{" + std::to_string(p) + "," + std::to_string(q) + "} has dimension " + std::to_string(r.dim);
        }
    }
    if (rep.bound >= 1) {
        rep.edge_defined = true;
        const auto r = kpq_dim(params, static_cast<int>(rep.bound - 1), q, f);
        if (!r.computed()) {
            rep.skipped = true;
        }
        else {
            rep.edge_dim = r.dim;
            rep.edge_nonzero = r.dim != 0;
        }
    }
    return rep;
}

std::uint64_t BettiEngine::blocks_touched() const
{
    std::lock_guard lock(mu_);
    std::set<BlockKey> keys;
    for (const auto& [k, r] : memo_)
        keys.insert(k.first);
    return keys.size();
}

}  // namespace vsl
