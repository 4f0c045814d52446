#include "vsl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "vsl/oracle.hpp"

namespace vsl {

std::string_view to_string(Expectation e)
{
    return e == Expectation::ZERO ? "ZERO" : "NONZERO";
}

std::size_t VerificationReport::count(Verdict v) const
{
    return std::count_if(rows.begin(), rows.end(), [v](const VerificationRow& r) { return r.verdict == v; });
}

const VerificationRow* VerificationReport::find(int p, int q) const
{
    for (const auto& r : rows) {
        if (r.p == p && r.q == q)
            return &r;
    }
    return nullptr;
}

std::vector<PredictionCheck> predictions_for(const VeroneseParams& params, int p, int q)
{
    using PS = PredictionSource;
    std::vector<PredictionCheck> out;
    const int n = params.n, d = params.d;
    const bool untwisted = params.b == 0;
    const bool big_d = d >= n + 1;
    auto vanish = [&](PS src, bool applicable, std::string reason) {
        out.push_back({src, Expectation::ZERO, applicable, true, std::move(reason)});
    };

    if (untwisted && q >= 1 && q <= n) {
        const auto el = el_range(params, q);
        const bool inside = el.contains(p);
        out.push_back({PS::EL_CONJ, inside ? Expectation::NONZERO : Expectation::ZERO, el.applicable, true,
                       el.applicable ? el.reason : "requires d >= n+1"});
    }
    if (untwisted && q == 1 && n >= 2 && p >= linear_conj_bound(params))
        vanish(PS::LINEAR_CONJ, big_d, big_d ? "p >= C(d+n-1,n)+n-1" : "requires d >= n+1");
    if (untwisted && q == 1 && n >= 3 && p >= main_thm_bound(params))
        vanish(PS::MAIN_THM, true, "p >= C(d+n-1,n)+C(d+n-2,n-2)");
    if (untwisted && q == n && n >= 2 && big_d && p <= qn_thm_bound(params))
        vanish(PS::QN_THM, true, "p <= C(d+n,n)-C(d-1,n)-n-1");
    if (q >= 0 && p >= green_vanishing_bound(params, q))
        vanish(PS::GREEN_VANISHING, true, "p >= h0(b+qd)");
    if (untwisted && n == 2 && q == 2 && p < gb_bound(d))
        vanish(PS::GB_VANISHING, true, "p < 3d-2");
    if (untwisted) {
        const BigInt r = h0(n, d) - 1;
        if (BigInt(p) > r - n)
            vanish(PS::DUALITY_TRIVIAL, true, "p > r-n");
    }
    return out;
}

namespace {

std::string provenance(const VeroneseParams& params, int p, int q, const std::vector<std::uint32_t>& primes)
{
    std::ostringstream os;
    os << "primes=[";
    for (std::size_t i = 0; i < primes.size(); ++i)
        os << (i ? "," : "") << primes[i];
    os << "] blocks d_{" << p << "," << q << "}:";
    std::vector<MultiDegree> ms;
    for (const auto& bd : block_multidegrees(params, p, q))
        ms.push_back(bd.mdeg);
    for (const auto& oc : orbit_reduce(ms))
        os << " " << oc.representative.to_string() << "x" << oc.orbit_size;
    return os.str();
}

}  // namespace

VerificationReport verify(BettiEngine& engine, const VeroneseParams& params, const std::vector<int>& strands,
                          const FieldSpec& f, std::optional<int> p_max)
{
    if (strands.empty())
        throw std::invalid_argument("verify: no strands requested");
    VerificationReport rep;
    rep.params = params;
    rep.field = f.name();
    rep.strands = strands;
    std::sort(rep.strands.begin(), rep.strands.end());
    rep.strands.erase(std::unique(rep.strands.begin(), rep.strands.end()), rep.strands.end());
    if (f.is_prime_field())
        rep.primes.push_back(f.characteristic());
    const int top = p_max ? *p_max : static_cast<int>(to_ll(h0(params.n, params.d)));

    for (int q : rep.strands) {
        const auto table = engine.betti_table(params, 0, top, q, q, f);
        for (const auto& e : table.entries) {
            VerificationRow row{e.p, e.q, e.result, predictions_for(params, e.p, e.q), Verdict::SKIPPED, {}};
            if (!row.computed.computed()) {
                rep.rows.push_back(std::move(row));
                continue;
            }
            bool any = false, bad = false;
            for (auto& pc : row.predictions) {
                const bool nonzero = row.computed.dim != 0;
                pc.consistent = (pc.expected == Expectation::NONZERO) == nonzero;
                if (!pc.applicable)
                    continue;
                any = true;
                bad = bad || !pc.consistent;
            }
            row.verdict = bad ? Verdict::VIOLATION : any ? Verdict::CONSISTENT : Verdict::OUT_OF_APPLICABILITY;
            if (bad)
                row.provenance = provenance(params, e.p, e.q, rep.primes);
            rep.rows.push_back(std::move(row));
        }
    }

    // a source is verified only if every row in its scope was computed
    using PS = PredictionSource;
    for (PS src : {PS::EL_CONJ, PS::LINEAR_CONJ, PS::MAIN_THM, PS::QN_THM, PS::GREEN_VANISHING, PS::GB_VANISHING,
                   PS::DUALITY_TRIVIAL}) {
        SourceSummary s{src};
        for (const auto& row : rep.rows) {
            if (!row.computed.computed()) {
                // a skipped row may hide a prediction of this source
                const auto preds = predictions_for(params, row.p, row.q);
                if (std::any_of(preds.begin(), preds.end(),
                                [&](const PredictionCheck& pc) { return pc.source == src && pc.applicable; }))
                    ++s.skipped;
                continue;
            }
            for (const auto& pc : row.predictions) {
                if (pc.source != src || !pc.applicable)
                    continue;
                s.applicable = true;
                ++s.rows_checked;
                if (!pc.consistent)
                    ++s.violations;
            }
        }
        s.verified = s.applicable && s.violations == 0 && s.skipped == 0;
        rep.sources.push_back(s);
    }
    return rep;
}

bool EvMapReport::all_properties_hold() const
{
    return composite_sign != 0 && ev_rank == composite_rank && factor_true == factor_total && gamma_invariant &&
           cycles_to_cycles && boundaries_to_boundaries;
}

namespace {
KoszulChain random_chain(const KoszulSpace& sp, Fp P, std::mt19937_64& rng, std::size_t terms);
}

EvMapReport ev_map_report(const VeroneseParams& params, int p, Fp prime, std::uint64_t seed,
                          std::vector<PointOverField> points, std::size_t samples)
{
    EvMapReport r;
    r.params = params;
    r.p = p;
    r.prime = prime;
    r.seed = seed;
    r.samples = samples;
    if (points.empty()) {
        points = random_points_on_D(params, prime, seed, &r.attempts);
    }
    else {
        certify_points_on_D(params, points);
        r.attempts = 0;
    }
    r.points = points;
    r.s = static_cast<int>(points.size());
    if (p < r.s)
        throw std::domain_error("ev map: requires p >= s = " + std::to_string(r.s));

    const HomologySpace src(params, p, 1, prime), tgt(params, p - r.s, 1, prime), tgt1(params, p - 1, 1, prime);
    r.source_dim = src.dimension();
    r.target_dim = tgt.dimension();
    auto ev = [&](const KoszulChain& c) { return ev_D_chain(c, points); };
    auto comp = [&](const KoszulChain& c) { return ev_composite_chain(c, points); };
    const auto phi0 = evaluation_functional(params.n, params.d, points.front());
    auto single = [&](const KoszulChain& c) { return contract_chain(phi0, c); };
    const auto m_ev = induced_matrix(src, tgt, ev);
    r.ev_rank = m_ev.rank();
    r.composite_rank = induced_matrix(src, tgt, comp).rank();
    r.point_rank = induced_matrix(src, tgt1, single).rank();

    bool plus = true, minus = true;
    for (const auto& cl : src.basis()) {
        const auto a = ev(cl.representative()), b = comp(cl.representative());
        plus = plus && a == b;
        minus = minus && a == b.scaled(prime - 1);
        ++r.factor_total;
        if (projection_factor_check(cl, points).in_subspace_mod_boundary)
            ++r.factor_true;
    }
    r.composite_sign = plus ? 1 : minus ? -1 : 0;

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<Fp> unit(1, prime - 1);
    const Fp c = unit(rng);
    r.gamma_invariant = induced_matrix(src, tgt, [&](const KoszulChain& x) { return ev_D_chain(x, points, c); })
                            .rank() == r.ev_rank;
    for (const auto& cl : src.basis()) {
        r.gamma_invariant = r.gamma_invariant && ev_D_chain(cl.representative(), points, c) ==
                                                     ev(cl.representative()).scaled(c) &&
                            projection_factor_check(cl, points, c).in_subspace_mod_boundary;
    }

    // random cycles: basis combinations plus boundaries
    r.cycles_to_cycles = r.boundaries_to_boundaries = true;
    const KoszulSpace above{params, p + 1, 0};
    for (std::size_t i = 0; i < samples; ++i) {
        const auto y = random_chain(above, prime, rng, 4);
        const auto bdry = apply_differential(y);
        KoszulChain z = bdry;
        for (const auto& cl : src.basis())
            z += cl.representative().scaled(unit(rng));
        const auto x = random_point(params.n, prime, rng);
        const auto phi = evaluation_functional(params.n, params.d, x);
        r.cycles_to_cycles = r.cycles_to_cycles && apply_differential(ev(z)).is_zero() &&
                             apply_differential(contract_chain(phi, z)).is_zero();
        r.boundaries_to_boundaries = r.boundaries_to_boundaries && tgt.is_boundary(ev(bdry)) &&
                                     tgt1.is_boundary(contract_chain(phi, bdry));
    }
    return r;
}

bool SelftestReport::passed() const
{
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.passed; });
}

namespace {

using Clock = std::chrono::steady_clock;

// Product of two blocks at the same multidegree must vanish.
bool d_squared_zero(const VeroneseParams& params, int p, int q, SignConvention conv, std::string& detail)
{
    const Fp P = kPinnedPrimes[0];
    for (const auto& bd : block_multidegrees(params, p, q)) {
        const auto a = differential_block({params, p, q, bd.mdeg}, conv);
        const auto b = differential_block({params, p - 1, q + 1, bd.mdeg}, conv);
        if (a.nrows() == 0 || b.nrows() == 0)
            continue;
        const auto A = DenseMatrixModP::from_block(a, P);
        const auto B = DenseMatrixModP::from_block(b, P);
        for (std::size_t i = 0; i < B.rows(); ++i) {
            for (std::size_t j = 0; j < A.cols(); ++j) {
                Fp s = 0;
                for (std::size_t k = 0; k < B.cols(); ++k)
                    s = modp::add(s, modp::mul(B(i, k), A(k, j), P), P);
                if (s != 0) {
                    detail = "d_{" + std::to_string(p - 1) + "," + std::to_string(q + 1) + "} d_{" +
                             std::to_string(p) + "," + std::to_string(q) + "} != 0 at multidegree " +
                             bd.mdeg.to_string();
                    return false;
                }
            }
        }
    }
    return true;
}

KoszulChain random_chain(const KoszulSpace& sp, Fp P, std::mt19937_64& rng, std::size_t terms)
{
    KoszulChain c(sp, P);
    const std::uint64_t nw = binom64(to_ll(h0(sp.params.n, sp.params.d)), sp.p);
    const std::uint64_t nc = to_ll(h0(sp.params.n, sp.coeff_degree()));
    if (nw == 0 || nc == 0)
        return c;
    std::uniform_int_distribution<std::uint64_t> w(0, nw - 1), u(0, nc - 1);
    std::uniform_int_distribution<Fp> v(1, P - 1);
    for (std::size_t i = 0; i < terms; ++i)
        c.add({w(rng), static_cast<std::uint32_t>(u(rng))}, v(rng));
    return c;
}

template <class Fn>
void run_check(SelftestReport& rep, std::string name, Fn&& fn)
{
    SelftestCheck c{std::move(name), false, {}};
    try {
        c.passed = fn(c.detail);
    }
    catch (const std::exception& e) {
        c.passed = false;
        c.detail = std::string("exception: ") + e.what();
    }
    rep.checks.push_back(std::move(c));
}

}  // namespace

SelftestReport selftest(const SelftestOptions& opts)
{
    SelftestReport rep;
    const Fp P = kPinnedPrimes[0];
    const auto F0 = FieldSpec::prime(kPinnedPrimes[0]);
    EngineConfig cfg;
    cfg.threads = opts.threads;

    run_check(rep, "d^2 = 0", [&](std::string& detail) {
        const auto conv = opts.mutate_sign ? SignConvention::constant_plus : SignConvention::alternating;
        for (auto [n, d] : {std::pair{1, 3}, {2, 2}, {2, 3}, {3, 1}}) {
            const VeroneseParams params(n, d);
            const int N = static_cast<int>(to_ll(h0(n, d)));
            for (int q = 0; q <= 2; ++q) {
                for (int p = 2; p <= N; ++p) {
                    if (!d_squared_zero(params, p, q, conv, detail))
                        return false;
                }
            }
        }
        return true;
    });

    run_check(rep, "block ranks = dense oracle", [&](std::string& detail) {
        BettiEngine eng(cfg);
        for (auto [n, d] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
            const VeroneseParams params(n, d);
            const int N = static_cast<int>(to_ll(h0(n, d)));
            for (int q = 0; q <= n + 1; ++q) {
                for (int p = 0; p <= N; ++p) {
                    const auto r = eng.kpq_dim(params, p, q, F0);
                    const auto o = oracle::dense_kpq(params, p, q, P);
                    if (!r.computed() || r.dim != o) {
                        detail = "(" + std::to_string(n) + "," + std::to_string(d) + ") K_{" + std::to_string(p) +
                                 "," + std::to_string(q) + "}: blocks " + std::to_string(r.dim) + ", dense " +
                                 std::to_string(o);
                        return false;
                    }
                }
            }
        }
        return true;
    });

    run_check(rep, "two pinned primes and QQ agree", [&](std::string& detail) {
        BettiEngine eng(cfg);
        for (auto [n, d] : {std::pair{1, 4}, {2, 2}, {2, 3}}) {
            const VeroneseParams params(n, d);
            const auto t = eng.betti_table(params, 0, static_cast<int>(to_ll(h0(n, d))), 0, n, F0, true);
            if (!t.certified) {
                detail = "(" + std::to_string(n) + "," + std::to_string(d) + ") not certified";
                for (const auto& s : t.disagreements)
                    detail += "; " + s;
                return false;
            }
        }
        return true;
    });

    run_check(rep, "Pascal identities", [&](std::string& detail) {
        for (int n = 1; n <= 8; ++n) {
            for (int d = 1; d <= 12; ++d) {
                const VeroneseParams params(n, d);
                if (binom(d + n, n) - binom(d + n - 1, n - 1) != binom(d + n - 1, n) ||
                    projection_codim(params) != h0(n, d) - h0(n, d - 1)) {
                    detail = "Pascal at n=" + std::to_string(n) + " d=" + std::to_string(d);
                    return false;
                }
                if (n >= 2 && d >= n + 1) {
                    if (*el_range(params, 1).hi + 1 != linear_conj_bound(params) ||
                        qn_thm_bound(params) != *el_range(params, n).lo - 1) {
                        detail = "range consistency at n=" + std::to_string(n) + " d=" + std::to_string(d);
                        return false;
                    }
                }
                if (n >= 3) {
                    const auto m = main_thm_bound(params), l = linear_conj_bound(params);
                    if (m < l || (m == l) != (d == 1) || binom(d - 2 + n, n) + projection_codim(params) != m) {
                        detail = "theorem chain at n=" + std::to_string(n) + " d=" + std::to_string(d);
                        return false;
                    }
                }
            }
        }
        return true;
    });

    run_check(rep, "duality", [&](std::string& detail) {
        BettiEngine eng(cfg);
        for (auto [n, d] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}}) {
            const VeroneseParams params(n, d);
            const int N = static_cast<int>(to_ll(h0(n, d)));
            for (int q = 0; q <= n + 1; ++q) {
                for (int p = 0; p <= N; ++p) {
                    const auto c = eng.duality_check(params, p, q, F0);
                    if (!c.equal) {
                        detail = "(" + std::to_string(n) + "," + std::to_string(d) + ") K_{" + std::to_string(p) +
                                 "," + std::to_string(q) + "} = " + std::to_string(c.lhs.dim) + " vs partner " +
                                 std::to_string(c.rhs.dim);
                        return false;
                    }
                }
            }
        }
        return true;
    });

    run_check(rep, "evaluation and projection maps", [&](std::string& detail) {
        std::mt19937_64 rng(7);
        for (auto [n, d, p] : {std::tuple{2, 2, 3}, {1, 4, 2}, {1, 3, 2}}) {
            const VeroneseParams params(n, d);
            HomologySpace H(params, p, 1, P);
            const auto pts = random_points_on_D(params, P, 11);
            const int s = static_cast<int>(pts.size());
            // chain maps: commute with d on random chains
            for (int i = 0; i < 10; ++i) {
                const auto c = random_chain({params, p + 1, 0}, P, rng, 6);
                const auto x = random_point(n, P, rng);
                const auto phi = evaluation_functional(n, d, x);
                if (!(apply_differential(contract_chain(phi, c)) == contract_chain(phi, apply_differential(c)))) {
                    detail = "contraction does not commute with d";
                    return false;
                }
                if (p + 1 >= s + 1 &&
                    !(apply_differential(ev_D_chain(c, pts)) == ev_D_chain(apply_differential(c), pts))) {
                    detail = "ev_D does not commute with d";
                    return false;
                }
            }
            for (const auto& cl : H.basis()) {
                const auto a = ev_D_chain(cl.representative(), pts);
                const auto b = ev_composite_chain(cl.representative(), pts);
                if (!(a == b) && !(a == b.scaled(P - 1))) {
                    detail = "ev_D is not the composite of contractions";
                    return false;
                }
                if (!projection_factor_check(cl, pts).in_subspace_mod_boundary) {
                    detail = "projection factorization fails";
                    return false;
                }
            }
        }
        return true;
    });

    run_check(rep, "cache round-trip", [&](std::string& detail) {
        namespace fs = std::filesystem;
        fs::path dir = opts.scratch;
        bool temp = false;
        if (dir.empty()) {
            dir = fs::temp_directory_path() /
                  ("vsl-selftest-" + std::to_string(Clock::now().time_since_epoch().count()));
            temp = true;
        }
        fs::create_directories(dir);
        bool ok = true;
        {
            EngineConfig c1 = cfg;
            c1.cache = std::make_shared<BlockCache>(dir);
            BettiEngine first(c1);
            const auto t1 = first.betti_table(VeroneseParams(2, 2), 0, 6, 0, 2, F0);
            EngineConfig c2 = cfg;
            c2.cache = std::make_shared<BlockCache>(dir);
            BettiEngine second(c2);
            const auto t2 = second.betti_table(VeroneseParams(2, 2), 0, 6, 0, 2, F0);
            for (std::size_t i = 0; i < t1.entries.size(); ++i)
                ok = ok && t1.entries[i].result.dim == t2.entries[i].result.dim;
            if (second.eliminations() != 0 || c2.cache->appended() != 0) {
                detail = std::to_string(second.eliminations()) + " eliminations on re-run";
                ok = false;
            }
            if (first.eliminations() == 0) {
                detail = "first run performed no eliminations";
                ok = false;
            }
        }
        if (temp)
            fs::remove_all(dir);
        return ok;
    });

    return rep;
}

}  // namespace vsl
