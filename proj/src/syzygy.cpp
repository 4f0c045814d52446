#include "vsl/syzygy.hpp"

#include <algorithm>

namespace vsl {

void KoszulChain::add(const KoszulElement& e, Fp c)
{
    c %= prime_;
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = modp::add(it->second, c, prime_);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Fp KoszulChain::coefficient(const KoszulElement& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

KoszulChain KoszulChain::scaled(Fp c) const
{
    KoszulChain r(space_, prime_);
    for (const auto& [e, v] : terms_)
        r.add(e, modp::mul(v, c, prime_));
    return r;
}

KoszulChain& KoszulChain::operator+=(const KoszulChain& o)
{
    for (const auto& [e, v] : o.terms_)
        add(e, v);
    return *this;
}

KoszulChain& KoszulChain::operator-=(const KoszulChain& o)
{
    for (const auto& [e, v] : o.terms_)
        add(e, modp::neg(v, prime_));
    return *this;
}

bool operator==(const KoszulChain& a, const KoszulChain& b)
{
    return a.space_.p == b.space_.p && a.space_.q == b.space_.q && a.space_.params == b.space_.params &&
           a.prime_ == b.prime_ && a.terms_ == b.terms_;
}

std::map<MultiDegree, KoszulChain> KoszulChain::split() const
{
    std::map<MultiDegree, KoszulChain> parts;
    for (const auto& [e, v] : terms_) {
        auto m = element_multidegree(space_, e);
        parts.try_emplace(m, space_, prime_).first->second.add(e, v);
    }
    return parts;
}

KoszulChain apply_differential(const KoszulChain& c)
{
    const auto& sp = c.space();
    const KoszulSpace tgt{sp.params, sp.p - 1, sp.q + 1};
    KoszulChain out(tgt, c.prime());
    if (sp.p <= 0 || c.is_zero())
        return out;
    const int n = sp.params.n;
    const Fp P = c.prime();
    auto vb = basis(n, sp.params.d);
    auto cb_src = basis(n, sp.coeff_degree());
    auto cb_tgt = basis(n, tgt.coeff_degree());
    std::vector<std::uint32_t> idx(sp.p), rest(sp.p - 1);
    std::vector<int> prod(n + 1);
    for (const auto& [e, coef] : c.terms()) {
        wedge_unrank_into(sp.p, e.wedge, idx.data());
        const auto& u = (*cb_src)[e.coeff].exponents;
        for (int j = 0; j < sp.p; ++j) {
            std::copy(idx.begin(), idx.begin() + j, rest.begin());
            std::copy(idx.begin() + j + 1, idx.end(), rest.begin() + j);
            const auto& v = (*vb)[idx[j]].exponents;
            for (int k = 0; k <= n; ++k)
                prod[k] = u[k] + v[k];
            const auto ui = cb_tgt->index_of(prod.data());
            const Fp term = deletion_sign(j) > 0 ? coef : modp::neg(coef, P);
            out.add({wedge_rank(std::span<const std::uint32_t>(rest)), static_cast<std::uint32_t>(*ui)}, term);
        }
    }
    return out;
}

KoszulClass::KoszulClass(KoszulChain representative) : rep_(std::move(representative))
{
    if (!apply_differential(rep_).is_zero())
        throw std::logic_error("KoszulClass: representative is not a cycle");
}

HomologySpace::HomologySpace(const VeroneseParams& params, int p, int q, Fp prime, std::size_t max_block_dim)
    : space_{params, p, q}, prime_(prime)
{
    if (space_.is_empty())
        return;
    for (const auto& bd : block_multidegrees(params, p, q)) {
        if (bd.dim > max_block_dim)
            throw ResourceLimitError("HomologySpace: block of dimension " + std::to_string(bd.dim) +
                                     " exceeds the dense limit");
        const auto out = differential_block({params, p, q, bd.mdeg});
        const auto in = differential_block({params, p + 1, q - 1, bd.mdeg});
        Block blk{block_elements(space_, bd.mdeg), {}, DenseMatrixModP(0, 0, prime), {}, {}};
        blk.in_cols = block_elements({params, p + 1, q - 1}, bd.mdeg);
        if (blk.in_cols.size() > max_block_dim)
            throw ResourceLimitError("HomologySpace: incoming block exceeds the dense limit");
        blk.incoming = DenseMatrixModP(blk.elems.size(), blk.in_cols.size(), prime);
        for (const auto& e : in.entries)
            blk.incoming(e.row, e.col) = e.sign > 0 ? Fp(1) : prime - 1;

        DenseMatrixModP dout(out.nrows(), blk.elems.size(), prime);
        for (const auto& e : out.entries)
            dout(e.row, e.col) = e.sign > 0 ? Fp(1) : prime - 1;
        const auto kernel = dout.nullspace();

        // extend a basis of the image by kernel vectors
        const std::size_t ni = blk.in_cols.size();
        DenseMatrixModP stacked(blk.elems.size(), ni + kernel.size(), prime);
        for (std::size_t r = 0; r < blk.elems.size(); ++r) {
            for (std::size_t c = 0; c < ni; ++c)
                stacked(r, c) = blk.incoming(r, c);
            for (std::size_t k = 0; k < kernel.size(); ++k)
                stacked(r, ni + k) = kernel[k][r];
        }
        for (auto pc : stacked.rref()) {
            if (pc < ni)
                continue;
            const auto& vec = kernel[pc - ni];
            KoszulChain rep(space_, prime);
            for (std::size_t r = 0; r < vec.size(); ++r)
                rep.add(blk.elems[r], vec[r]);
            blk.class_ids.push_back(basis_.size());
            blk.class_vectors.push_back(vec);
            basis_.emplace_back(std::move(rep));
        }
        blocks_.emplace(bd.mdeg, std::move(blk));
    }
}

std::vector<Fp> HomologySpace::block_vector(const Block& blk, const KoszulChain& part) const
{
    std::vector<Fp> v(blk.elems.size(), 0);
    for (const auto& [e, c] : part.terms()) {
        auto it = std::lower_bound(blk.elems.begin(), blk.elems.end(), e);
        v[it - blk.elems.begin()] = c;
    }
    return v;
}

std::vector<Fp> HomologySpace::coordinates(const KoszulChain& cycle) const
{
    if (!apply_differential(cycle).is_zero())
        throw std::logic_error("HomologySpace::coordinates: chain is not a cycle");
    std::vector<Fp> coords(basis_.size(), 0);
    for (const auto& [m, part] : cycle.split()) {
        const Block& blk = blocks_.at(m);
        const std::size_t ni = blk.in_cols.size();
        DenseMatrixModP a(blk.elems.size(), ni + blk.class_vectors.size(), prime_);
        for (std::size_t r = 0; r < blk.elems.size(); ++r) {
            for (std::size_t c = 0; c < ni; ++c)
                a(r, c) = blk.incoming(r, c);
            for (std::size_t k = 0; k < blk.class_vectors.size(); ++k)
                a(r, ni + k) = blk.class_vectors[k][r];
        }
        const auto x = a.solve(block_vector(blk, part));
        if (!x)
            throw std::logic_error("HomologySpace::coordinates: cycle outside the computed kernel");
        for (std::size_t k = 0; k < blk.class_ids.size(); ++k)
            coords[blk.class_ids[k]] = (*x)[ni + k];
    }
    return coords;
}

std::optional<KoszulChain> HomologySpace::boundary_preimage(const KoszulChain& chain) const
{
    const KoszulSpace src{space_.params, space_.p + 1, space_.q - 1};
    KoszulChain y(src, prime_);
    for (const auto& [m, part] : chain.split()) {
        const Block& blk = blocks_.at(m);
        const auto x = blk.incoming.solve(block_vector(blk, part));
        if (!x)
            return std::nullopt;
        for (std::size_t c = 0; c < x->size(); ++c)
            y.add(blk.in_cols[c], (*x)[c]);
    }
    return y;
}

std::vector<KoszulClass> cycle_basis(const VeroneseParams& params, int p, int q, const FieldSpec& f)
{
    if (!f.is_prime_field())
        throw std::invalid_argument("cycle_basis: needs a prime field");
    return HomologySpace(params, p, q, f.characteristic()).basis();
}

Functional evaluation_functional(int n, int d, const PointOverField& x)
{
    auto vb = basis(n, d);
    Functional phi;
    phi.prime = x.prime();
    phi.coefficients.reserve(vb->size());
    for (const auto& m : vb->elements())
        phi.coefficients.push_back(evaluate(m, x));
    return phi;
}

KoszulChain contract_chain(const Functional& phi, const KoszulChain& c)
{
    const auto& sp = c.space();
    KoszulChain out({sp.params, sp.p - 1, sp.q}, c.prime());
    if (sp.p <= 0)
        return out;
    const Fp P = c.prime();
    std::vector<std::uint32_t> idx(sp.p), rest(sp.p - 1);
    const bool twist = sp.p & 1;
    for (const auto& [e, coef] : c.terms()) {
        wedge_unrank_into(sp.p, e.wedge, idx.data());
        for (int j = 0; j < sp.p; ++j) {
            const Fp f = phi(idx[j]) % P;
            if (f == 0)
                continue;
            std::copy(idx.begin(), idx.begin() + j, rest.begin());
            std::copy(idx.begin() + j + 1, idx.end(), rest.begin() + j);
            Fp term = modp::mul(coef, f, P);
            if ((deletion_sign(j) < 0) != twist)
                term = modp::neg(term, P);
            out.add({wedge_rank(std::span<const std::uint32_t>(rest)), e.coeff}, term);
        }
    }
    return out;
}

KoszulClass ev_point(const KoszulClass& c, const PointOverField& x)
{
    const auto& sp = c.space();
    if (sp.p < 1)
        throw std::domain_error("ev_point: requires p >= 1");
    if (x.coordinates().size() != static_cast<std::size_t>(sp.params.n + 1) ||
        x.prime() != c.representative().prime())
        throw std::domain_error("ev_point: point does not match the chain");
    auto out = contract_chain(evaluation_functional(sp.params.n, sp.params.d, x), c.representative());
    if (!apply_differential(out).is_zero())
        throw std::logic_error("ev_point: image is not a cycle (sign convention broken)");
    return KoszulClass(std::move(out));
}

void certify_points_on_D(const VeroneseParams& params, std::span<const PointOverField> points)
{
    const auto split = restriction_split(params.n, params.d);
    const std::size_t s = split.transversal.size();
    if (points.size() != s)
        throw std::domain_error("ev_D: expected " + std::to_string(s) + " points, got " +
                                std::to_string(points.size()));
    if (s == 0)
        return;
    const Fp P = points.front().prime();
    auto vb = basis(params.n, params.d);
    std::vector<Fp> m(s * s);
    for (std::size_t k = 0; k < s; ++k) {
        if (!points[k].on_hyperplane_x0())
            throw std::domain_error("ev_D: point " + std::to_string(k) + " is not on D = {x_0 = 0}");
        if (points[k].prime() != P || points[k].coordinates().size() != static_cast<std::size_t>(params.n + 1))
            throw std::domain_error("ev_D: inconsistent point " + std::to_string(k));
        for (std::size_t l = 0; l < s; ++l)
            m[k * s + l] = evaluate((*vb)[split.transversal[l]], points[k]);
    }
    if (determinant_mod(std::move(m), s, P) == 0)
        throw GenericityError("ev_D: points are not in general position (transversal evaluation matrix is "
                              "singular); resample, e.g. with the next seed");
}

PointOverField random_point(int n, Fp prime, std::mt19937_64& rng)
{
    std::uniform_int_distribution<Fp> dist(0, prime - 1);
    while (true) {
        std::vector<Fp> c(n + 1);
        for (auto& x : c)
            x = dist(rng);
        if (std::any_of(c.begin(), c.end(), [](Fp v) { return v != 0; }))
            return PointOverField(std::move(c), prime);
    }
}

std::vector<PointOverField> random_points_on_D(const VeroneseParams& params, Fp prime, std::uint64_t seed,
                                               int* attempts)
{
    const std::size_t s = restriction_split(params.n, params.d).transversal.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Fp> dist(0, prime - 1);
    for (int attempt = 1; attempt <= 1000; ++attempt) {
        std::vector<PointOverField> pts;
        pts.reserve(s);
        while (pts.size() < s) {
            std::vector<Fp> c(params.n + 1, 0);
            for (int k = 1; k <= params.n; ++k)
                c[k] = dist(rng);
            if (std::any_of(c.begin(), c.end(), [](Fp v) { return v != 0; }))
                pts.emplace_back(std::move(c), prime);
        }
        try {
            certify_points_on_D(params, pts);
            if (attempts)
                *attempts = attempt;
            return pts;
        }
        catch (const GenericityError&) {
        }
    }
    throw GenericityError("random_points_on_D: no general configuration found in 1000 draws");
}

KoszulChain ev_D_chain(const KoszulChain& c, std::span<const PointOverField> points, Fp gamma_scale)
{
    const auto& sp = c.space();
    certify_points_on_D(sp.params, points);
    const int s = static_cast<int>(points.size());
    if (sp.p < s)
        throw std::domain_error("ev_D: requires p >= s");
    const Fp P = c.prime();
    std::vector<Functional> phis;
    for (const auto& x : points)
        phis.push_back(evaluation_functional(sp.params.n, sp.params.d, x));
    // gamma is multilinear, so rescaling it is rescaling one functional
    if (!phis.empty()) {
        for (auto& v : phis.front().coefficients)
            v = modp::mul(v, gamma_scale, P);
    }

    const std::size_t N = basis(sp.params.n, sp.params.d)->size();
    std::map<std::uint32_t, WedgeVector> by_coeff;
    for (const auto& [e, coef] : c.terms())
        by_coeff.try_emplace(e.coeff, sp.p, N, P).first->second.add_ranked(e.wedge, coef);

    KoszulChain out({sp.params, sp.p - s, sp.q}, P);
    const bool twist = (static_cast<long long>(s) * sp.p) & 1;
    for (const auto& [u, w] : by_coeff) {
        const auto image = detail::alpha_contract(phis, w);
        for (const auto& [rank, v] : image.terms())
            out.add({rank, u}, twist ? modp::neg(v, P) : v);
    }
    return out;
}

KoszulClass ev_D(const KoszulClass& c, std::span<const PointOverField> points, Fp gamma_scale)
{
    auto out = ev_D_chain(c.representative(), points, gamma_scale);
    if (!apply_differential(out).is_zero())
        throw std::logic_error("ev_D: image is not a cycle");
    return KoszulClass(std::move(out));
}

KoszulChain ev_composite_chain(const KoszulChain& c, std::span<const PointOverField> points)
{
    KoszulChain cur = c;
    for (const auto& x : points)
        cur = contract_chain(evaluation_functional(c.space().params.n, c.space().params.d, x), cur);
    return cur;
}

ProjectionFactorResult projection_factor_check(const KoszulClass& c, std::span<const PointOverField> points,
                                               Fp gamma_scale)
{
    const auto image = ev_D_chain(c.representative(), points, gamma_scale);
    const auto& sp = image.space();
    const Fp P = image.prime();
    const KoszulSpace src{sp.params, sp.p + 1, sp.q - 1};
    auto vb = basis(sp.params.n, sp.params.d);
    std::vector<std::uint32_t> idx(sp.p);
    auto outside_W = [&](const KoszulElement& e) {
        wedge_unrank_into(sp.p, e.wedge, idx.data());
        return std::any_of(idx.begin(), idx.end(), [&](std::uint32_t i) { return (*vb)[i].exponents[0] == 0; });
    };

    ProjectionFactorResult res;
    KoszulChain witness(src, P);
    for (const auto& [m, part] : image.split()) {
        const auto elems = block_elements(sp, m);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (outside_W(elems[i]))
                keep.push_back(i);
        }
        if (keep.empty())
            continue;
        const auto in = differential_block({sp.params, sp.p + 1, sp.q - 1, m});
        std::vector<std::size_t> row_of(elems.size(), keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k)
            row_of[keep[k]] = k;
        DenseMatrixModP a(keep.size(), in.ncols(), P);
        for (const auto& e : in.entries) {
            if (row_of[e.row] < keep.size())
                a(row_of[e.row], e.col) = e.sign > 0 ? Fp(1) : P - 1;
        }
        std::vector<Fp> rhs(keep.size(), 0);
        for (std::size_t k = 0; k < keep.size(); ++k)
            rhs[k] = part.coefficient(elems[keep[k]]);
        if (std::all_of(rhs.begin(), rhs.end(), [](Fp v) { return v == 0; }))
            continue;
        const auto x = a.solve(rhs);
        if (!x)
            return res;
        for (std::size_t col = 0; col < x->size(); ++col)
            witness.add(in.cols[col], (*x)[col]);
    }
    KoszulChain residual = image;
    residual -= apply_differential(witness);
    for (const auto& [e, v] : residual.terms()) {
        if (outside_W(e))
            throw std::logic_error("projection_factor_check: witness does not cancel the transversal part");
    }
    res.in_subspace_mod_boundary = true;
    res.witness = std::move(witness);
    return res;
}

DenseMatrixModP induced_matrix(const HomologySpace& source, const HomologySpace& target,
                               const std::function<KoszulChain(const KoszulChain&)>& map)
{
    DenseMatrixModP m(target.dimension(), source.dimension(), source.prime());
    for (std::size_t j = 0; j < source.dimension(); ++j) {
        const auto coords = target.coordinates(map(source.basis()[j].representative()));
        for (std::size_t i = 0; i < coords.size(); ++i)
            m(i, j) = coords[i];
    }
    return m;
}

IdentificationCheck twist_identification_check(BettiEngine& engine, int n, int d, int p, const FieldSpec& f)
{
    if (d < 2)
        throw std::domain_error("twist_identification_check: requires d >= 2");
    IdentificationCheck c;
    c.lhs = engine.kpq_dim(VeroneseParams(n, d - 1, -1), p, 1, f);
    c.rhs = engine.kpq_dim(VeroneseParams(n, d - 1, d - 2), p, 0, f);
    c.equal = c.lhs.computed() && c.rhs.computed() && c.lhs.dim == c.rhs.dim;
    return c;
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::CONSISTENT: return "CONSISTENT";
    case Verdict::VIOLATION: return "VIOLATION";
    case Verdict::OUT_OF_APPLICABILITY: return "OUT_OF_APPLICABILITY";
    case Verdict::SKIPPED: return "SKIPPED";
    }
    return "?";
}

ChainReport theorem_chain_check(BettiEngine& engine, const VeroneseParams& params, int p, const FieldSpec& f)
{
    if (params.d < 2)
        throw std::domain_error("theorem_chain_check: requires d >= 2 (the projected degree d-1 must be >= 1)");
    if (params.b != 0)
        throw std::domain_error("theorem_chain_check: defined for the untwisted embedding (b = 0)");
    ChainReport rep;
    rep.params = params;
    rep.p = p;
    rep.s = to_ll(projection_codim(params));
    rep.green_bound = to_ll(binom(params.d - 2 + params.n, params.n));
    if (params.n >= 3)
        rep.main_bound = to_ll(main_thm_bound(params));
    rep.first = engine.kpq_dim(params, p, 1, f);
    if (!rep.first.computed()) {
        rep.note = "first group skipped: " + rep.first.note;
        return rep;
    }
    if (p < rep.s) {
        rep.verdict = Verdict::OUT_OF_APPLICABILITY;
        rep.note = "p < s: the s-point evaluation map is not defined";
        return rep;
    }
    rep.second = engine.kpq_dim(VeroneseParams(params.n, params.d - 1, -1), static_cast<int>(p - rep.s), 1, f);
    if (!rep.second.computed()) {
        rep.note = "second group skipped: " + rep.second.note;
        return rep;
    }
    const bool first_nz = rep.first.dim != 0, second_nz = rep.second.dim != 0;
    rep.implication_holds = !first_nz || second_nz;
    rep.green_holds = (p - rep.s < rep.green_bound) || !second_nz;
    const bool main_holds = !rep.main_bound || p < *rep.main_bound || !first_nz;
    rep.verdict = (rep.implication_holds && rep.green_holds && main_holds) ? Verdict::CONSISTENT : Verdict::VIOLATION;
    if (!rep.implication_holds)
        rep.note = "K_{p,1} nonzero but the projected group vanishes";
    else if (!rep.green_holds)
        rep.note = "projected group nonzero beyond the Green bound";
    else if (!main_holds)
        rep.note = "K_{p,1} nonzero beyond the main bound";
    return rep;
}

}  // namespace vsl
