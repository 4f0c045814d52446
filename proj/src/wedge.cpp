#include "vsl/wedge.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace vsl {

std::uint64_t binom64(std::uint64_t a, std::uint64_t k)
{
    if (k > a)
        return 0;
    if (k > a - k)
        k = a - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (a - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binom64: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

WedgeBasisElement::WedgeBasisElement(std::vector<std::uint32_t> idx) : indices(std::move(idx))
{
    for (std::size_t i = 1; i < indices.size(); ++i) {
        if (indices[i - 1] >= indices[i])
            throw std::domain_error("WedgeBasisElement: indices must be strictly increasing");
    }
}

WedgeBasisElement WedgeBasisElement::without(std::size_t j) const
{
    WedgeBasisElement r;
    r.indices.reserve(indices.size() - 1);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i != j)
            r.indices.push_back(indices[i]);
    }
    return r;
}

std::uint64_t wedge_rank(std::span<const std::uint32_t> idx)
{
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
        r += binom64(idx[i], i + 1);
    return r;
}

std::uint64_t wedge_rank(const WedgeBasisElement& e) { return wedge_rank(std::span<const std::uint32_t>(e.indices)); }

void wedge_unrank_into(std::size_t p, std::uint64_t r, std::uint32_t* out)
{
    // greedy from the top position: largest c with C(c, i+1) <= r
    for (std::size_t i = p; i-- > 0;) {
        std::uint64_t c = i;
        while (binom64(c + 1, i + 1) <= r)
            ++c;
        out[i] = static_cast<std::uint32_t>(c);
        r -= binom64(c, i + 1);
    }
}

WedgeBasisElement wedge_unrank(std::size_t p, std::uint64_t r, std::size_t universe)
{
    if (r >= binom64(universe, p))
        throw std::domain_error("wedge_unrank: rank out of range");
    WedgeBasisElement e;
    e.indices.resize(p);
    wedge_unrank_into(p, r, e.indices.data());
    return e;
}

int deletion_sign(const WedgeBasisElement& e, std::size_t j)
{
    if (j >= e.degree())
        throw std::domain_error("deletion_sign: position out of range");
    return deletion_sign(j);
}

void WedgeVector::add_ranked(std::uint64_t rank, Fp c)
{
    c %= prime_;
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(rank, c);
    if (!inserted) {
        it->second = modp::add(it->second, c, prime_);
        if (it->second == 0)
            terms_.erase(it);
    }
}

void WedgeVector::add(const WedgeBasisElement& e, Fp c)
{
    if (e.degree() != p_)
        throw std::domain_error("WedgeVector::add: degree mismatch");
    if (!e.indices.empty() && e.indices.back() >= universe_)
        throw std::domain_error("WedgeVector::add: index out of range");
    add_ranked(wedge_rank(e), c);
}

Fp WedgeVector::coefficient(const WedgeBasisElement& e) const
{
    auto it = terms_.find(wedge_rank(e));
    return it == terms_.end() ? 0 : it->second;
}

WedgeVector WedgeVector::scaled(Fp c) const
{
    WedgeVector r(p_, universe_, prime_);
    for (auto [k, v] : terms_)
        r.add_ranked(k, modp::mul(v, c, prime_));
    return r;
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& o)
{
    if (o.p_ != p_ || o.prime_ != prime_)
        throw std::domain_error("WedgeVector: incompatible operands");
    for (auto [k, v] : o.terms_)
        add_ranked(k, v);
    return *this;
}

bool operator==(const WedgeVector& a, const WedgeVector& b)
{
    return a.p_ == b.p_ && a.prime_ == b.prime_ && a.terms_ == b.terms_;
}

WedgeVector contract(const Functional& phi, const WedgeVector& v)
{
    const Fp P = v.prime();
    if (v.degree() == 0)
        return WedgeVector(0, v.universe(), P);
    WedgeVector out(v.degree() - 1, v.universe(), P);
    std::vector<std::uint32_t> idx(v.degree()), rest(v.degree() - 1);
    for (auto [rank, coef] : v.terms()) {
        wedge_unrank_into(v.degree(), rank, idx.data());
        for (std::size_t j = 0; j < idx.size(); ++j) {
            const Fp f = phi(idx[j]) % P;
            if (f == 0)
                continue;
            std::copy(idx.begin(), idx.begin() + j, rest.begin());
            std::copy(idx.begin() + j + 1, idx.end(), rest.begin() + j);
            Fp c = modp::mul(coef, f, P);
            if (deletion_sign(j) < 0)
                c = modp::neg(c, P);
            out.add_ranked(wedge_rank(rest), c);
        }
    }
    return out;
}

Fp determinant_mod(std::vector<Fp> a, std::size_t k, Fp p)
{
    Fp det = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a[piv * k + col] == 0)
            ++piv;
        if (piv == k)
            return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < k; ++j)
                std::swap(a[piv * k + j], a[col * k + j]);
            det = modp::neg(det, p);
        }
        const Fp pv = a[col * k + col];
        det = modp::mul(det, pv, p);
        const Fp pinv = modp::inv(pv, p);
        for (std::size_t r = col + 1; r < k; ++r) {
            const Fp f = modp::mul(a[r * k + col], pinv, p);
            if (f == 0)
                continue;
            for (std::size_t j = col; j < k; ++j)
                a[r * k + j] = modp::sub(a[r * k + j], modp::mul(f, a[col * k + j], p), p);
        }
    }
    return det;
}

WedgeVector alpha_s(std::span<const Functional> functionals, const WedgeVector& v)
{
    if (v.degree() <= functionals.size())
        throw std::domain_error("alpha_s: requires p > s");
    return detail::alpha_contract(functionals, v);
}

WedgeVector detail::alpha_contract(std::span<const Functional> functionals, const WedgeVector& v)
{
    const std::size_t s = functionals.size();
    const std::size_t p = v.degree();
    const Fp P = v.prime();
    if (p < s)
        throw std::domain_error("alpha_contract: requires p >= s");
    WedgeVector out(p - s, v.universe(), P);
    if (s == 0) {
        out += v;
        return out;
    }

    std::vector<std::uint32_t> idx(p), rest(p - s);
    std::vector<std::size_t> live, choice(s);
    std::vector<Fp> gamma(s * s);
    for (auto [rank, coef] : v.terms()) {
        wedge_unrank_into(p, rank, idx.data());
        // positions on which every functional vanishes contribute a zero column
        live.clear();
        for (std::size_t j = 0; j < p; ++j) {
            bool any = false;
            for (const auto& phi : functionals)
                any = any || (phi(idx[j]) % P != 0);
            if (any)
                live.push_back(j);
        }
        if (live.size() < s)
            continue;
        // iterate s-subsets of live positions in lexicographic order
        for (std::size_t i = 0; i < s; ++i)
            choice[i] = i;
        while (true) {
            std::size_t possum = 0;
            for (std::size_t l = 0; l < s; ++l) {
                const std::size_t pos = live[choice[l]];
                possum += pos;
                for (std::size_t k = 0; k < s; ++k)
                    gamma[k * s + l] = functionals[k](idx[pos]) % P;
            }
            const Fp g = determinant_mod(gamma, s, P);
            if (g != 0) {
                std::size_t w = 0, c = 0;
                for (std::size_t j = 0; j < p; ++j) {
                    if (c < s && live[choice[c]] == j) {
                        ++c;
                        continue;
                    }
                    rest[w++] = idx[j];
                }
                Fp term = modp::mul(coef, g, P);
                if (possum & 1)
                    term = modp::neg(term, P);
                out.add_ranked(wedge_rank(rest), term);
            }
            std::size_t i = s;
            while (i > 0 && choice[i - 1] == live.size() - s + (i - 1))
                --i;
            if (i == 0)
                break;
            ++choice[i - 1];
            for (std::size_t j = i; j < s; ++j)
                choice[j] = choice[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace vsl
