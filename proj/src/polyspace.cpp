#include "vsl/polyspace.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace vsl {

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::string MultiDegree::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < weights.size(); ++i)
        s += (i ? "," : "") + std::to_string(weights[i]);
    return s + ")";
}

std::string Monomial::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += "x" + std::to_string(i);
        if (exponents[i] > 1)
            s += "^" + std::to_string(exponents[i]);
    }
    return s.empty() ? "1" : s;
}

int MultiDegree::total() const { return std::accumulate(weights.begin(), weights.end(), 0); }

bool MultiDegree::is_sorted_descending() const
{
    return std::is_sorted(weights.begin(), weights.end(), std::greater<>());
}

Monomial multiply(const Monomial& a, const Monomial& b)
{
    if (a.nvars() != b.nvars())
        throw std::domain_error("multiply: monomials live in different rings");
    Monomial r = a;
    for (std::size_t i = 0; i < r.exponents.size(); ++i)
        r.exponents[i] += b.exponents[i];
    return r;
}

bool grevlex_greater(const Monomial& a, const Monomial& b)
{
    const int da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.exponents[i] != b.exponents[i])
            return a.exponents[i] < b.exponents[i];
    }
    return false;
}

namespace {

void enumerate(int vars_left, int degree_left, std::vector<int>& cur, std::vector<Monomial>& out)
{
    if (vars_left == 1) {
        cur.push_back(degree_left);
        out.push_back(Monomial{cur});
        cur.pop_back();
        return;
    }
    for (int e = degree_left; e >= 0; --e) {
        cur.push_back(e);
        enumerate(vars_left - 1, degree_left - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int m) : n_(n), m_(m)
{
    if (n < 1)
        throw std::domain_error("monomial_basis: n must be >= 1");
    if (m < 0)
        return;
    long double span = 1;
    for (int i = 0; i <= n; ++i)
        span *= (m + 1);
    if (span >= 1.8e19L)
        throw std::length_error("monomial_basis: degree too large for index packing");
    std::vector<int> cur;
    enumerate(n + 1, m, cur, elements_);
    std::sort(elements_.begin(), elements_.end(), grevlex_greater);
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i)
        index_.emplace(key(elements_[i].exponents.data()), static_cast<std::uint32_t>(i));
}

std::uint64_t MonomialBasis::key(const int* exps) const
{
    std::uint64_t k = 0;
    for (int i = n_; i >= 0; --i)
        k = k * static_cast<std::uint64_t>(m_ + 1) + static_cast<std::uint64_t>(exps[i]);
    return k;
}

std::optional<std::size_t> MonomialBasis::index_of(const int* exps) const
{
    int deg = 0;
    for (int i = 0; i <= n_; ++i) {
        if (exps[i] < 0)
            return std::nullopt;
        deg += exps[i];
    }
    if (deg != m_)
        return std::nullopt;
    auto it = index_.find(key(exps));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> MonomialBasis::index_of(const Monomial& mono) const
{
    if (mono.nvars() != static_cast<std::size_t>(n_ + 1))
        return std::nullopt;
    return index_of(mono.exponents.data());
}

std::shared_ptr<const MonomialBasis> basis(int n, int m)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> registry;
    std::lock_guard lock(mu);
    auto& slot = registry[{n, m < 0 ? -1 : m}];
    if (!slot)
        slot = std::make_shared<const MonomialBasis>(n, m);
    return slot;
}

std::vector<Monomial> monomial_basis(int n, int m)
{
    if (n < 1)
        throw std::domain_error("monomial_basis: n must be >= 1");
    return basis(n, m)->elements();
}

RestrictionSplit restriction_split(int n, int d)
{
    if (n < 1 || d < 0)
        throw std::domain_error("restriction_split: need n >= 1, d >= 0");
    auto b = basis(n, d);
    RestrictionSplit split;
    for (std::size_t i = 0; i < b->size(); ++i) {
        if ((*b)[i].exponents[0] > 0)
            split.divisible.push_back(i);
        else
            split.transversal.push_back(i);
    }
    return split;
}

PointOverField::PointOverField(std::vector<Fp> coords, Fp prime) : coords_(std::move(coords)), prime_(prime)
{
    auto first = std::find_if(coords_.begin(), coords_.end(), [&](Fp c) { return c % prime_ != 0; });
    if (first == coords_.end())
        throw std::invalid_argument("PointOverField: all coordinates are zero");
    const Fp scale = modp::inv(*first % prime_, prime_);
    for (auto& c : coords_)
        c = modp::mul(c % prime_, scale, prime_);
}

Fp evaluate(const Monomial& m, const PointOverField& x)
{
    const Fp p = x.prime();
    if (m.nvars() != x.coordinates().size())
        throw std::domain_error("evaluate: dimension mismatch");
    Fp r = 1;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exponents[i] > 0)
            r = modp::mul(r, modp::pow(x.coordinates()[i], m.exponents[i], p), p);
    }
    return r;
}

}  // namespace vsl
