#include "vsl/bounds.hpp"

#include <limits>
#include <stdexcept>

namespace vsl {

VeroneseParams::VeroneseParams(int n_, int d_, int b_) : n(n_), d(d_), b(b_)
{
    if (n < 1)
        throw std::domain_error("VeroneseParams: n must be >= 1");
    if (d < 1)
        throw std::domain_error("VeroneseParams: d must be >= 1");
}

std::string_view to_string(PredictionSource s)
{
    switch (s) {
    case PredictionSource::EL_CONJ: return "EL_CONJ";
    case PredictionSource::LINEAR_CONJ: return "LINEAR_CONJ";
    case PredictionSource::MAIN_THM: return "MAIN_THM";
    case PredictionSource::QN_THM: return "QN_THM";
    case PredictionSource::GREEN_VANISHING: return "GREEN_VANISHING";
    case PredictionSource::GB_VANISHING: return "GB_VANISHING";
    case PredictionSource::DUALITY_TRIVIAL: return "DUALITY_TRIVIAL";
    }
    return "?";
}

bool RangePrediction::contains(long long p) const
{
    if (lo && BigInt(p) < *lo)
        return false;
    if (hi && BigInt(p) > *hi)
        return false;
    return true;
}

BigInt binom(long long a, long long k)
{
    if (a < 0)
        throw std::domain_error("binom: negative upper index");
    if (k < 0 || k > a)
        return 0;
    if (k > a - k)
        k = a - k;
    BigInt r = 1;
    // r stays integral: after step i it equals C(a-k+i, i)
    for (long long i = 1; i <= k; ++i) {
        r *= a - k + i;
        r /= i;
    }
    return r;
}

BigInt h0(int n, long long m)
{
    if (n < 1)
        throw std::domain_error("h0: n must be >= 1");
    if (m < 0)
        return 0;
    return binom(m + n, n);
}

RangePrediction el_range(const VeroneseParams& params, int q)
{
    const int n = params.n;
    const long long d = params.d;
    if (q < 1 || q > n)
        throw std::domain_error("el_range: q must lie in [1, n]");
    RangePrediction r{PredictionSource::EL_CONJ, q, {}, {}, true, {}};
    // C(d-1,q) with d-1 >= 0 always since d >= 1
    r.lo = binom(d + q, q) - binom(d - 1, q) - q;
    r.hi = binom(d + n, n) - binom(d + n - q, n - q) + binom(n, n - q) - q - 1;
    if (d < n + 1) {
        r.applicable = false;
        r.reason = "requires d >= n+1";
    }
    else {
        r.reason = "nonvanishing iff lo <= p <= hi";
    }
    return r;
}

BigInt linear_conj_bound(const VeroneseParams& params)
{
    if (params.n < 2)
        throw std::domain_error("linear_conj_bound: n must be >= 2");
    const long long n = params.n, d = params.d;
    return binom(d + n - 1, n) + n - 1;
}

BigInt main_thm_bound(const VeroneseParams& params)
{
    if (params.n < 3)
        throw std::domain_error("main_thm_bound: n must be >= 3");
    const long long n = params.n, d = params.d;
    return binom(d + n - 1, n) + binom(d + n - 2, n - 2);
}

BigInt qn_thm_bound(const VeroneseParams& params)
{
    const long long n = params.n, d = params.d;
    if (n < 2)
        throw std::domain_error("qn_thm_bound: n must be >= 2");
    if (d <= n)
        throw std::domain_error("qn_thm_bound: requires d >= n+1");
    return binom(d + n, n) - binom(d - 1, n) - n - 1;
}

BigInt projection_codim(const VeroneseParams& params)
{
    const long long n = params.n, d = params.d;
    BigInt s = binom(d + n - 1, n - 1);
    if (s != h0(params.n, d) - h0(params.n, d - 1))
        throw std::logic_error("projection_codim: Pascal identity failed");
    return s;
}

BigInt green_vanishing_bound(const VeroneseParams& params, int q)
{
    if (q < 0)
        throw std::domain_error("green_vanishing_bound: q must be >= 0");
    return h0(params.n, static_cast<long long>(params.b) + static_cast<long long>(q) * params.d);
}

DualIndex duality_partner(const VeroneseParams& params, long long p, int q)
{
    const long long r = to_ll(h0(params.n, params.d)) - 1;
    return {r - params.n - p, params.n + 1 - q, -params.n - 1 - params.b};
}

BigInt gb_bound(int d)
{
    if (d < 1)
        throw std::domain_error("gb_bound: d must be >= 1");
    return BigInt(3) * d - 2;
}

long long to_ll(const BigInt& v)
{
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("value does not fit in 64 bits");
    return v.convert_to<long long>();
}

}  // namespace vsl
