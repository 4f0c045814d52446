#ifndef VSL_BOUNDS_HPP
#define VSL_BOUNDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace vsl {

using BigInt = boost::multiprecision::cpp_int;

/// Parameters of the twisted Veronese setup K_{p,q}(P^n; O(b), O(d)).
struct VeroneseParams {
    int n = 1;
    int d = 1;
    int b = 0;

    VeroneseParams() = default;
    VeroneseParams(int n_, int d_, int b_ = 0);

    friend bool operator==(const VeroneseParams&, const VeroneseParams&) = default;
    friend auto operator<=>(const VeroneseParams&, const VeroneseParams&) = default;
};

enum class PredictionSource {
    EL_CONJ,
    LINEAR_CONJ,
    MAIN_THM,
    QN_THM,
    GREEN_VANISHING,
    GB_VANISHING,
    DUALITY_TRIVIAL,
};

std::string_view to_string(PredictionSource s);

/// An interval statement about the strand q. lo/hi absent means unbounded.
///
/// For EL_CONJ the interval is where K_{p,q} is predicted nonzero (and zero
/// outside). For every other source it is the interval on which K_{p,q} is
/// predicted to vanish.
struct RangePrediction {
    PredictionSource source;
    int q = 0;
    std::optional<BigInt> lo;
    std::optional<BigInt> hi;
    bool applicable = true;
    std::string reason;

    bool contains(long long p) const;
};

BigInt binom(long long a, long long k);
BigInt h0(int n, long long m);

/// Nonvanishing interval of the Ein-Lazarsfeld range for strand q.
RangePrediction el_range(const VeroneseParams& params, int q);

/// K_{p,1} predicted to vanish for p >= C(d+n-1,n)+n-1.
BigInt linear_conj_bound(const VeroneseParams& params);

/// K_{p,1} = 0 for p >= C(d+n-1,n)+C(d+n-2,n-2); needs n >= 3.
BigInt main_thm_bound(const VeroneseParams& params);

/// K_{p,n} = 0 for p <= C(d+n,n)-C(d-1,n)-n-1; needs n >= 2, d >= n+1.
BigInt qn_thm_bound(const VeroneseParams& params);

/// s = h0(O_{P^{n-1}}(d)), the number of points on the hyperplane.
BigInt projection_codim(const VeroneseParams& params);

/// Green vanishing threshold h0(n, b+qd): K_{p,q} = 0 for p >= this value.
BigInt green_vanishing_bound(const VeroneseParams& params, int q);

struct DualIndex {
    long long p;
    int q;
    int b;
    friend bool operator==(const DualIndex&, const DualIndex&) = default;
};

/// Index of the Koszul group dual to K_{p,q}(P^n, O(b); O(d)).
DualIndex duality_partner(const VeroneseParams& params, long long p, int q);

/// Green-Birkenhake: K_{p,2}(P^2, O(d)) = 0 for p < 3d-2.
BigInt gb_bound(int d);

/// Narrowing helper; throws std::overflow_error if v does not fit.
long long to_ll(const BigInt& v);

}  // namespace vsl

#endif  // VSL_BOUNDS_HPP
