#ifndef VSL_FIELD_HPP
#define VSL_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>

namespace vsl {

/// Residue in [0, p). All arithmetic below assumes p < 2^31.
using Fp = std::uint32_t;

/// Ten 31-bit primes; selected by seed or index, never anything smaller.
inline constexpr std::array<std::uint32_t, 10> kPinnedPrimes = {
    2147483647u, 2147483629u, 2147483587u, 2147483579u, 2147483563u,
    2147483549u, 2147483543u, 2147483497u, 2147483489u, 2147483477u,
};

bool is_prime(std::uint64_t v);

/// Either GF(p) for an odd prime p < 2^31, or the rationals.
class FieldSpec {
public:
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec rationals();
    /// Pinned prime chosen deterministically from a seed.
    static FieldSpec from_seed(std::uint64_t seed);

    bool is_prime_field() const { return p_ != 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

namespace modp {

inline Fp add(Fp a, Fp b, Fp p)
{
    std::uint64_t s = std::uint64_t(a) + b;
    return Fp(s >= p ? s - p : s);
}

inline Fp sub(Fp a, Fp b, Fp p) { return a >= b ? a - b : Fp(std::uint64_t(a) + p - b); }

inline Fp mul(Fp a, Fp b, Fp p) { return Fp((std::uint64_t(a) * b) % p); }

inline Fp neg(Fp a, Fp p) { return a == 0 ? 0 : p - a; }

Fp pow(Fp a, std::uint64_t e, Fp p);

/// Inverse of a nonzero residue.
Fp inv(Fp a, Fp p);

/// Image of a signed integer in GF(p).
inline Fp from_int(long long v, Fp p)
{
    long long r = v % static_cast<long long>(p);
    return Fp(r < 0 ? r + p : r);
}

}  // namespace modp

}  // namespace vsl

#endif  // VSL_FIELD_HPP
