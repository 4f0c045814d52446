#include "vsl/field.hpp"

#include <stdexcept>

namespace vsl {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t v)
{
    if (v < 2)
        return false;
    for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (v % small == 0)
            return v == small;
    }
    std::uint64_t dd = v - 1;
    int r = 0;
    while ((dd & 1) == 0) {
        dd >>= 1;
        ++r;
    }
    // deterministic witness set for 64-bit integers
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, dd, v);
        if (x == 1 || x == v - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod64(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (p < 3 || p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("FieldSpec: " + std::to_string(p) + " is not an odd prime below 2^31");
    return FieldSpec(p);
}

FieldSpec FieldSpec::rationals() { return FieldSpec(0); }

FieldSpec FieldSpec::from_seed(std::uint64_t seed) { return FieldSpec(kPinnedPrimes[seed % kPinnedPrimes.size()]); }

std::string FieldSpec::name() const { return p_ == 0 ? std::string("QQ") : "GF(" + std::to_string(p_) + ")"; }

namespace modp {

Fp pow(Fp a, std::uint64_t e, Fp p)
{
    std::uint64_t r = 1, base = a % p;
    while (e) {
        if (e & 1)
            r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return Fp(r);
}

Fp inv(Fp a, Fp p)
{
    if (a % p == 0)
        throw std::domain_error("modp::inv: zero has no inverse");
    return pow(a, p - 2, p);
}

}  // namespace modp

}  // namespace vsl
