#ifndef VSL_POLYSPACE_HPP
#define VSL_POLYSPACE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vsl/field.hpp"

namespace vsl {

/// Exponent vector of a monomial in x_0..x_n.
struct Monomial {
    std::vector<int> exponents;

    int degree() const;
    std::size_t nvars() const { return exponents.size(); }
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Torus weight in Z^{n+1}; the Koszul differential preserves it.
struct MultiDegree {
    std::vector<int> weights;

    int total() const;
    bool is_sorted_descending() const;
    /// "(w0,w1,...)"
    std::string to_string() const;

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;
};

Monomial multiply(const Monomial& a, const Monomial& b);

/// True if a > b in graded reverse lexicographic order (x_0 > x_1 > ...).
bool grevlex_greater(const Monomial& a, const Monomial& b);

/// Degree-m monomials in n+1 variables, grevlex-descending.
class MonomialBasis {
public:
    MonomialBasis(int n, int m);

    int n() const { return n_; }
    int degree() const { return m_; }
    std::size_t size() const { return elements_.size(); }
    const Monomial& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<Monomial>& elements() const { return elements_; }

    std::optional<std::size_t> index_of(const Monomial& mono) const;
    std::optional<std::size_t> index_of(const int* exps) const;

private:
    std::uint64_t key(const int* exps) const;

    int n_;
    int m_;
    std::vector<Monomial> elements_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

/// Shared immutable basis for (n, m); built on first use.
std::shared_ptr<const MonomialBasis> basis(int n, int m);

std::vector<Monomial> monomial_basis(int n, int m);

/// Partition of the degree-d basis along the hyperplane D = {x_0 = 0}.
struct RestrictionSplit {
    std::vector<std::size_t> divisible;   // x_0 | m: kernel of restriction to D
    std::vector<std::size_t> transversal; // monomials in x_1..x_n only
};

RestrictionSplit restriction_split(int n, int d);

/// Projective point over GF(p), normalized so the first nonzero coordinate is 1.
class PointOverField {
public:
    PointOverField(std::vector<Fp> coords, Fp prime);

    const std::vector<Fp>& coordinates() const { return coords_; }
    Fp prime() const { return prime_; }
    bool on_hyperplane_x0() const { return coords_[0] == 0; }

private:
    std::vector<Fp> coords_;
    Fp prime_;
};

Fp evaluate(const Monomial& m, const PointOverField& x);

}  // namespace vsl

#endif  // VSL_POLYSPACE_HPP
