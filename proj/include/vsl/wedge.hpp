#ifndef VSL_WEDGE_HPP
#define VSL_WEDGE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "vsl/field.hpp"

namespace vsl {

/// C(a, k) in 64 bits; throws std::overflow_error when it does not fit.
std::uint64_t binom64(std::uint64_t a, std::uint64_t k);

/// p-subset of [0, N) stored strictly increasing.
struct WedgeBasisElement {
    std::vector<std::uint32_t> indices;

    WedgeBasisElement() = default;
    explicit WedgeBasisElement(std::vector<std::uint32_t> idx);

    std::size_t degree() const { return indices.size(); }
    /// The element with position j removed.
    WedgeBasisElement without(std::size_t j) const;

    friend bool operator==(const WedgeBasisElement&, const WedgeBasisElement&) = default;
    friend auto operator<=>(const WedgeBasisElement&, const WedgeBasisElement&) = default;
};

/// Colexicographic rank: sum over i of C(indices[i], i+1).
std::uint64_t wedge_rank(const WedgeBasisElement& e);
std::uint64_t wedge_rank(std::span<const std::uint32_t> sorted_indices);

/// Inverse of wedge_rank on p-subsets of [0, universe).
WedgeBasisElement wedge_unrank(std::size_t p, std::uint64_t r, std::size_t universe);
void wedge_unrank_into(std::size_t p, std::uint64_t r, std::uint32_t* out);

/// (-1)^j for deletion of the factor at 0-based position j.
inline int deletion_sign(std::size_t j) { return (j & 1) ? -1 : 1; }
int deletion_sign(const WedgeBasisElement& e, std::size_t j);

/// Linear functional on V = H0(O(d)) given by its values on the monomial basis.
struct Functional {
    std::vector<Fp> coefficients;
    Fp prime = 0;

    Fp operator()(std::size_t basis_index) const { return coefficients[basis_index]; }
};

/// Sparse element of the p-th exterior power of an N-dimensional space.
class WedgeVector {
public:
    WedgeVector(std::size_t p, std::size_t universe, Fp prime) : p_(p), universe_(universe), prime_(prime) {}

    std::size_t degree() const { return p_; }
    std::size_t universe() const { return universe_; }
    Fp prime() const { return prime_; }

    /// Adds c * e (e must have degree p).
    void add(const WedgeBasisElement& e, Fp c);
    void add_ranked(std::uint64_t rank, Fp c);
    Fp coefficient(const WedgeBasisElement& e) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t nnz() const { return terms_.size(); }
    const std::unordered_map<std::uint64_t, Fp>& terms() const { return terms_; }

    WedgeVector scaled(Fp c) const;
    WedgeVector& operator+=(const WedgeVector& o);
    friend bool operator==(const WedgeVector& a, const WedgeVector& b);

private:
    std::size_t p_;
    std::size_t universe_;
    Fp prime_;
    std::unordered_map<std::uint64_t, Fp> terms_;  // colex rank -> nonzero coefficient
};

/// Interior product: sum_j (-1)^j phi(v_j) v_1 ^ .. ^ v_j-hat ^ .. ^ v_p.
WedgeVector contract(const Functional& phi, const WedgeVector& v);

/// Determinant over GF(p) of a square row-major matrix.
Fp determinant_mod(std::vector<Fp> a, std::size_t k, Fp p);

/// The s-fold contraction weighted by gamma = det of the functional values on
/// the deleted factors, with sign (-1)^{sum of 0-based deleted positions}.
WedgeVector alpha_s(std::span<const Functional> functionals, const WedgeVector& v);

namespace detail {
/// alpha_s without the p > s guard; p == s yields gamma itself in degree 0.
WedgeVector alpha_contract(std::span<const Functional> functionals, const WedgeVector& v);
}  // namespace detail

}  // namespace vsl

#endif  // VSL_WEDGE_HPP
