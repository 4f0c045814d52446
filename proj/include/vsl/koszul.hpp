#ifndef VSL_KOSZUL_HPP
#define VSL_KOSZUL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "vsl/bounds.hpp"
#include "vsl/polyspace.hpp"

namespace vsl {

/// Thrown when a computation would exceed a configured ceiling.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Basis element (S, u) of  wedge^p V (x) H0(O(b+qd)), V = H0(O(d)).
/// S is stored by colex rank, u by its index in the coefficient basis.
struct KoszulElement {
    std::uint64_t wedge;
    std::uint32_t coeff;

    friend bool operator==(const KoszulElement&, const KoszulElement&) = default;
    friend auto operator<=>(const KoszulElement&, const KoszulElement&) = default;
};

/// The chain space C_{p,q} = wedge^p H0(O(d)) (x) H0(O(b+qd)).
struct KoszulSpace {
    VeroneseParams params;
    int p = 0;
    int q = 0;

    int coeff_degree() const { return params.b + q * params.d; }
    /// Empty when p < 0, p > h0(d) or b+qd < 0.
    bool is_empty() const;
    std::uint64_t dimension() const;
};

/// p-subsets of the degree-d basis grouped by total exponent weight.
/// Built once per (n, d, p) and shared read-only.
class WedgeWeightIndex {
public:
    WedgeWeightIndex(int n, int d, int p);

    int p() const { return p_; }
    const std::map<MultiDegree, std::vector<std::uint64_t>>& groups() const { return groups_; }
    const std::vector<std::uint64_t>* find(const MultiDegree& w) const;

private:
    int p_;
    std::map<MultiDegree, std::vector<std::uint64_t>> groups_;
};

/// Ceiling on C(h0(d), p) for building a WedgeWeightIndex (default 5e7).
void set_max_wedge_subsets(std::uint64_t limit);
std::uint64_t max_wedge_subsets();

std::shared_ptr<const WedgeWeightIndex> wedge_weight_index(int n, int d, int p);

/// Weight of a wedge element: sum of exponents of its factors.
MultiDegree wedge_weight(int n, int d, std::uint64_t wedge_rank, int p);
MultiDegree element_multidegree(const KoszulSpace& space, const KoszulElement& e);

/// Basis of C_{p,q} grouped by multidegree; the grouping is a partition.
struct KoszulSpaceBasis {
    KoszulSpace space;
    std::map<MultiDegree, std::vector<KoszulElement>> groups;
};

KoszulSpaceBasis koszul_space_basis(const KoszulSpace& space);

/// Sorted basis elements of C_{p,q} with multidegree m.
std::vector<KoszulElement> block_elements(const KoszulSpace& space, const MultiDegree& m);

struct BlockDimension {
    MultiDegree mdeg;
    std::uint64_t dim;
};

/// Every multidegree with nonzero C_{p,q}[m], lexicographically ordered.
std::vector<BlockDimension> block_multidegrees(const VeroneseParams& params, int p, int q);

/// Identifies the block of d_{p,q} : C_{p,q} -> C_{p-1,q+1} at one multidegree.
struct BlockKey {
    VeroneseParams params;
    int p = 0;
    int q = 0;
    MultiDegree mdeg;

    friend bool operator==(const BlockKey&, const BlockKey&) = default;
    friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

struct SignEntry {
    std::uint32_t row;
    std::uint32_t col;
    std::int8_t sign;
};

/// One multigraded block of the Koszul differential. Entries are +-1.
struct KoszulBlockMatrix {
    BlockKey key;
    std::vector<KoszulElement> rows;  // basis of C_{p-1,q+1}[m]
    std::vector<KoszulElement> cols;  // basis of C_{p,q}[m]
    std::vector<SignEntry> entries;

    std::size_t nrows() const { return rows.size(); }
    std::size_t ncols() const { return cols.size(); }
};

/// `constant_plus` drops the alternating sign; it exists only so the self-test
/// can confirm that d^2 = 0 detects a broken convention.
enum class SignConvention { alternating, constant_plus };

KoszulBlockMatrix differential_block(const BlockKey& key, SignConvention conv = SignConvention::alternating);

struct OrbitClass {
    MultiDegree representative;  // sorted descending
    std::uint64_t orbit_size;    // members of the input list in this orbit

    friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
};

/// Groups multidegrees into coordinate-permutation orbits.
std::vector<OrbitClass> orbit_reduce(const std::vector<MultiDegree>& blocks);

MultiDegree sorted_descending(MultiDegree m);

}  // namespace vsl

#endif  // VSL_KOSZUL_HPP
