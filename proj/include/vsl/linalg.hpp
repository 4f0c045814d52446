#ifndef VSL_LINALG_HPP
#define VSL_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vsl/field.hpp"
#include "vsl/koszul.hpp"

namespace vsl {

/// Thrown by rational_rank when a block is larger than the dense limit.
class DenseLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultDenseLimit = 2000;

struct SparseRow {
    std::vector<std::uint32_t> cols;  // strictly increasing
    std::vector<Fp> vals;             // nonzero residues
};

/// Rank over GF(p) by right-looking sparse elimination. The pivot minimizes
/// the Markowitz count (r-1)(c-1) over the lightest few columns; ties go to
/// the lowest (row, col). Deterministic for fixed input.
std::size_t sparse_rank_mod(std::vector<SparseRow> rows, std::size_t ncols, Fp p);

std::size_t sparse_rank(const KoszulBlockMatrix& m, const FieldSpec& f);

/// Exact rank over Q by fraction-free integer elimination with row-content
/// removal. Refuses matrices beyond dense_limit in either dimension.
std::size_t rational_rank(const KoszulBlockMatrix& m, std::size_t dense_limit = kDefaultDenseLimit);

/// Small dense matrix over GF(p), row-major.
class DenseMatrixModP {
public:
    DenseMatrixModP(std::size_t rows, std::size_t cols, Fp p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Fp prime() const { return p_; }

    Fp& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    /// Basis of {x : A x = 0}, one vector per free column.
    std::vector<std::vector<Fp>> nullspace() const;
    /// Some x with A x = b, or nullopt if b is outside the column space.
    std::optional<std::vector<Fp>> solve(const std::vector<Fp>& b) const;

    static DenseMatrixModP from_block(const KoszulBlockMatrix& m, Fp p);

private:
    std::size_t rows_;
    std::size_t cols_;
    Fp p_;
    std::vector<Fp> data_;
};

}  // namespace vsl

#endif  // VSL_LINALG_HPP
