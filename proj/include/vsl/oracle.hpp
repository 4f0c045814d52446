#ifndef VSL_ORACLE_HPP
#define VSL_ORACLE_HPP

#include <cstdint>

#include "vsl/bounds.hpp"
#include "vsl/field.hpp"
#include "vsl/linalg.hpp"

namespace vsl::oracle {

// Dense reference implementation: one global matrix per differential, no
// multigrading. Meant for tiny cases only.

/// d_{p,q} : C_{p,q} -> C_{p-1,q+1} with columns indexed rank * dim(coeff) + coeff.
DenseMatrixModP dense_differential(const VeroneseParams& params, int p, int q, Fp prime);

std::uint64_t dense_rank(const VeroneseParams& params, int p, int q, Fp prime);

/// dim C_{p,q} - rank d_{p,q} - rank d_{p+1,q-1}.
std::uint64_t dense_kpq(const VeroneseParams& params, int p, int q, Fp prime);

}  // namespace vsl::oracle

#endif  // VSL_ORACLE_HPP
