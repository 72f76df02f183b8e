#pragma once

#include "permfix/partition.hpp"
#include "permfix/permutation.hpp"
#include "permfix/sparse_matrix.hpp"
#include "permfix/tensor_index.hpp"

#include <vector>

namespace permfix {

inline constexpr std::size_t kDimCap = 4096;
inline constexpr unsigned kMaxProjectionN = 8;

/// The operator permuting tensor factors of (C^m)^(tensor n): basis vector
/// e_I maps to the basis vector whose slot j carries digit I_{g^{-1}(j)}.
/// With this convention g -> operator is a group homomorphism; its trace is
/// m^{number of cycles of g}.
SparseExactMatrix build_permutation_operator(const Perm& g, unsigned m,
                                             std::size_t dim_cap = kDimCap);

/// Same relabeling operator on a mixed shape; the result maps M(shape) to
/// M(permuted shape) by conjugation. No dimension cap (callers bound sizes).
SparseExactMatrix permutation_operator_mixed(const TensorShape& shape, const Perm& g);

/// Central idempotent P_lambda = (dim lambda / n!) * sum_g chi_lambda(g) U_g
/// projecting onto the lambda-isotypic component; exact, commutes with every
/// U_g, trace = dim(lambda) * multiplicity(lambda).
SparseExactMatrix isotypic_projection(const Partition& lambda, unsigned m,
                                      std::size_t dim_cap = kDimCap,
                                      unsigned max_n = kMaxProjectionN);

/// Conditional expectation onto the commutant: (1/n!) sum_g U_g X U_g^{-1}.
SparseExactMatrix average_over_group(const SparseExactMatrix& x, unsigned m, unsigned n);

/// Orbit sums of matrix units under the simultaneous row/column permutation
/// action of the given group elements: averaging E_{rc} over the group gives
/// (1/|orbit|) times the orbit indicator. Distinct orbits have disjoint
/// supports, so the result spans the fixed algebra; returned in first-visit
/// order of the (r, c) pairs.
std::vector<SparseExactMatrix> fixed_algebra_basis(const TensorShape& shape,
                                                   const std::vector<Perm>& group);

/// Exact basis of the commutant of all permutation operators on
/// (C^m)^(tensor n); size = sum over lambda of multiplicity(lambda)^2,
/// confirmed by exact rank reduction.
std::vector<SparseExactMatrix> commutant_basis(unsigned m, unsigned n,
                                               std::size_t dim_cap = kDimCap);

} // namespace permfix
