#pragma once

#include "permfix/permutation.hpp"
#include "permfix/sparse_matrix.hpp"
#include "permfix/tensor_index.hpp"

#include <string>
#include <vector>

namespace permfix {

/// Block label v in {0,1}^n; entry i says whether slot i carries the p-sized
/// (0) or q-sized (1) factor.
using BitVector = std::vector<unsigned>;

unsigned bit_sum(const BitVector& v);

/// The sorted companion of v: bit_sum(v) together with the vector having all
/// zeros first, then the ones.
std::pair<unsigned, BitVector> canonical_sorted_vector(const BitVector& v);

std::string bit_label(const BitVector& v);

/// All 2^n labels, ordered as big-endian binary numbers (slot 0 most
/// significant), so "00...0" first and "11...1" last.
std::vector<BitVector> all_bit_vectors(unsigned n);

/// The bit vector with entries (g.v)(i) = v(g^{-1}(i)).
BitVector permute_bits(const Perm& g, const BitVector& v);

/// The canonical permutation carrying the sorted vector w_v to v: increasing
/// on the zero positions and increasing on the one positions; the identity
/// whenever v is already sorted.
Perm choose_gv(const BitVector& v);

TensorShape block_shape(const BitVector& v, unsigned p, unsigned q);

/// Factor-permuting action on a block matrix: the linear extension of
/// a_1 x ... x a_n -> (slot j carries a_{g^{-1}(j)}), implemented by entry
/// relabeling. Maps M(shape of v) to M(shape of g.v); g -> beta_g composes
/// covariantly, matching the permutation-operator convention.
SparseExactMatrix beta_action(const Perm& g, const SparseExactMatrix& x,
                              const TensorShape& src_shape);

/// The 2^n-block algebra: one full matrix block per v in {0,1}^n of
/// dimension p^{n-k_v} q^{k_v}.
struct BlockAlgebraDescriptor {
    unsigned p = 0, q = 0, n = 0;
    std::vector<BitVector> blocks;
    std::vector<std::size_t> block_dims;

    static BlockAlgebraDescriptor create(unsigned p, unsigned q, unsigned n);

    std::size_t block_count() const { return blocks.size(); }
    TensorShape shape(std::size_t idx) const { return block_shape(blocks[idx], p, q); }
};

struct BlockAlgebraElement {
    std::vector<SparseExactMatrix> components; // indexed like descriptor.blocks
};

BlockAlgebraElement block_zero(const BlockAlgebraDescriptor& d);
BlockAlgebraElement block_identity(const BlockAlgebraDescriptor& d);
BlockAlgebraElement block_mul(const BlockAlgebraElement& a, const BlockAlgebraElement& b);
BlockAlgebraElement block_sub(const BlockAlgebraElement& a, const BlockAlgebraElement& b);
BlockAlgebraElement block_transpose(const BlockAlgebraElement& a);
Rat block_frobenius_sq(const BlockAlgebraElement& a);
bool block_equal(const BlockAlgebraElement& a, const BlockAlgebraElement& b);

/// Induced permutation action on the block algebra:
/// (alpha_g a)(v) = beta_g(a(g^{-1}.v)).
BlockAlgebraElement alpha_action(const BlockAlgebraDescriptor& d, const Perm& g,
                                 const BlockAlgebraElement& a);

/// The direct sum over k = 0..n of the (S_{n-k} x S_k)-fixed subalgebras of
/// M_p^(n-k) tensor M_q^(k), stored as one matrix per k over the sorted
/// shape (p,...,p,q,...,q).
struct FixedSummandAlgebra {
    unsigned p = 0, q = 0, n = 0;
    std::vector<TensorShape> shapes; // index k = 0..n

    static FixedSummandAlgebra create(unsigned p, unsigned q, unsigned n);
};

struct FixedSummandElement {
    std::vector<SparseExactMatrix> components; // index k = 0..n
};

/// All elements of the subgroup S_{n-k} x S_k of S_n (first factor permutes
/// slots 0..n-k-1, second permutes slots n-k..n-1).
std::vector<Perm> product_group(unsigned n, unsigned k);

/// Exact check that component k commutes with the generators of
/// S_{n-k} x S_k, for every k.
bool is_h_fixed(const FixedSummandAlgebra& algebra, const FixedSummandElement& b);

/// psi(b)(v) = beta_{g_v}(b(k_v)): copies each summand into every block with
/// the same bit count, transported by the canonical permutation.
BlockAlgebraElement construct_psi(const BlockAlgebraDescriptor& d, const FixedSummandElement& b);

} // namespace permfix
