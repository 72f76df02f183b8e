#pragma once

#include "permfix/block_algebra.hpp"
#include "permfix/frobenius.hpp"
#include "permfix/sparse_matrix.hpp"
#include "permfix/tensor_rep.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace permfix {

enum class EmbedMode { Exact, Numeric };
enum class CertKind { MatrixEmbedding, SumEmbedding, BlockEmbedding };

struct EmbedOptions {
    EmbedMode mode = EmbedMode::Numeric;
    std::uint64_t seed = 0;
    double tol = 1e-9;         // certificate validity threshold
    double cluster_gap = 1e-8; // eigenvalue clustering gap
    unsigned max_retries = 8;  // reseed attempts on spectral degeneracy
    std::size_t dim_cap = kDimCap;
};

/// Exact squared Frobenius norm of a defect, with a floating-point view for
/// reporting. The Frobenius norm dominates the operator norm, so a small
/// value here certifies a small operator-norm defect.
struct Residual {
    Rat norm_sq{0};

    bool exact_zero() const { return norm_sq == 0; }
    double value() const;
    /// Exact comparison norm_sq <= tol^2 (no floating-point rounding).
    bool within(double tol) const;
};

struct VerificationReport {
    Residual unital;         // ||phi(1) - 1||
    Residual multiplicative; // max over unit pairs ||phi(xy) - phi(x)phi(y)||
    Residual star;           // max over units ||phi(x*) - phi(x)*||
    std::optional<Residual> equivariance; // commutation with the group action;
                                          // absent when there is no action
    std::optional<std::size_t> rank;      // exact rank of the image span
    std::optional<std::size_t> expected_rank;
    bool images_nonzero = true;
    double tolerance = 1e-9;

    bool valid(EmbedMode mode) const;
};

/// Matrix unit e_{row,col} of one summand of M_p (+) M_q; summand 0 is the
/// p-block. Units are enumerated summand-major, then row-major.
struct SumUnit {
    unsigned summand = 0;
    unsigned long row = 0;
    unsigned long col = 0;
};

std::vector<SumUnit> sum_units(unsigned long p, unsigned long q);

/// A constructed embedding, pinned down by the images of the source matrix
/// units, together with the parameters needed to re-verify it from scratch.
struct EmbeddingCertificate {
    CertKind kind = CertKind::MatrixEmbedding;
    EmbedMode mode = EmbedMode::Exact;
    std::uint64_t seed = 0;
    double tol = 1e-9;

    // Parameters; the subset in use depends on kind.
    unsigned m = 0, n = 0;
    unsigned long p = 0, q = 0, k = 0, a = 0, b = 0;

    // Images of the source matrix units, in unit order (row-major for M_p;
    // sum_units order for M_p (+) M_q).
    std::vector<SparseExactMatrix> images;         // matrix and sum kinds
    std::vector<BlockAlgebraElement> block_images; // block kind

    VerificationReport report; // filled at construction; recomputable
};

/// Block-diagonal unital embedding of M_p (+) M_q into M_k along a Frobenius
/// witness ap + bq = k: a copies of the p-block, then b copies of the
/// q-block. Always exact.
EmbeddingCertificate embed_sum_into_matrix(unsigned long p, unsigned long q, unsigned long k,
                                           const FrobeniusWitness& witness);

/// Images of the p^2 matrix units of M_p inside the fixed-point algebra of
/// S_n on (C^m)^(tensor n), by the exact cyclic construction (see the
/// implementation for the derivation). Requires v_p(m) > v_p(n!).
std::vector<SparseExactMatrix> exact_unit_images(unsigned m, unsigned n, unsigned long p);

/// Unital embedding M_p -> (M_m^(tensor n))^{S_n} with certificate. Exact
/// mode uses the cyclic construction; numeric mode follows the seeded
/// spectral-splitting pipeline (isotypic blocks, eigenvalue clustering,
/// polar-decomposition partial isometries) and then repairs unitality and
/// equivariance exactly in rational arithmetic.
EmbeddingCertificate construct_Mp_embedding(unsigned m, unsigned n, unsigned long p,
                                            const EmbedOptions& opts = {});

/// Unital homomorphism M_p (+) M_q into the k-th fixed summand
/// (M_p^(n-k))^{S_{n-k}} (x) (M_q^(k))^{S_k}: for k < n the p-block embeds
/// and the q-block is annihilated; for k = n the roles flip. Returns the
/// p^2 + q^2 unit images in sum_units order. Requires p, q > n.
std::vector<SparseExactMatrix> construct_phi_k(unsigned long p, unsigned long q, unsigned n,
                                               unsigned k);

/// The composite embedding of M_p (+) M_q into the S_n-fixed part of the
/// 2^n-block algebra: apply every phi_k, then transport with psi. Exactly
/// unital and multiplicative with trivial kernel; the image is pointwise
/// fixed by the induced S_n action.
EmbeddingCertificate construct_block_embedding(unsigned long p, unsigned long q, unsigned n);

/// Recomputes every residual of a certificate from its images alone, by
/// direct sweeps over matrix-unit pairs and group elements in exact rational
/// arithmetic. Independent of the construction pipelines.
VerificationReport verify_certificate(const EmbeddingCertificate& cert);

} // namespace permfix
