#include "permfix/embeddings.hpp"

#include "permfix/character.hpp"
#include "permfix/linalg.hpp"
#include "permfix/schur_weyl.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace permfix {

double Residual::value() const { return std::sqrt(rat_to_double(norm_sq)); }

bool Residual::within(double tol) const {
    Rat t(tol);
    return norm_sq <= t * t;
}

bool VerificationReport::valid(EmbedMode mode) const {
    if (!images_nonzero) return false;
    if (rank && expected_rank && *rank != *expected_rank) return false;
    if (mode == EmbedMode::Exact)
        return unital.exact_zero() && multiplicative.exact_zero() && star.exact_zero() &&
               (!equivariance || equivariance->exact_zero());
    return unital.within(tolerance) && multiplicative.within(tolerance) &&
           star.within(tolerance) && (!equivariance || equivariance->within(tolerance));
}

std::vector<SumUnit> sum_units(unsigned long p, unsigned long q) {
    std::vector<SumUnit> units;
    units.reserve(p * p + q * q);
    for (unsigned long r = 0; r < p; ++r)
        for (unsigned long c = 0; c < p; ++c) units.push_back({0, r, c});
    for (unsigned long r = 0; r < q; ++r)
        for (unsigned long c = 0; c < q; ++c) units.push_back({1, r, c});
    return units;
}

namespace {

std::size_t sum_unit_index(unsigned long p, unsigned long q, unsigned summand, unsigned long r,
                           unsigned long c) {
    return summand == 0 ? r * p + c : p * p + r * q + c;
}

unsigned valuation(unsigned long x, unsigned long p) {
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

} // namespace

/*
 * Exact cyclic construction of M_p inside the fixed-point algebra.
 *
 * Write words of (C^m)^(tensor n) with digits in {0..m-1} and let
 * sigma(I) = sum of digits mod p^j, where j = v_p(n) + 1. The hypotheses
 * v_p(m) > v_p(n!) >= v_p(n) give p^j | m, so each digit is uniformly
 * distributed over residues mod p^j and every class
 * V_c = span{ e_I : sigma(I) = c } has the same dimension m^n / p^j.
 * Permuting tensor factors preserves digit sums, so each V_c is invariant.
 *
 * The simultaneous cyclic shift T (add one to every digit mod m) commutes
 * with all factor permutations and, because p^j | m, raises sigma by n even
 * across digit wraparound: T V_c = V_{c+n}.
 *
 * Writing n = u p^v with p not dividing u, the map
 * pi(c) = (top base-p digit of c * u^{-1} mod p^{v+1}) in {0..p-1}
 * satisfies pi(c + n) = pi(c) + 1 mod p. Hence the coarser subspaces
 * W_i = direct sum of the V_c with pi(c) = i satisfy T W_i = W_{i+1 mod p}
 * and have equal dimensions m^n / p.
 *
 * With Q_i the projection onto W_i, the assignment e_{ab} -> T^{a-b} Q_b
 * (integer exponent; T^{-1} = T^{m-1} exactly) is a unital *-homomorphism:
 * Q_b T^s = T^s Q_{b-s}, so products telescope with integer exponent
 * arithmetic, and the diagonal images sum to the identity. Every image is a
 * 0/1 partial permutation matrix commuting exactly with the group action.
 */
std::vector<SparseExactMatrix> exact_unit_images(unsigned m, unsigned n, unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (m < 1) throw std::invalid_argument("m must be positive");
    unsigned vm = p_adic_valuation(Int(m), p);
    unsigned vnf = p_adic_valuation_factorial(n, p);
    if (vm <= vnf)
        throw std::invalid_argument("hypotheses fail: need p^k | m with p^k not dividing n!");

    unsigned v = valuation(n, p);
    unsigned long pj = 1;
    for (unsigned i = 0; i <= v; ++i) pj *= p; // p^{v+1}; divides m since vm > v
    unsigned long u = n;
    for (unsigned i = 0; i < v; ++i) u /= p;
    unsigned long uinv = 1;
    while ((u * uinv) % pj != 1) ++uinv;
    unsigned long pv = pj / p;

    TensorShape shape = TensorShape::uniform(m, n);
    std::size_t dim = shape.total();
    if (dim > kDimCap) throw std::domain_error("tensor dimension m^n exceeds cap");

    std::vector<unsigned long> group_of(dim);
    for (std::size_t flat = 0; flat < dim; ++flat) {
        unsigned long s = 0;
        for (unsigned digit : shape.digits0(flat)) s += digit;
        group_of[flat] = ((s % pj) * uinv % pj) / pv;
    }

    auto shifted = [&](std::size_t flat, unsigned long s) {
        std::vector<unsigned> digits = shape.digits0(flat);
        for (unsigned& d : digits) d = static_cast<unsigned>((d + s) % m);
        return shape.flat0(digits);
    };

    std::vector<SparseExactMatrix> images;
    images.reserve(p * p);
    for (unsigned long a = 0; a < p; ++a) {
        for (unsigned long b = 0; b < p; ++b) {
            long diff = static_cast<long>(a) - static_cast<long>(b);
            unsigned long s = static_cast<unsigned long>(((diff % static_cast<long>(m)) + m) % m);
            SparseExactMatrix img(dim);
            for (std::size_t flat = 0; flat < dim; ++flat)
                if (group_of[flat] == b) img.set(shifted(flat, s), flat, Rat(1));
            images.push_back(std::move(img));
        }
    }
    return images;
}

namespace {

struct SplitFailure {};

Eigen::MatrixXd to_dense(const SparseExactMatrix& x) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(x.dim()),
                                                static_cast<Eigen::Index>(x.dim()));
    for (const auto& [k, v] : x.entries())
        out(static_cast<Eigen::Index>(k.first), static_cast<Eigen::Index>(k.second)) =
            rat_to_double(v);
    return out;
}

SparseExactMatrix to_exact(const Eigen::MatrixXd& x, double drop) {
    SparseExactMatrix out(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index r = 0; r < x.rows(); ++r)
        for (Eigen::Index c = 0; c < x.cols(); ++c)
            if (std::abs(x(r, c)) >= drop)
                out.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), Rat(x(r, c)));
    return out;
}

// One seeded attempt of the spectral pipeline; throws SplitFailure when the
// sampled element fails to separate the spectrum or a compression is too
// close to singular, in which case the caller retries with the next seed.
std::vector<Eigen::MatrixXd> spectral_attempt(unsigned m, unsigned n, unsigned long p,
                                              const DecompositionReport& decomp,
                                              const std::vector<SparseExactMatrix>& basis,
                                              std::uint64_t seed, double cluster_gap) {
    TensorShape shape = TensorShape::uniform(m, n);
    std::size_t dim = shape.total();
    SplitMix64 rng(seed);

    // Generic self-adjoint commutant element (coefficients over the orbit-sum
    // basis plus transposes keep it exactly in the commutant and symmetric).
    SparseExactMatrix sym(dim), gen(dim);
    for (const auto& b : basis) {
        long c = static_cast<long>(rng.next_in(-9, 9));
        if (c == 0) continue;
        Rat rc(c);
        for (const auto& [key, val] : b.entries()) {
            sym.add(key.first, key.second, val * rc);
            sym.add(key.second, key.first, val * rc);
        }
    }
    for (const auto& b : basis) {
        long c = static_cast<long>(rng.next_in(-9, 9));
        if (c == 0) continue;
        Rat rc(c);
        for (const auto& [key, val] : b.entries()) gen.add(key.first, key.second, val * rc);
    }
    Eigen::MatrixXd symd = to_dense(sym), gend = to_dense(gen);

    std::vector<Eigen::MatrixXd> units(
        p * p, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                     static_cast<Eigen::Index>(dim)));
    for (const auto& entry : decomp.entries) {
        if (entry.multiplicity == 0) continue;
        auto mu = entry.multiplicity.get_ui();
        auto dl = entry.dim.get_ui();
        if (mu % p != 0) throw std::logic_error("multiplicity not divisible by p");
        Eigen::Index D = static_cast<Eigen::Index>(mu * dl);
        Eigen::Index per_group = D / static_cast<Eigen::Index>(p);

        // Orthonormal basis of the isotypic subspace from the exact central
        // idempotent (its spectrum is exactly {0, 1}).
        Eigen::MatrixXd pd = to_dense(isotypic_projection(entry.lambda, m));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> pes(pd);
        Eigen::MatrixXd basisv(dim, D);
        Eigen::Index got = 0;
        for (Eigen::Index i = 0; i < pes.eigenvalues().size(); ++i) {
            if (pes.eigenvalues()(i) > 0.5) {
                if (got == D) throw std::logic_error("isotypic rank exceeds trace");
                basisv.col(got++) = pes.eigenvectors().col(i);
            }
        }
        if (got != D) throw std::logic_error("isotypic rank below trace");

        // Restrict the generic element and cluster its spectrum: generically
        // mu distinct eigenvalues, each of multiplicity dim(lambda).
        Eigen::MatrixXd restricted = basisv.transpose() * symd * basisv;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ses(restricted);
        const Eigen::VectorXd& ev = ses.eigenvalues();
        double scale = std::max(1.0, ev(D - 1) - ev(0));
        std::vector<Eigen::Index> starts{0};
        for (Eigen::Index i = 1; i < D; ++i)
            if (ev(i) - ev(i - 1) > cluster_gap * scale) starts.push_back(i);
        if (starts.size() != mu) throw SplitFailure{};
        starts.push_back(D);
        for (std::size_t c = 0; c + 1 < starts.size(); ++c)
            if (starts[c + 1] - starts[c] != static_cast<Eigen::Index>(dl)) throw SplitFailure{};

        // Consecutive clusters merge into p equal groups; the spectral
        // subspace of each group is spanned by contiguous eigenvector
        // columns.
        std::vector<Eigen::MatrixXd> group_basis(p);
        for (unsigned long g = 0; g < p; ++g)
            group_basis[g] = basisv * ses.eigenvectors().middleCols(
                                          static_cast<Eigen::Index>(g) * per_group, per_group);

        // Partial isometries group 0 -> group g via the orthogonal polar
        // factor of a compressed generic commutant element; the polar factor
        // of a commutant element stays in the commutant.
        std::vector<Eigen::MatrixXd> rot(p);
        rot[0] = Eigen::MatrixXd::Identity(per_group, per_group);
        for (unsigned long g = 1; g < p; ++g) {
            Eigen::MatrixXd comp = group_basis[g].transpose() * gend * group_basis[0];
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(comp,
                                                  Eigen::ComputeFullU | Eigen::ComputeFullV);
            double smax = svd.singularValues()(0);
            double smin = svd.singularValues()(per_group - 1);
            if (smax <= 0 || smin < 1e-8 * smax) throw SplitFailure{};
            rot[g] = svd.matrixU() * svd.matrixV().transpose();
        }

        for (unsigned long i = 0; i < p; ++i) {
            Eigen::MatrixXd wi = group_basis[i] * rot[i];
            for (unsigned long j = 0; j < p; ++j) {
                Eigen::MatrixXd wj = group_basis[j] * rot[j];
                units[i * p + j] += wi * wj.transpose();
            }
        }
    }
    return units;
}

} // namespace

EmbeddingCertificate construct_Mp_embedding(unsigned m, unsigned n, unsigned long p,
                                            const EmbedOptions& opts) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (p_adic_valuation(Int(m), p) <= p_adic_valuation_factorial(n, p))
        throw std::invalid_argument("hypotheses fail: need p^k | m with p^k not dividing n!");

    EmbeddingCertificate cert;
    cert.kind = CertKind::MatrixEmbedding;
    cert.mode = opts.mode;
    cert.seed = opts.seed;
    cert.tol = opts.tol;
    cert.m = m;
    cert.n = n;
    cert.p = p;

    if (opts.mode == EmbedMode::Exact) {
        cert.images = exact_unit_images(m, n, p);
    } else {
        DecompositionReport decomp = multiplicities(m, n);
        auto basis = commutant_basis(m, n, opts.dim_cap);
        std::vector<Eigen::MatrixXd> units;
        for (unsigned attempt = 0;; ++attempt) {
            try {
                units = spectral_attempt(m, n, p, decomp, basis, opts.seed + attempt,
                                         opts.cluster_gap);
                cert.seed = opts.seed + attempt;
                break;
            } catch (const SplitFailure&) {
                if (attempt >= opts.max_retries)
                    throw std::runtime_error(
                        "spectral splitting stayed degenerate after maximum retries; rerun "
                        "with a different seed");
            }
        }
        cert.images.reserve(units.size());
        for (const auto& u : units) cert.images.push_back(to_exact(u, 1e-13));

        // Averaging over the group is the exact conditional expectation onto
        // the commutant, so after this step equivariance holds exactly; the
        // images were already within floating-point error of the commutant,
        // so the adjustment is tiny. Skipped when n!*dim^2 would be too big.
        std::size_t dim = cert.images[0].dim();
        if (factorial(n) * Int(dim) * Int(dim) <= Int(100000000)) {
            for (auto& img : cert.images) img = average_over_group(img, m, n);
        }

        // The diagonal images sum to the identity up to floating error; make
        // unitality exact by solving for the last diagonal unit in rational
        // arithmetic.
        SparseExactMatrix last = SparseExactMatrix::identity(dim);
        for (unsigned long i = 0; i + 1 < p; ++i) last = last - cert.images[i * p + i];
        cert.images[(p - 1) * p + (p - 1)] = std::move(last);
    }

    cert.report = verify_certificate(cert);
    return cert;
}

EmbeddingCertificate embed_sum_into_matrix(unsigned long p, unsigned long q, unsigned long k,
                                           const FrobeniusWitness& witness) {
    if (!witness.representable()) throw std::invalid_argument("witness has no coefficients");
    unsigned long a = *witness.a, b = *witness.b;
    if (witness.k != k || a < 1 || b < 1 || a * p + b * q != k)
        throw std::invalid_argument("witness does not certify ap + bq = k");

    EmbeddingCertificate cert;
    cert.kind = CertKind::SumEmbedding;
    cert.mode = EmbedMode::Exact;
    cert.p = p;
    cert.q = q;
    cert.k = k;
    cert.a = a;
    cert.b = b;

    // Block-diagonal layout: a copies of the p-block, then b copies of the
    // q-block, so x repeats along the first ap rows and y along the rest.
    for (const SumUnit& u : sum_units(p, q)) {
        SparseExactMatrix img(k);
        if (u.summand == 0) {
            for (unsigned long t = 0; t < a; ++t)
                img.set(t * p + u.row, t * p + u.col, Rat(1));
        } else {
            for (unsigned long t = 0; t < b; ++t)
                img.set(a * p + t * q + u.row, a * p + t * q + u.col, Rat(1));
        }
        cert.images.push_back(std::move(img));
    }
    cert.report = verify_certificate(cert);
    return cert;
}

std::vector<SparseExactMatrix> construct_phi_k(unsigned long p, unsigned long q, unsigned n,
                                               unsigned k) {
    if (!is_prime(p) || !is_prime(q) || p == q)
        throw std::invalid_argument("p and q must be distinct primes");
    if (p <= n || q <= n) throw std::invalid_argument("primes must exceed n");
    if (k > n) throw std::invalid_argument("k out of range");

    FixedSummandAlgebra alg = FixedSummandAlgebra::create(static_cast<unsigned>(p),
                                                          static_cast<unsigned>(q), n);
    std::size_t dim = alg.shapes[k].total();

    std::vector<SparseExactMatrix> images;
    if (k < n) {
        // Embed the p-block into the symmetric part of the p-factors and pad
        // with the identity on the q-factors; the q-block maps to zero.
        auto mp = exact_unit_images(static_cast<unsigned>(p), n - k, p);
        std::size_t qdim = dim / mp[0].dim();
        SparseExactMatrix pad = SparseExactMatrix::identity(qdim);
        for (const SumUnit& u : sum_units(p, q)) {
            if (u.summand == 0)
                images.push_back(mp[u.row * p + u.col].kron(pad));
            else
                images.emplace_back(dim);
        }
    } else {
        // k = n: no p-factors remain, so the q-block embeds and the p-block
        // maps to zero.
        auto mq = exact_unit_images(static_cast<unsigned>(q), n, q);
        for (const SumUnit& u : sum_units(p, q)) {
            if (u.summand == 0)
                images.emplace_back(dim);
            else
                images.push_back(mq[u.row * q + u.col]);
        }
    }
    return images;
}

EmbeddingCertificate construct_block_embedding(unsigned long p, unsigned long q, unsigned n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    BlockAlgebraDescriptor desc =
        BlockAlgebraDescriptor::create(static_cast<unsigned>(p), static_cast<unsigned>(q), n);
    for (std::size_t d : desc.block_dims)
        if (d > kDimCap) throw std::domain_error("block dimension exceeds cap");

    std::vector<std::vector<SparseExactMatrix>> phi(n + 1);
    for (unsigned k = 0; k <= n; ++k) phi[k] = construct_phi_k(p, q, n, k);

    EmbeddingCertificate cert;
    cert.kind = CertKind::BlockEmbedding;
    cert.mode = EmbedMode::Exact;
    cert.p = p;
    cert.q = q;
    cert.n = n;

    std::size_t unit_count = p * p + q * q;
    for (std::size_t u = 0; u < unit_count; ++u) {
        FixedSummandElement fe;
        for (unsigned k = 0; k <= n; ++k) fe.components.push_back(phi[k][u]);
        cert.block_images.push_back(construct_psi(desc, fe));
    }
    cert.report = verify_certificate(cert);
    return cert;
}

namespace {

VerificationReport verify_matrix_embedding(const EmbeddingCertificate& cert) {
    unsigned long p = cert.p;
    if (cert.images.size() != p * p) throw std::invalid_argument("certificate image count");
    std::size_t dim = cert.images[0].dim();
    auto idx = [p](unsigned long a, unsigned long b) { return a * p + b; };

    VerificationReport rep;
    rep.tolerance = cert.tol;

    SparseExactMatrix diag_sum(dim);
    for (unsigned long a = 0; a < p; ++a) diag_sum = diag_sum + cert.images[idx(a, a)];
    rep.unital.norm_sq = frobenius_sq_diff(diag_sum, SparseExactMatrix::identity(dim));

    Rat mult(0);
    for (unsigned long a = 0; a < p; ++a)
        for (unsigned long b = 0; b < p; ++b)
            for (unsigned long c = 0; c < p; ++c)
                for (unsigned long d = 0; d < p; ++d) {
                    SparseExactMatrix prod = cert.images[idx(a, b)] * cert.images[idx(c, d)];
                    Rat r = (b == c) ? frobenius_sq_diff(prod, cert.images[idx(a, d)])
                                     : prod.frobenius_sq();
                    if (r > mult) mult = std::move(r);
                }
    rep.multiplicative.norm_sq = mult;

    Rat star(0);
    for (unsigned long a = 0; a < p; ++a)
        for (unsigned long b = 0; b < p; ++b) {
            Rat r = frobenius_sq_diff(cert.images[idx(a, b)].transpose(),
                                      cert.images[idx(b, a)]);
            if (r > star) star = std::move(r);
        }
    rep.star.norm_sq = star;

    Rat equi(0);
    for (const Perm& g : coxeter_generators(cert.n)) {
        SparseExactMatrix u = build_permutation_operator(g, cert.m);
        for (const auto& img : cert.images) {
            Rat r = commutator(u, img).frobenius_sq();
            if (r > equi) equi = std::move(r);
        }
    }
    rep.equivariance = Residual{std::move(equi)};

    for (const auto& img : cert.images)
        if (img.is_zero()) rep.images_nonzero = false;
    return rep;
}

VerificationReport verify_sum_embedding(const EmbeddingCertificate& cert) {
    unsigned long p = cert.p, q = cert.q;
    auto units = sum_units(p, q);
    if (cert.images.size() != units.size())
        throw std::invalid_argument("certificate image count");
    std::size_t dim = cert.images[0].dim();

    VerificationReport rep;
    rep.tolerance = cert.tol;

    SparseExactMatrix diag_sum(dim);
    for (const SumUnit& u : units)
        if (u.row == u.col)
            diag_sum = diag_sum + cert.images[sum_unit_index(p, q, u.summand, u.row, u.col)];
    rep.unital.norm_sq = frobenius_sq_diff(diag_sum, SparseExactMatrix::identity(dim));

    Rat mult(0);
    for (const SumUnit& x : units)
        for (const SumUnit& y : units) {
            const auto& ix = cert.images[sum_unit_index(p, q, x.summand, x.row, x.col)];
            const auto& iy = cert.images[sum_unit_index(p, q, y.summand, y.row, y.col)];
            SparseExactMatrix prod = ix * iy;
            Rat r = (x.summand == y.summand && x.col == y.row)
                        ? frobenius_sq_diff(
                              prod, cert.images[sum_unit_index(p, q, x.summand, x.row, y.col)])
                        : prod.frobenius_sq();
            if (r > mult) mult = std::move(r);
        }
    rep.multiplicative.norm_sq = mult;

    Rat star(0);
    for (const SumUnit& u : units) {
        Rat r = frobenius_sq_diff(
            cert.images[sum_unit_index(p, q, u.summand, u.row, u.col)].transpose(),
            cert.images[sum_unit_index(p, q, u.summand, u.col, u.row)]);
        if (r > star) star = std::move(r);
    }
    rep.star.norm_sq = star;

    for (const auto& img : cert.images)
        if (img.is_zero()) rep.images_nonzero = false;
    return rep;
}

VerificationReport verify_block_embedding(const EmbeddingCertificate& cert) {
    unsigned long p = cert.p, q = cert.q;
    BlockAlgebraDescriptor desc =
        BlockAlgebraDescriptor::create(static_cast<unsigned>(p), static_cast<unsigned>(q),
                                       cert.n);
    auto units = sum_units(p, q);
    if (cert.block_images.size() != units.size())
        throw std::invalid_argument("certificate image count");

    VerificationReport rep;
    rep.tolerance = cert.tol;

    BlockAlgebraElement diag_sum = block_zero(desc);
    for (const SumUnit& u : units)
        if (u.row == u.col) {
            const auto& img = cert.block_images[sum_unit_index(p, q, u.summand, u.row, u.col)];
            for (std::size_t i = 0; i < desc.block_count(); ++i)
                diag_sum.components[i] = diag_sum.components[i] + img.components[i];
        }
    rep.unital.norm_sq = block_frobenius_sq(block_sub(diag_sum, block_identity(desc)));

    Rat mult(0);
    for (const SumUnit& x : units)
        for (const SumUnit& y : units) {
            const auto& ix = cert.block_images[sum_unit_index(p, q, x.summand, x.row, x.col)];
            const auto& iy = cert.block_images[sum_unit_index(p, q, y.summand, y.row, y.col)];
            BlockAlgebraElement prod = block_mul(ix, iy);
            Rat r;
            if (x.summand == y.summand && x.col == y.row)
                r = block_frobenius_sq(block_sub(
                    prod, cert.block_images[sum_unit_index(p, q, x.summand, x.row, y.col)]));
            else
                r = block_frobenius_sq(prod);
            if (r > mult) mult = std::move(r);
        }
    rep.multiplicative.norm_sq = mult;

    Rat star(0);
    for (const SumUnit& u : units) {
        Rat r = block_frobenius_sq(block_sub(
            block_transpose(cert.block_images[sum_unit_index(p, q, u.summand, u.row, u.col)]),
            cert.block_images[sum_unit_index(p, q, u.summand, u.col, u.row)]));
        if (r > star) star = std::move(r);
    }
    rep.star.norm_sq = star;

    // The image must be pointwise fixed by the full induced action, not just
    // by generators, so sweep every group element.
    Rat equi(0);
    for (const Perm& g : symmetric_group(cert.n)) {
        for (const auto& img : cert.block_images) {
            Rat r = block_frobenius_sq(block_sub(alpha_action(desc, g, img), img));
            if (r > equi) equi = std::move(r);
        }
    }
    rep.equivariance = Residual{std::move(equi)};

    // Injectivity by exact rank of the stacked images.
    std::vector<std::size_t> offsets(desc.block_count() + 1, 0);
    for (std::size_t i = 0; i < desc.block_count(); ++i)
        offsets[i + 1] = offsets[i] + desc.block_dims[i] * desc.block_dims[i];
    IntRowBasis basis;
    for (const auto& img : cert.block_images) {
        std::map<std::size_t, Rat> row;
        for (std::size_t i = 0; i < desc.block_count(); ++i)
            for (const auto& [key, val] : img.components[i].entries())
                row.emplace(offsets[i] + key.first * desc.block_dims[i] + key.second, val);
        basis.insert_rational(row);
    }
    rep.rank = basis.rank();
    rep.expected_rank = static_cast<std::size_t>(p * p + q * q);

    for (const auto& img : cert.block_images) {
        bool nonzero = false;
        for (const auto& c : img.components)
            if (!c.is_zero()) nonzero = true;
        if (!nonzero) rep.images_nonzero = false;
    }
    return rep;
}

} // namespace

VerificationReport verify_certificate(const EmbeddingCertificate& cert) {
    switch (cert.kind) {
        case CertKind::MatrixEmbedding: return verify_matrix_embedding(cert);
        case CertKind::SumEmbedding: return verify_sum_embedding(cert);
        case CertKind::BlockEmbedding: return verify_block_embedding(cert);
    }
    throw std::logic_error("unknown certificate kind");
}

} // namespace permfix
