#include "permfix/block_algebra.hpp"

#include "permfix/tensor_rep.hpp"

#include <stdexcept>

namespace permfix {

unsigned bit_sum(const BitVector& v) {
    unsigned k = 0;
    for (unsigned b : v) {
        if (b > 1) throw std::invalid_argument("bit vector entries must be 0 or 1");
        k += b;
    }
    return k;
}

std::pair<unsigned, BitVector> canonical_sorted_vector(const BitVector& v) {
    unsigned k = bit_sum(v);
    BitVector w(v.size(), 0);
    for (std::size_t i = v.size() - k; i < v.size(); ++i) w[i] = 1;
    return {k, w};
}

std::string bit_label(const BitVector& v) {
    std::string s;
    s.reserve(v.size());
    for (unsigned b : v) s.push_back(b ? '1' : '0');
    return s;
}

std::vector<BitVector> all_bit_vectors(unsigned n) {
    std::vector<BitVector> out;
    out.reserve(std::size_t(1) << n);
    for (std::size_t code = 0; code < (std::size_t(1) << n); ++code) {
        BitVector v(n);
        for (unsigned i = 0; i < n; ++i) v[i] = (code >> (n - 1 - i)) & 1;
        out.push_back(std::move(v));
    }
    return out;
}

BitVector permute_bits(const Perm& g, const BitVector& v) {
    if (g.degree() != v.size()) throw std::invalid_argument("degree mismatch");
    Perm ginv = g.inverse();
    BitVector out(v.size());
    for (unsigned i = 0; i < v.size(); ++i) out[i] = v[ginv(i)];
    return out;
}

Perm choose_gv(const BitVector& v) {
    unsigned n = static_cast<unsigned>(v.size());
    auto [k, w] = canonical_sorted_vector(v);
    // w's zero positions are 0..n-k-1 and its one positions are n-k..n-1; map
    // them, in order, onto v's zero and one positions respectively.
    std::vector<unsigned> images(n);
    unsigned zero_slot = 0, one_slot = n - k;
    for (unsigned i = 0; i < n; ++i) {
        if (v[i] == 0)
            images[zero_slot++] = i;
        else
            images[one_slot++] = i;
    }
    return Perm(std::move(images));
}

TensorShape block_shape(const BitVector& v, unsigned p, unsigned q) {
    TensorShape s;
    s.dims.reserve(v.size());
    for (unsigned b : v) s.dims.push_back(b ? q : p);
    return s;
}

SparseExactMatrix beta_action(const Perm& g, const SparseExactMatrix& x,
                              const TensorShape& src_shape) {
    if (x.dim() != src_shape.total())
        throw std::invalid_argument("matrix dimension does not match shape");
    auto relab = permutation_relabeling(src_shape, g);
    SparseExactMatrix out(x.dim());
    for (const auto& [key, val] : x.entries()) out.set(relab[key.first], relab[key.second], val);
    return out;
}

BlockAlgebraDescriptor BlockAlgebraDescriptor::create(unsigned p, unsigned q, unsigned n) {
    if (p < 1 || q < 1) throw std::invalid_argument("block dimensions must be positive");
    BlockAlgebraDescriptor d;
    d.p = p;
    d.q = q;
    d.n = n;
    d.blocks = all_bit_vectors(n);
    for (const auto& v : d.blocks) d.block_dims.push_back(block_shape(v, p, q).total());
    return d;
}

BlockAlgebraElement block_zero(const BlockAlgebraDescriptor& d) {
    BlockAlgebraElement a;
    for (std::size_t dim : d.block_dims) a.components.emplace_back(dim);
    return a;
}

BlockAlgebraElement block_identity(const BlockAlgebraDescriptor& d) {
    BlockAlgebraElement a;
    for (std::size_t dim : d.block_dims) a.components.push_back(SparseExactMatrix::identity(dim));
    return a;
}

namespace {

void check_compatible(const BlockAlgebraElement& a, const BlockAlgebraElement& b) {
    if (a.components.size() != b.components.size())
        throw std::invalid_argument("block algebra element mismatch");
}

} // namespace

BlockAlgebraElement block_mul(const BlockAlgebraElement& a, const BlockAlgebraElement& b) {
    check_compatible(a, b);
    BlockAlgebraElement out;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        out.components.push_back(a.components[i] * b.components[i]);
    return out;
}

BlockAlgebraElement block_sub(const BlockAlgebraElement& a, const BlockAlgebraElement& b) {
    check_compatible(a, b);
    BlockAlgebraElement out;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        out.components.push_back(a.components[i] - b.components[i]);
    return out;
}

BlockAlgebraElement block_transpose(const BlockAlgebraElement& a) {
    BlockAlgebraElement out;
    for (const auto& c : a.components) out.components.push_back(c.transpose());
    return out;
}

Rat block_frobenius_sq(const BlockAlgebraElement& a) {
    Rat s(0);
    for (const auto& c : a.components) s += c.frobenius_sq();
    return s;
}

bool block_equal(const BlockAlgebraElement& a, const BlockAlgebraElement& b) {
    return a.components == b.components;
}

BlockAlgebraElement alpha_action(const BlockAlgebraDescriptor& d, const Perm& g,
                                 const BlockAlgebraElement& a) {
    if (a.components.size() != d.block_count())
        throw std::invalid_argument("element does not match descriptor");
    Perm ginv = g.inverse();
    BlockAlgebraElement out = block_zero(d);
    for (std::size_t i = 0; i < d.block_count(); ++i) {
        BitVector pre = permute_bits(ginv, d.blocks[i]);
        // Locate the source block g^{-1}.v among the binary-ordered labels.
        std::size_t code = 0;
        for (unsigned b : pre) code = code * 2 + b;
        out.components[i] = beta_action(g, a.components[code], block_shape(pre, d.p, d.q));
    }
    return out;
}

FixedSummandAlgebra FixedSummandAlgebra::create(unsigned p, unsigned q, unsigned n) {
    FixedSummandAlgebra alg;
    alg.p = p;
    alg.q = q;
    alg.n = n;
    for (unsigned k = 0; k <= n; ++k) {
        TensorShape s;
        s.dims.assign(n - k, p);
        s.dims.insert(s.dims.end(), k, q);
        alg.shapes.push_back(std::move(s));
    }
    return alg;
}

std::vector<Perm> product_group(unsigned n, unsigned k) {
    std::vector<Perm> out;
    for (const Perm& a : symmetric_group(n - k)) {
        for (const Perm& b : symmetric_group(k)) {
            std::vector<unsigned> images(n);
            for (unsigned i = 0; i < n - k; ++i) images[i] = a(i);
            for (unsigned i = 0; i < k; ++i) images[n - k + i] = n - k + b(i);
            out.emplace_back(std::move(images));
        }
    }
    return out;
}

bool is_h_fixed(const FixedSummandAlgebra& algebra, const FixedSummandElement& b) {
    if (b.components.size() != algebra.n + 1)
        throw std::invalid_argument("element does not match algebra");
    for (unsigned k = 0; k <= algebra.n; ++k) {
        const TensorShape& shape = algebra.shapes[k];
        // Adjacent transpositions within the p-slots and within the q-slots
        // generate S_{n-k} x S_k.
        for (unsigned i = 0; i + 1 < algebra.n; ++i) {
            if (i + 1 == algebra.n - k) continue; // crosses the p/q boundary
            std::vector<unsigned> images(algebra.n);
            for (unsigned j = 0; j < algebra.n; ++j) images[j] = j;
            std::swap(images[i], images[i + 1]);
            SparseExactMatrix u = permutation_operator_mixed(shape, Perm(std::move(images)));
            if (!commutator(u, b.components[k]).is_zero()) return false;
        }
    }
    return true;
}

BlockAlgebraElement construct_psi(const BlockAlgebraDescriptor& d, const FixedSummandElement& b) {
    if (b.components.size() != d.n + 1)
        throw std::invalid_argument("element does not match descriptor");
    BlockAlgebraElement out = block_zero(d);
    FixedSummandAlgebra alg = FixedSummandAlgebra::create(d.p, d.q, d.n);
    for (std::size_t i = 0; i < d.block_count(); ++i) {
        const BitVector& v = d.blocks[i];
        unsigned k = bit_sum(v);
        out.components[i] = beta_action(choose_gv(v), b.components[k], alg.shapes[k]);
    }
    return out;
}

} // namespace permfix
