#include "permfix/tensor_index.hpp"

#include <stdexcept>

namespace permfix {

std::size_t TensorShape::total() const {
    std::size_t t = 1;
    for (unsigned d : dims) t *= d;
    return t;
}

std::vector<unsigned> TensorShape::digits0(std::size_t flat) const {
    std::vector<unsigned> out(dims.size());
    for (std::size_t j = dims.size(); j-- > 0;) {
        out[j] = static_cast<unsigned>(flat % dims[j]);
        flat /= dims[j];
    }
    return out;
}

std::size_t TensorShape::flat0(const std::vector<unsigned>& digits) const {
    if (digits.size() != dims.size()) throw std::invalid_argument("digit count mismatch");
    std::size_t flat = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (digits[j] >= dims[j]) throw std::invalid_argument("digit out of range");
        flat = flat * dims[j] + digits[j];
    }
    return flat;
}

TensorIndex tensor_index_from_flat(unsigned m, unsigned n, std::size_t flat) {
    TensorShape shape = TensorShape::uniform(m, n);
    if (flat >= shape.total()) throw std::invalid_argument("flat index out of range");
    TensorIndex idx;
    idx.m = m;
    idx.n = n;
    idx.flat = flat;
    idx.digits = shape.digits0(flat);
    for (unsigned& d : idx.digits) ++d;
    return idx;
}

TensorIndex tensor_index_from_digits(unsigned m, unsigned n, std::vector<unsigned> digits) {
    TensorShape shape = TensorShape::uniform(m, n);
    std::vector<unsigned> zero_based = digits;
    for (unsigned& d : zero_based) {
        if (d < 1) throw std::invalid_argument("digits are 1-based");
        --d;
    }
    TensorIndex idx;
    idx.m = m;
    idx.n = n;
    idx.flat = shape.flat0(zero_based);
    idx.digits = std::move(digits);
    return idx;
}

TensorShape permuted_shape(const TensorShape& s, const Perm& g) {
    if (g.degree() != s.slots()) throw std::invalid_argument("permutation degree mismatch");
    Perm ginv = g.inverse();
    TensorShape out;
    out.dims.resize(s.dims.size());
    for (unsigned j = 0; j < s.slots(); ++j) out.dims[j] = s.dims[ginv(j)];
    return out;
}

std::vector<std::size_t> permutation_relabeling(const TensorShape& s, const Perm& g) {
    if (g.degree() != s.slots()) throw std::invalid_argument("permutation degree mismatch");
    Perm ginv = g.inverse();
    TensorShape dst = permuted_shape(s, g);
    std::size_t total = s.total();
    std::vector<std::size_t> relab(total);
    std::vector<unsigned> src_digits, dst_digits(s.slots());
    for (std::size_t flat = 0; flat < total; ++flat) {
        src_digits = s.digits0(flat);
        for (unsigned j = 0; j < s.slots(); ++j) dst_digits[j] = src_digits[ginv(j)];
        relab[flat] = dst.flat0(dst_digits);
    }
    return relab;
}

} // namespace permfix
