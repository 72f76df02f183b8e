#pragma once

#include "permfix/permutation.hpp"

#include <cstddef>
#include <vector>

namespace permfix {

/// Index bookkeeping for a tensor product of spaces of (possibly different)
/// dimensions. Flat indices are mixed-radix, leftmost factor most
/// significant: flat = sum_j digit_j * prod_{l>j} dims_l.
struct TensorShape {
    std::vector<unsigned> dims; // dims[j] = dimension of slot j

    static TensorShape uniform(unsigned m, unsigned n) {
        return TensorShape{std::vector<unsigned>(n, m)};
    }

    unsigned slots() const { return static_cast<unsigned>(dims.size()); }

    std::size_t total() const;

    /// 0-based digits of a flat index, one per slot.
    std::vector<unsigned> digits0(std::size_t flat) const;

    std::size_t flat0(const std::vector<unsigned>& digits) const;

    bool operator==(const TensorShape&) const = default;
};

/// Basis label for (C^m)^(tensor n) with the conventional 1-based digits:
/// digits[j] in {1..m} and flat = sum_j (digits[j]-1) * m^{n-1-j}.
struct TensorIndex {
    unsigned m = 0;
    unsigned n = 0;
    std::vector<unsigned> digits; // 1-based
    std::size_t flat = 0;
};

TensorIndex tensor_index_from_flat(unsigned m, unsigned n, std::size_t flat);
TensorIndex tensor_index_from_digits(unsigned m, unsigned n, std::vector<unsigned> digits);

/// Shape after permuting slots: target slot j holds the source slot g^{-1}(j),
/// so the map g -> (relabeling) composes covariantly.
TensorShape permuted_shape(const TensorShape& s, const Perm& g);

/// relabeling[flat] = flat index in permuted_shape(s, g) whose digit at slot j
/// is the source digit at slot g^{-1}(j).
std::vector<std::size_t> permutation_relabeling(const TensorShape& s, const Perm& g);

} // namespace permfix
