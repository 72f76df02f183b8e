#pragma once

#include "permfix/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>

namespace permfix {

/// Square sparse matrix with exact rational entries. Entries are kept in a
/// map ordered by (row, col), so iteration (and serialization) is
/// deterministic; zeros are never stored.
class SparseExactMatrix {
  public:
    using Key = std::pair<std::size_t, std::size_t>;
    using EntryMap = std::map<Key, Rat>;

    SparseExactMatrix() = default;
    explicit SparseExactMatrix(std::size_t dim) : dim_(dim) {}

    static SparseExactMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    const EntryMap& entries() const { return entries_; }

    void set(std::size_t r, std::size_t c, Rat v);
    void add(std::size_t r, std::size_t c, const Rat& v);
    Rat get(std::size_t r, std::size_t c) const;

    SparseExactMatrix operator+(const SparseExactMatrix& o) const;
    SparseExactMatrix operator-(const SparseExactMatrix& o) const;
    SparseExactMatrix operator*(const SparseExactMatrix& o) const;
    SparseExactMatrix scaled(const Rat& c) const;
    SparseExactMatrix transpose() const;

    /// Kronecker product; the right factor's index is least significant.
    SparseExactMatrix kron(const SparseExactMatrix& o) const;

    Rat trace() const;
    Rat frobenius_sq() const; // sum of squared entries

    bool operator==(const SparseExactMatrix& o) const = default;

  private:
    std::size_t dim_ = 0;
    EntryMap entries_;

    void check_same_dim(const SparseExactMatrix& o) const;
};

/// ||a - b||_F^2, exact.
Rat frobenius_sq_diff(const SparseExactMatrix& a, const SparseExactMatrix& b);

/// ab - ba.
SparseExactMatrix commutator(const SparseExactMatrix& a, const SparseExactMatrix& b);

} // namespace permfix
