#pragma once

#include "permfix/rational.hpp"
#include "permfix/sparse_matrix.hpp"

#include <cstddef>
#include <map>

namespace permfix {

/// Incremental exact rank computation over sparse rows, fraction-free: rows
/// are cleared to integer vectors and elimination uses only integer
/// cross-multiplication followed by content (gcd) removal, so no rational
/// arithmetic and no uncontrolled coefficient growth.
class IntRowBasis {
  public:
    using Row = std::map<std::size_t, Int>;

    /// Reduces the row against the current basis; returns true (and keeps the
    /// reduced row) when it enlarges the span.
    bool insert(Row row);

    /// Scales a rational row to integers first.
    bool insert_rational(const std::map<std::size_t, Rat>& row);

    std::size_t rank() const { return rows_.size(); }

  private:
    std::map<std::size_t, Row> rows_; // pivot column -> reduced row
};

/// Flattens a matrix into a sparse coordinate vector keyed by r*dim + c, for
/// rank computations over spans of matrices.
std::map<std::size_t, Rat> matrix_as_vector(const SparseExactMatrix& x);

} // namespace permfix
