#pragma once

#include "permfix/partition.hpp"
#include "permfix/rational.hpp"

#include <vector>

namespace permfix {

/// Irreducible character value chi_lambda(mu) via the Murnaghan-Nakayama
/// recursion (border-strip removal on beta-numbers). Both arguments must
/// partition the same n.
Int mn_character(const Partition& lambda, const Partition& mu);

inline constexpr unsigned kMaxCharTableN = 12;

/// Full character table of S_n. Rows: irreducibles, columns: conjugacy
/// classes, both in the canonical reverse-lexicographic partition order.
class CharacterTable {
  public:
    /// Throws std::domain_error past the cap.
    explicit CharacterTable(unsigned n, unsigned max_n = kMaxCharTableN);

    unsigned n() const { return n_; }
    const std::vector<Partition>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }

    const Int& value(std::size_t row, std::size_t col) const { return values_[row][col]; }
    const std::vector<Int>& row(std::size_t r) const { return values_[r]; }

    const Int& class_size(std::size_t col) const { return class_sizes_[col]; }

    /// sum_mu |class(mu)| * row_a(mu) * row_b(mu); equals n! iff a == b.
    Int inner_product(std::size_t row_a, std::size_t row_b) const;

    /// Row orthogonality across the whole table.
    bool orthogonality_holds() const;

  private:
    unsigned n_;
    std::vector<Partition> labels_;
    std::vector<Int> class_sizes_;
    std::vector<std::vector<Int>> values_;
};

/// <chi_lambda, f> = (1/n!) sum_mu |class(mu)| chi_lambda(mu) f(mu), with f
/// given by its values on classes in canonical order. Exact rational result.
Rat class_function_inner_product(const CharacterTable& table, std::size_t row,
                                 const std::vector<Int>& f);

} // namespace permfix
