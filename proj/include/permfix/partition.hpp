#pragma once

#include "permfix/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace permfix {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0. Doubles as an irreducible-representation
/// label and as a cycle-type (conjugacy class) label for S_n.
class Partition {
  public:
    Partition() = default;

    /// Validates weak decrease and positivity; throws std::invalid_argument.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }

    /// The partitioned integer n (sum of parts).
    unsigned sum() const;

    /// Number of parts, usually written l(lambda).
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }

    unsigned part(std::size_t i) const { return parts_[i]; }

    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    /// "(3,1,1)"; "()" for the empty partition.
    std::string str() const;

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<unsigned> parts_;
};

inline constexpr unsigned kMaxPartitionN = 30;

/// All partitions of n in reverse-lexicographic order, (n) first, (1^n) last.
/// This order is the canonical row/column index everywhere in the library.
/// Throws std::domain_error when n exceeds the cap.
std::vector<Partition> enumerate_partitions(unsigned n, unsigned max_n = kMaxPartitionN);

std::size_t partition_count(unsigned n, unsigned max_n = kMaxPartitionN);

/// Index of lambda in enumerate_partitions(lambda.sum()).
std::size_t partition_index(const Partition& lambda);

/// Number of permutations in S_n with cycle type lambda: n!/z_lambda where
/// z_lambda = prod over part sizes i of i^{m_i} m_i!.
Int class_size(const Partition& lambda);

/// hooks[i][j] = lambda_i - j + lambda'_j - i + 1 in 0-based cell coordinates.
std::vector<std::vector<unsigned>> hook_lengths(const Partition& lambda);

/// n! / product of hooks (hook length formula).
Int irrep_dimension(const Partition& lambda);

/// Legendre's formula sum_i floor(n/p^i). Throws on non-prime p.
unsigned p_adic_valuation_factorial(unsigned n, unsigned long p);

} // namespace permfix
