#pragma once

#include "permfix/partition.hpp"

#include <vector>

namespace permfix {

/// Permutation of {0,...,n-1} in one-line notation: images[i] = g(i).
class Perm {
  public:
    Perm() = default;

    /// Validates that images is a bijection; throws std::invalid_argument.
    explicit Perm(std::vector<unsigned> images);

    static Perm identity(unsigned n);

    unsigned degree() const { return static_cast<unsigned>(images_.size()); }

    unsigned operator()(unsigned i) const { return images_[i]; }

    /// Composition acts like functions: (f*g)(i) = f(g(i)).
    Perm operator*(const Perm& g) const;

    Perm inverse() const;

    /// Cycle type as a partition of degree() (fixed points contribute 1s).
    Partition cycle_type() const;

    /// Number of cycles including fixed points.
    unsigned cycle_count() const;

    bool operator==(const Perm&) const = default;

  private:
    std::vector<unsigned> images_;
};

/// All n! elements of S_n in lexicographic one-line order; identity first.
std::vector<Perm> symmetric_group(unsigned n);

/// Adjacent transpositions (0 1), (1 2), ..., (n-2 n-1); they generate S_n.
std::vector<Perm> coxeter_generators(unsigned n);

} // namespace permfix
