#pragma once

#include "permfix/character.hpp"
#include "permfix/partition.hpp"
#include "permfix/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace permfix {

inline constexpr unsigned kMaxMultiplicityN = 12;
inline constexpr unsigned kMaxMultiplicityM = 64;

/// Values of the permutation character of S_n on (C^m)^(tensor n), one per
/// conjugacy class in canonical order: the class mu contributes m^{l(mu)}.
std::vector<Int> permutation_character_values(unsigned m, unsigned n);

struct DecompositionEntry {
    Partition lambda;
    Int dim;          // irreducible dimension of lambda
    Int multiplicity; // Schur-Weyl multiplicity mu(lambda)
};

/// Shape of the fixed-point algebra of S_n acting on M_m^(tensor n):
/// a direct sum of full matrix blocks of sizes mu(lambda).
struct DecompositionReport {
    unsigned m = 0;
    unsigned n = 0;
    std::vector<DecompositionEntry> entries; // every lambda |- n, canonical order
    Int total_dim_check;                     // sum mult*dim; must equal m^n
    Int commutant_dim;                       // sum mult^2
};

/// Multiplicities via exact character inner products; throws std::domain_error
/// past the caps. Each multiplicity is (1/n!)<chi_lambda, permutation char>.
DecompositionReport multiplicities(unsigned m, unsigned n, unsigned max_m = kMaxMultiplicityM,
                                   unsigned max_n = kMaxMultiplicityN);

/// Independent oracle for the same multiplicity: the number of semistandard
/// tableaux of shape lambda with entries <= m, by the hook-content formula
/// prod over cells (m + j - i) / hook(i,j). Zero when lambda has > m rows.
Int multiplicity_hook_content(const Partition& lambda, unsigned m);

/// The nonzero block sizes mu(lambda) in canonical lambda order.
std::vector<Int> fixed_point_shape(unsigned m, unsigned n);

struct LemmaCounterexample {
    Partition lambda;
    Int multiplicity; // not divisible by p
};

/// Divisibility check: if p^k | m and p^k does not divide n!, then p divides
/// every mu(lambda). Counterexamples are reported even when the hypotheses
/// fail, to exhibit their sharpness.
struct LemmaVerdict {
    unsigned m = 0;
    unsigned n = 0;
    unsigned long p = 0;
    unsigned k = 0;
    bool pk_divides_m = false;
    unsigned vp_n_factorial = 0; // v_p(n!)
    bool pk_divides_n_factorial = false;
    bool hypotheses_hold = false; // pk_divides_m && !pk_divides_n_factorial
    bool all_divisible = false;   // p | mu(lambda) for every lambda |- n
    std::vector<LemmaCounterexample> counterexamples;

    bool violated() const { return hypotheses_hold && !all_divisible; }
};

/// Throws on non-prime p or k = 0.
LemmaVerdict check_lemma(unsigned m, unsigned n, unsigned long p, unsigned k);

/// Same verdict computed from an existing decomposition (sweep fast path).
LemmaVerdict check_lemma_with(const DecompositionReport& report, unsigned long p, unsigned k);

struct SweepConfig {
    unsigned max_m = 12;
    unsigned max_n = 6;
    unsigned max_k = 3;
    std::vector<unsigned long> primes{2, 3, 5, 7, 11};
    unsigned parallelism = 1;
    std::size_t max_sharpness_examples = 10;
};

struct SweepSummary {
    SweepConfig config;
    std::size_t tuples_checked = 0;
    std::size_t hypotheses_hold_count = 0;
    std::vector<LemmaVerdict> violations;         // hypotheses hold, divisibility fails
    std::vector<LemmaVerdict> sharpness_examples; // p^k | m but p^k | n!, divisibility fails

    bool all_pass() const { return violations.empty(); }
};

/// Exhaustive check over 1 <= m <= max_m, 1 <= n <= max_n, p in primes,
/// 1 <= k <= max_k. Deterministic aggregation regardless of parallelism.
SweepSummary lemma_sweep(const SweepConfig& config);

struct IsotropyValue {
    Rat s;                      // the coordinate value
    unsigned multiplicity;      // how many coordinates equal s
    std::string classification; // "0-endpoint" | "1-endpoint" | "interior"
};

/// Stabilizer data of a point of the ordered simplex under coordinate
/// permutation: the isotropy group is the product of symmetric groups on the
/// groups of equal coordinates, and the fiber descriptor records the
/// symmetrized tensor factor attached to each distinct value.
struct IsotropyReport {
    std::vector<Rat> sorted_coordinates;
    std::vector<IsotropyValue> values; // distinct values, ascending
    std::vector<unsigned> multiplicities;
    Partition multiplicity_partition; // multiplicities sorted descending
    std::string isotropy_group;       // e.g. "S_2 × S_1"
    std::string fiber_descriptor;     // e.g. "(E_{0}^{⊗2})^{S_2} ⊗ E_{1}"
};

/// Coordinates must be exact rationals in [0,1]; throws std::domain_error on
/// out-of-range values and std::invalid_argument on empty input.
IsotropyReport isotropy_type(std::vector<Rat> coordinates);

} // namespace permfix
