#pragma once

#include <optional>

namespace permfix {

/// Solution to k = a*p + b*q with a,b >= 1, if one exists. Among all
/// solutions the one with minimal a is returned, making output deterministic.
struct FrobeniusWitness {
    unsigned long k = 0;
    std::optional<unsigned long> a;
    std::optional<unsigned long> b;

    bool representable() const { return a.has_value(); }
};

/// Requires p, q >= 2 coprime; throws std::invalid_argument otherwise.
FrobeniusWitness represent_as_ap_bq(unsigned long p, unsigned long q, unsigned long k);

/// Least T such that every k >= T is representable with positive
/// coefficients. For coprime p,q this is the classical pq+1
/// (Frobenius number for nonnegative coefficients is pq-p-q, and demanding
/// a,b >= 1 shifts the bound by p+q). Computed by brute force rather than
/// asserted, so it doubles as an oracle.
unsigned long positive_representability_threshold(unsigned long p, unsigned long q);

} // namespace permfix
