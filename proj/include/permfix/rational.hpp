#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace permfix {

/// Arbitrary-precision integer. Character values, class sizes and dimension
/// totals overflow 64 bits well inside the supported parameter ranges.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept canonical (gcd 1, positive den).
using Rat = mpq_class;

Int factorial(unsigned n);

Int int_pow(Int base, unsigned exp);

/// Trial-division primality test for the small primes used as parameters.
bool is_prime(unsigned long n);

/// v_p(x) for x != 0.
unsigned p_adic_valuation(Int x, unsigned long p);

std::string int_str(const Int& v);

/// Canonical rational rendering: "3", "-1/2". Matches GMP's get_str.
std::string rat_str(const Rat& v);

/// Parses "a", "-a/b" and exact decimal literals such as "0.25".
/// Throws std::invalid_argument on anything else (including exponents).
Rat rat_parse(const std::string& text);

double rat_to_double(const Rat& v);

/// splitmix64: tiny deterministic generator used for seeded sampling.
/// Self-contained so that identical seeds give identical streams on every
/// platform and standard library.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform integer in [lo, hi], hi - lo < 2^62.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi);

  private:
    std::uint64_t state_;
};

} // namespace permfix
