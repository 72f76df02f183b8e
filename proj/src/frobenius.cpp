#include "permfix/frobenius.hpp"

#include <numeric>
#include <stdexcept>

namespace permfix {

namespace {

void check_pq(unsigned long p, unsigned long q) {
    if (p < 2 || q < 2) throw std::invalid_argument("p and q must be at least 2");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
}

} // namespace

FrobeniusWitness represent_as_ap_bq(unsigned long p, unsigned long q, unsigned long k) {
    check_pq(p, q);
    FrobeniusWitness w;
    w.k = k;
    for (unsigned long a = 1; a * p < k; ++a) {
        unsigned long rest = k - a * p;
        if (rest % q == 0) {
            w.a = a;
            w.b = rest / q;
            break;
        }
    }
    return w;
}

unsigned long positive_representability_threshold(unsigned long p, unsigned long q) {
    check_pq(p, q);
    // Scan downward from a safe bound: everything >= pq+1 is representable,
    // so the threshold is the successor of the largest non-representable k.
    unsigned long bound = p * q + 1;
    for (unsigned long k = bound - 1; k >= 1; --k) {
        if (!represent_as_ap_bq(p, q, k).representable()) return k + 1;
        if (k == 1) break;
    }
    return 1;
}

} // namespace permfix
