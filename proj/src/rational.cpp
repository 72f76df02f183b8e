#include "permfix/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace permfix {

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int int_pow(Int base, unsigned exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

bool is_prime(unsigned long n) {
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

unsigned p_adic_valuation(Int x, unsigned long p) {
    if (x == 0)
        throw std::invalid_argument("p_adic_valuation: zero argument");
    if (p < 2)
        throw std::invalid_argument("p_adic_valuation: p must be >= 2");
    unsigned v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p);
        if (r != 0)
            return v;
        x = q;
        ++v;
    }
}

std::string int_str(const Int& v) { return v.get_str(); }

std::string rat_str(const Rat& v) { return v.get_str(); }

Rat rat_parse(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("rat_parse: empty string");
    const auto bad = [&]() {
        throw std::invalid_argument("rat_parse: cannot parse '" + text + "'");
    };
    if (text.find('/') != std::string::npos) {
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
            bad();
        if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
            throw std::invalid_argument("rat_parse: zero denominator in '" + text + "'");
        r.canonicalize();
        return r;
    }
    // integer or exact decimal literal
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::string digits;
    unsigned frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_dot)
                bad();
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot)
                ++frac_digits;
        } else {
            bad();
        }
    }
    if (!seen_digit)
        bad();
    Int num(digits, 10);
    if (neg)
        num = -num;
    Rat r(num, int_pow(10, frac_digits));
    r.canonicalize();
    return r;
}

double rat_to_double(const Rat& v) { return v.get_d(); }

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t SplitMix64::next_in(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

} // namespace permfix
