#include "permfix/partition.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace permfix {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

unsigned Partition::sum() const {
    unsigned s = 0;
    for (unsigned p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<unsigned> conj(parts_[0], 0);
    for (unsigned p : parts_)
        for (unsigned j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

namespace {

// Recursive descent: parts weakly decreasing, each new part <= previous.
// Emission order: largest first part first, and within equal first parts the
// larger second part first, etc. -- exactly reverse-lexicographic order.
void emit_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    unsigned first = std::min(remaining, max_part);
    for (unsigned p = first; p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(unsigned n, unsigned max_n) {
    if (n > max_n)
        throw std::domain_error("partition enumeration capped at n = " + std::to_string(max_n));
    std::vector<Partition> out;
    std::vector<unsigned> prefix;
    emit_partitions(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

std::size_t partition_count(unsigned n, unsigned max_n) {
    if (n > max_n)
        throw std::domain_error("partition enumeration capped at n = " + std::to_string(max_n));
    // p(k) via the classical recurrence with pentagonal numbers would be
    // overkill at this scale; a simple table fill keeps it obvious.
    std::vector<std::vector<std::size_t>> table(n + 1, std::vector<std::size_t>(n + 1, 0));
    for (unsigned k = 0; k <= n; ++k) table[0][k] = 1;
    for (unsigned s = 1; s <= n; ++s)
        for (unsigned k = 1; k <= n; ++k) {
            table[s][k] = table[s][k - 1];
            if (s >= k) table[s][k] += table[s - k][k];
        }
    return table[n][n];
}

std::size_t partition_index(const Partition& lambda) {
    auto all = enumerate_partitions(lambda.sum());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == lambda) return i;
    throw std::logic_error("partition not found in its own enumeration");
}

Int class_size(const Partition& lambda) {
    // z_lambda = prod_i i^{m_i} m_i! over distinct part sizes i.
    std::map<unsigned, unsigned> mult;
    for (unsigned p : lambda.parts()) ++mult[p];
    Int z = 1;
    for (auto [size, m] : mult) z *= int_pow(Int(size), m) * factorial(m);
    return factorial(lambda.sum()) / z;
}

std::vector<std::vector<unsigned>> hook_lengths(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    std::vector<std::vector<unsigned>> hooks(lambda.length());
    for (unsigned i = 0; i < lambda.length(); ++i) {
        hooks[i].resize(lambda.part(i));
        for (unsigned j = 0; j < lambda.part(i); ++j)
            hooks[i][j] = lambda.part(i) - j + conj.part(j) - i - 1;
    }
    return hooks;
}

Int irrep_dimension(const Partition& lambda) {
    Int denom = 1;
    for (const auto& row : hook_lengths(lambda))
        for (unsigned h : row) denom *= h;
    Int num = factorial(lambda.sum());
    // The hook length formula always divides exactly.
    return num / denom;
}

unsigned p_adic_valuation_factorial(unsigned n, unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    unsigned v = 0;
    unsigned long long q = p;
    while (q <= n) {
        v += static_cast<unsigned>(n / q);
        if (q > n / p) break; // avoid overflow on q *= p
        q *= p;
    }
    return v;
}

} // namespace permfix
