#include "permfix/character.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace permfix {

namespace {

// Murnaghan-Nakayama on beta-numbers. A partition with at most l rows is
// encoded as the strictly increasing set beta = {lambda_i + (l-1-i)}.
// Removing a border strip of size t means picking b in beta with b >= t and
// b-t not in beta, then replacing b by b-t; the strip height parity is the
// number of beta elements strictly between b-t and b.
using Beta = std::vector<unsigned>; // sorted ascending, distinct

using Memo = std::map<std::pair<Beta, std::size_t>, Int>;

Int mn_recurse(const Beta& beta, const std::vector<unsigned>& mu_parts, std::size_t idx,
               Memo& memo) {
    if (idx == mu_parts.size()) return 1; // beta is the bare staircase now
    auto key = std::make_pair(beta, idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    unsigned t = mu_parts[idx];
    Int total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        unsigned b = beta[i];
        if (b < t) continue;
        unsigned target = b - t;
        if (std::binary_search(beta.begin(), beta.end(), target)) continue;
        int between = 0;
        for (unsigned e : beta)
            if (e > target && e < b) ++between;
        Beta next = beta;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        next.insert(std::lower_bound(next.begin(), next.end(), target), target);
        Int sub = mn_recurse(next, mu_parts, idx + 1, memo);
        if (between % 2)
            total -= sub;
        else
            total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

Int mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum())
        throw std::invalid_argument("character arguments must partition the same n");
    unsigned l = std::max<unsigned>(lambda.length(), 1);
    Beta beta(l);
    for (unsigned i = 0; i < l; ++i) {
        unsigned part = i < lambda.length() ? lambda.part(i) : 0;
        beta[l - 1 - i] = part + (l - 1 - i);
    }
    Memo memo;
    return mn_recurse(beta, mu.parts(), 0, memo);
}

CharacterTable::CharacterTable(unsigned n, unsigned max_n) : n_(n) {
    if (n > max_n)
        throw std::domain_error("character table capped at n = " + std::to_string(max_n));
    labels_ = enumerate_partitions(n);
    class_sizes_.reserve(labels_.size());
    for (const auto& mu : labels_) class_sizes_.push_back(permfix::class_size(mu));
    values_.resize(labels_.size());
    for (std::size_t r = 0; r < labels_.size(); ++r) {
        values_[r].reserve(labels_.size());
        for (const auto& mu : labels_) values_[r].push_back(mn_character(labels_[r], mu));
    }
}

Int CharacterTable::inner_product(std::size_t row_a, std::size_t row_b) const {
    Int s = 0;
    for (std::size_t c = 0; c < labels_.size(); ++c)
        s += class_sizes_[c] * values_[row_a][c] * values_[row_b][c];
    return s;
}

bool CharacterTable::orthogonality_holds() const {
    Int fact = factorial(n_);
    for (std::size_t a = 0; a < labels_.size(); ++a)
        for (std::size_t b = a; b < labels_.size(); ++b) {
            Int expect = (a == b) ? fact : Int(0);
            if (inner_product(a, b) != expect) return false;
        }
    return true;
}

Rat class_function_inner_product(const CharacterTable& table, std::size_t row,
                                 const std::vector<Int>& f) {
    if (f.size() != table.size())
        throw std::invalid_argument("class function has wrong number of values");
    Int s = 0;
    for (std::size_t c = 0; c < table.size(); ++c)
        s += table.class_size(c) * table.value(row, c) * f[c];
    Rat r(s);
    r /= Rat(factorial(table.n()));
    return r;
}

} // namespace permfix
