#include "permfix/linalg.hpp"

namespace permfix {

namespace {

// Divide out the gcd of all coefficients and normalize the leading sign.
void normalize(IntRowBasis::Row& row) {
    Int g = 0;
    for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 0) return;
    if (row.begin()->second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) v /= g;
}

} // namespace

bool IntRowBasis::insert(Row row) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->second == 0) {
            it = row.erase(it);
            continue;
        }
        std::size_t pivot_col = it->first;
        auto existing = rows_.find(pivot_col);
        if (existing == rows_.end()) break;
        // row := pivot_val*row - row_val*pivot_row eliminates pivot_col.
        const Row& pivot_row = existing->second;
        Int pivot_val = pivot_row.at(pivot_col);
        Int row_val = it->second;
        for (auto& [c, v] : row) v *= pivot_val;
        for (const auto& [c, v] : pivot_row) {
            auto [jt, inserted] = row.emplace(c, 0);
            jt->second -= row_val * v;
            if (jt->second == 0) row.erase(jt);
        }
        normalize(row);
        it = row.begin();
    }
    if (row.empty()) return false;
    normalize(row);
    std::size_t pivot_col = row.begin()->first;
    rows_.emplace(pivot_col, std::move(row));
    return true;
}

bool IntRowBasis::insert_rational(const std::map<std::size_t, Rat>& row) {
    Int lcm = 1;
    for (const auto& [c, v] : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    Row scaled;
    for (const auto& [c, v] : row) {
        Int coeff = v.get_num() * (lcm / v.get_den());
        if (coeff != 0) scaled.emplace(c, std::move(coeff));
    }
    return insert(std::move(scaled));
}

std::map<std::size_t, Rat> matrix_as_vector(const SparseExactMatrix& x) {
    std::map<std::size_t, Rat> out;
    for (const auto& [k, v] : x.entries()) out.emplace(k.first * x.dim() + k.second, v);
    return out;
}

} // namespace permfix
