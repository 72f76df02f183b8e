#include "permfix/sparse_matrix.hpp"

#include <stdexcept>

namespace permfix {

SparseExactMatrix SparseExactMatrix::identity(std::size_t dim) {
    SparseExactMatrix I(dim);
    for (std::size_t i = 0; i < dim; ++i) I.entries_.emplace(Key{i, i}, Rat(1));
    return I;
}

void SparseExactMatrix::check_same_dim(const SparseExactMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
}

void SparseExactMatrix::set(std::size_t r, std::size_t c, Rat v) {
    if (r >= dim_ || c >= dim_) throw std::out_of_range("matrix index out of range");
    if (v == 0)
        entries_.erase(Key{r, c});
    else
        entries_[Key{r, c}] = std::move(v);
}

void SparseExactMatrix::add(std::size_t r, std::size_t c, const Rat& v) {
    if (r >= dim_ || c >= dim_) throw std::out_of_range("matrix index out of range");
    if (v == 0) return;
    auto [it, inserted] = entries_.emplace(Key{r, c}, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

Rat SparseExactMatrix::get(std::size_t r, std::size_t c) const {
    auto it = entries_.find(Key{r, c});
    return it == entries_.end() ? Rat(0) : it->second;
}

SparseExactMatrix SparseExactMatrix::operator+(const SparseExactMatrix& o) const {
    check_same_dim(o);
    SparseExactMatrix out = *this;
    for (const auto& [k, v] : o.entries_) out.add(k.first, k.second, v);
    return out;
}

SparseExactMatrix SparseExactMatrix::operator-(const SparseExactMatrix& o) const {
    check_same_dim(o);
    SparseExactMatrix out = *this;
    for (const auto& [k, v] : o.entries_) out.add(k.first, k.second, -v);
    return out;
}

SparseExactMatrix SparseExactMatrix::operator*(const SparseExactMatrix& o) const {
    check_same_dim(o);
    SparseExactMatrix out(dim_);
    // Entries are (row, col)-ordered, so o's row k is the contiguous range
    // [lower_bound(k,0), lower_bound(k+1,0)).
    for (const auto& [ka, va] : entries_) {
        auto [r, k] = ka;
        auto it = o.entries_.lower_bound(Key{k, 0});
        auto end = o.entries_.lower_bound(Key{k + 1, 0});
        for (; it != end; ++it) out.add(r, it->first.second, va * it->second);
    }
    return out;
}

SparseExactMatrix SparseExactMatrix::scaled(const Rat& c) const {
    SparseExactMatrix out(dim_);
    if (c == 0) return out;
    for (const auto& [k, v] : entries_) out.entries_.emplace(k, v * c);
    return out;
}

SparseExactMatrix SparseExactMatrix::transpose() const {
    SparseExactMatrix out(dim_);
    for (const auto& [k, v] : entries_) out.entries_.emplace(Key{k.second, k.first}, v);
    return out;
}

SparseExactMatrix SparseExactMatrix::kron(const SparseExactMatrix& o) const {
    SparseExactMatrix out(dim_ * o.dim_);
    for (const auto& [ka, va] : entries_)
        for (const auto& [kb, vb] : o.entries_)
            out.entries_.emplace(
                Key{ka.first * o.dim_ + kb.first, ka.second * o.dim_ + kb.second}, va * vb);
    return out;
}

Rat SparseExactMatrix::trace() const {
    Rat t(0);
    for (const auto& [k, v] : entries_)
        if (k.first == k.second) t += v;
    return t;
}

Rat SparseExactMatrix::frobenius_sq() const {
    Rat s(0);
    for (const auto& [k, v] : entries_) s += v * v;
    return s;
}

Rat frobenius_sq_diff(const SparseExactMatrix& a, const SparseExactMatrix& b) {
    return (a - b).frobenius_sq();
}

SparseExactMatrix commutator(const SparseExactMatrix& a, const SparseExactMatrix& b) {
    return a * b - b * a;
}

} // namespace permfix
