#include "permfix/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permfix {

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (unsigned v : images_) {
        if (v >= images_.size() || seen[v])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[v] = true;
    }
}

Perm Perm::identity(unsigned n) {
    std::vector<unsigned> im(n);
    std::iota(im.begin(), im.end(), 0u);
    return Perm(std::move(im));
}

Perm Perm::operator*(const Perm& g) const {
    if (degree() != g.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<unsigned> im(degree());
    for (unsigned i = 0; i < degree(); ++i) im[i] = images_[g.images_[i]];
    return Perm(std::move(im));
}

Perm Perm::inverse() const {
    std::vector<unsigned> im(degree());
    for (unsigned i = 0; i < degree(); ++i) im[images_[i]] = i;
    return Perm(std::move(im));
}

Partition Perm::cycle_type() const {
    std::vector<bool> seen(degree(), false);
    std::vector<unsigned> lens;
    for (unsigned i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0, j = i;
        do {
            seen[j] = true;
            j = images_[j];
            ++len;
        } while (j != i);
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return Partition(std::move(lens));
}

unsigned Perm::cycle_count() const {
    std::vector<bool> seen(degree(), false);
    unsigned count = 0;
    for (unsigned i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        ++count;
        unsigned j = i;
        do {
            seen[j] = true;
            j = images_[j];
        } while (j != i);
    }
    return count;
}

std::vector<Perm> symmetric_group(unsigned n) {
    std::vector<unsigned> im(n);
    std::iota(im.begin(), im.end(), 0u);
    std::vector<Perm> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<Perm> coxeter_generators(unsigned n) {
    std::vector<Perm> gens;
    for (unsigned i = 0; i + 1 < n; ++i) {
        std::vector<unsigned> im(n);
        std::iota(im.begin(), im.end(), 0u);
        std::swap(im[i], im[i + 1]);
        gens.emplace_back(std::move(im));
    }
    return gens;
}

} // namespace permfix
