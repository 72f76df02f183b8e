#include "permfix/tensor_rep.hpp"

#include "permfix/character.hpp"
#include "permfix/linalg.hpp"

#include <map>
#include <stdexcept>

namespace permfix {

namespace {

void check_cap(unsigned m, unsigned n, std::size_t dim_cap) {
    std::size_t dim = 1;
    for (unsigned j = 0; j < n; ++j) {
        dim *= m;
        if (dim > dim_cap) throw std::domain_error("tensor dimension m^n exceeds cap");
    }
}

} // namespace

SparseExactMatrix build_permutation_operator(const Perm& g, unsigned m, std::size_t dim_cap) {
    check_cap(m, g.degree(), dim_cap);
    TensorShape shape = TensorShape::uniform(m, g.degree());
    SparseExactMatrix out(shape.total());
    auto relab = permutation_relabeling(shape, g);
    for (std::size_t i = 0; i < relab.size(); ++i) out.set(relab[i], i, Rat(1));
    return out;
}

SparseExactMatrix permutation_operator_mixed(const TensorShape& shape, const Perm& g) {
    SparseExactMatrix out(shape.total());
    auto relab = permutation_relabeling(shape, g);
    for (std::size_t i = 0; i < relab.size(); ++i) out.set(relab[i], i, Rat(1));
    return out;
}

SparseExactMatrix isotypic_projection(const Partition& lambda, unsigned m, std::size_t dim_cap,
                                      unsigned max_n) {
    unsigned n = lambda.sum();
    if (n > max_n) throw std::domain_error("isotypic projection capped at n = " +
                                           std::to_string(max_n));
    check_cap(m, n, dim_cap);
    TensorShape shape = TensorShape::uniform(m, n);

    // chi_lambda is a class function; evaluate it once per cycle type.
    std::map<Partition, Int> chi;
    for (const auto& mu : enumerate_partitions(n)) chi.emplace(mu, mn_character(lambda, mu));

    SparseExactMatrix sum(shape.total());
    for (const Perm& g : symmetric_group(n)) {
        const Int& coeff = chi.at(g.cycle_type());
        if (coeff == 0) continue;
        auto relab = permutation_relabeling(shape, g);
        Rat c(coeff);
        for (std::size_t i = 0; i < relab.size(); ++i) sum.add(relab[i], i, c);
    }
    Rat scale(irrep_dimension(lambda));
    scale /= Rat(factorial(n));
    return sum.scaled(scale);
}

SparseExactMatrix average_over_group(const SparseExactMatrix& x, unsigned m, unsigned n) {
    TensorShape shape = TensorShape::uniform(m, n);
    if (x.dim() != shape.total()) throw std::invalid_argument("matrix dimension != m^n");
    SparseExactMatrix sum(x.dim());
    for (const Perm& g : symmetric_group(n)) {
        auto relab = permutation_relabeling(shape, g);
        // U_g X U_g^{-1} moves the entry at (r, c) to (g.r, g.c).
        for (const auto& [k, v] : x.entries()) sum.add(relab[k.first], relab[k.second], v);
    }
    Rat scale(1);
    scale /= Rat(factorial(n));
    return sum.scaled(scale);
}

std::vector<SparseExactMatrix> fixed_algebra_basis(const TensorShape& shape,
                                                   const std::vector<Perm>& group) {
    std::size_t dim = shape.total();
    std::vector<std::vector<std::size_t>> relabs;
    relabs.reserve(group.size());
    for (const Perm& g : group) relabs.push_back(permutation_relabeling(shape, g));

    std::vector<SparseExactMatrix> basis;
    std::vector<bool> visited(dim * dim, false);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (visited[r * dim + c]) continue;
            // Orbit of the (r, c) pair under simultaneous relabeling.
            std::map<std::pair<std::size_t, std::size_t>, unsigned> orbit;
            for (const auto& relab : relabs) ++orbit[{relab[r], relab[c]}];
            SparseExactMatrix elt(dim);
            Rat weight(1);
            weight /= Rat(static_cast<unsigned long>(orbit.size()));
            for (const auto& [pos, cnt] : orbit) {
                visited[pos.first * dim + pos.second] = true;
                elt.set(pos.first, pos.second, weight);
            }
            basis.push_back(std::move(elt));
        }
    }
    return basis;
}

std::vector<SparseExactMatrix> commutant_basis(unsigned m, unsigned n, std::size_t dim_cap) {
    check_cap(m, n, dim_cap);
    TensorShape shape = TensorShape::uniform(m, n);
    auto candidates = fixed_algebra_basis(shape, symmetric_group(n));
    // Orbit sums have pairwise disjoint supports, but the contract is an
    // exact-rank-certified basis, so run the reduction anyway.
    IntRowBasis rank;
    std::vector<SparseExactMatrix> basis;
    for (auto& x : candidates) {
        if (rank.insert_rational(matrix_as_vector(x))) basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace permfix
