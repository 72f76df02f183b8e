#include "permfix/schur_weyl.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace permfix {

namespace {

// Character tables are reused heavily by sweeps; cache them behind a mutex so
// concurrent callers always see one table per n.
const CharacterTable& cached_table(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CharacterTable>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<CharacterTable>(n)).first;
    return *it->second;
}

} // namespace

std::vector<Int> permutation_character_values(unsigned m, unsigned n) {
    std::vector<Int> vals;
    for (const auto& mu : enumerate_partitions(n)) vals.push_back(int_pow(Int(m), mu.length()));
    return vals;
}

DecompositionReport multiplicities(unsigned m, unsigned n, unsigned max_m, unsigned max_n) {
    if (m < 1 || m > max_m)
        throw std::domain_error("m out of range (1.." + std::to_string(max_m) + ")");
    if (n > max_n) throw std::domain_error("n capped at " + std::to_string(max_n));
    const CharacterTable& table = cached_table(n);
    std::vector<Int> perm_char = permutation_character_values(m, n);

    DecompositionReport report;
    report.m = m;
    report.n = n;
    report.total_dim_check = 0;
    report.commutant_dim = 0;
    for (std::size_t r = 0; r < table.size(); ++r) {
        Rat ip = class_function_inner_product(table, r, perm_char);
        if (ip.get_den() != 1)
            throw std::logic_error("multiplicity inner product is not an integer");
        DecompositionEntry e;
        e.lambda = table.labels()[r];
        e.dim = irrep_dimension(e.lambda);
        e.multiplicity = ip.get_num();
        report.total_dim_check += e.multiplicity * e.dim;
        report.commutant_dim += e.multiplicity * e.multiplicity;
        report.entries.push_back(std::move(e));
    }
    if (report.total_dim_check != int_pow(Int(m), n))
        throw std::logic_error("dimension check failed: sum mult*dim != m^n");
    return report;
}

Int multiplicity_hook_content(const Partition& lambda, unsigned m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (lambda.length() > m) return 0;
    auto hooks = hook_lengths(lambda);
    Int num = 1, den = 1;
    for (unsigned i = 0; i < lambda.length(); ++i)
        for (unsigned j = 0; j < lambda.part(i); ++j) {
            // content j - i with 0-based cell (i,j); m + j - i > 0 since i < m
            num *= Int(m) + j - i;
            den *= hooks[i][j];
        }
    // The semistandard tableau count is an integer, so this divides exactly.
    return num / den;
}

std::vector<Int> fixed_point_shape(unsigned m, unsigned n) {
    std::vector<Int> shape;
    for (const auto& e : multiplicities(m, n).entries)
        if (e.multiplicity > 0) shape.push_back(e.multiplicity);
    return shape;
}

LemmaVerdict check_lemma_with(const DecompositionReport& report, unsigned long p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    // n = 0 is degenerate: 0! = 1 makes the hypotheses vacuously satisfiable
    // while the empty tensor power contributes a single unit multiplicity.
    if (report.n < 1) throw std::invalid_argument("n must be at least 1");
    LemmaVerdict v;
    v.m = report.m;
    v.n = report.n;
    v.p = p;
    v.k = k;
    Int pk = int_pow(Int(p), k);
    v.pk_divides_m = (Int(report.m) % pk == 0);
    v.vp_n_factorial = p_adic_valuation_factorial(report.n, p);
    v.pk_divides_n_factorial = (v.vp_n_factorial >= k);
    v.hypotheses_hold = v.pk_divides_m && !v.pk_divides_n_factorial;
    v.all_divisible = true;
    for (const auto& e : report.entries) {
        if (e.multiplicity % p != 0) {
            v.all_divisible = false;
            v.counterexamples.push_back({e.lambda, e.multiplicity});
        }
    }
    return v;
}

LemmaVerdict check_lemma(unsigned m, unsigned n, unsigned long p, unsigned k) {
    return check_lemma_with(multiplicities(m, n), p, k);
}

SweepSummary lemma_sweep(const SweepConfig& config) {
    for (unsigned long p : config.primes)
        if (!is_prime(p)) throw std::invalid_argument("sweep prime list contains a non-prime");

    // Decompositions depend only on (m, n); compute each once, in parallel.
    std::vector<std::pair<unsigned, unsigned>> mn_pairs;
    for (unsigned m = 1; m <= config.max_m; ++m)
        for (unsigned n = 1; n <= config.max_n; ++n) mn_pairs.emplace_back(m, n);
    std::vector<DecompositionReport> reports(mn_pairs.size());

    unsigned workers = std::max(1u, config.parallelism);
    if (workers > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < mn_pairs.size();
                     i = next.fetch_add(1))
                    reports[i] = multiplicities(mn_pairs[i].first, mn_pairs[i].second);
            });
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < mn_pairs.size(); ++i)
            reports[i] = multiplicities(mn_pairs[i].first, mn_pairs[i].second);
    }

    // Aggregate verdicts in a fixed (m, n, p, k) order independent of the
    // number of workers above.
    SweepSummary summary;
    summary.config = config;
    for (std::size_t i = 0; i < mn_pairs.size(); ++i) {
        for (unsigned long p : config.primes) {
            for (unsigned k = 1; k <= config.max_k; ++k) {
                LemmaVerdict v = check_lemma_with(reports[i], p, k);
                ++summary.tuples_checked;
                if (v.hypotheses_hold) {
                    ++summary.hypotheses_hold_count;
                    if (!v.all_divisible) summary.violations.push_back(std::move(v));
                } else if (v.pk_divides_m && !v.all_divisible &&
                           summary.sharpness_examples.size() < config.max_sharpness_examples) {
                    // Only the n! hypothesis failed, yet divisibility broke:
                    // that hypothesis cannot be dropped.
                    summary.sharpness_examples.push_back(std::move(v));
                }
            }
        }
    }
    return summary;
}

IsotropyReport isotropy_type(std::vector<Rat> coordinates) {
    if (coordinates.empty()) throw std::invalid_argument("at least one coordinate required");
    for (const Rat& t : coordinates)
        if (t < 0 || t > 1) throw std::domain_error("coordinates must lie in [0,1]");
    std::sort(coordinates.begin(), coordinates.end());

    IsotropyReport report;
    report.sorted_coordinates = coordinates;
    for (std::size_t i = 0; i < coordinates.size();) {
        std::size_t j = i;
        while (j < coordinates.size() && coordinates[j] == coordinates[i]) ++j;
        IsotropyValue val;
        val.s = coordinates[i];
        val.multiplicity = static_cast<unsigned>(j - i);
        val.classification =
            coordinates[i] == 0 ? "0-endpoint" : (coordinates[i] == 1 ? "1-endpoint" : "interior");
        report.multiplicities.push_back(val.multiplicity);
        report.values.push_back(std::move(val));
        i = j;
    }

    std::vector<unsigned> sorted_mults = report.multiplicities;
    std::sort(sorted_mults.begin(), sorted_mults.end(), std::greater<>());
    report.multiplicity_partition = Partition(std::move(sorted_mults));

    std::ostringstream group, fiber;
    for (std::size_t j = 0; j < report.values.size(); ++j) {
        const auto& v = report.values[j];
        if (j) {
            group << " × ";
            fiber << " ⊗ ";
        }
        group << "S_" << v.multiplicity;
        if (v.multiplicity == 1)
            fiber << "E_{" << rat_str(v.s) << "}";
        else
            fiber << "(E_{" << rat_str(v.s) << "}^{⊗" << v.multiplicity << "})^{S_"
                  << v.multiplicity << "}";
    }
    report.isotropy_group = group.str();
    report.fiber_descriptor = fiber.str();
    return report;
}

} // namespace permfix
