#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permfix/partition.hpp"
#include "permfix/rational.hpp"
#include "permfix/schur_weyl.hpp"

#include <stdexcept>

using namespace permfix;

TEST_CASE("permutation character values") {
    // Classes of S_4 in canonical order: (4), (3,1), (2,2), (2,1,1), (1^4).
    auto v = permutation_character_values(3, 4);
    REQUIRE(v.size() == 5);
    CHECK(v[0] == 3);
    CHECK(v[1] == 9);
    CHECK(v[2] == 9);
    CHECK(v[3] == 27);
    CHECK(v[4] == 81);
}

TEST_CASE("block sizes of small fixed-point algebras") {
    DecompositionReport r22 = multiplicities(2, 2);
    REQUIRE(r22.entries.size() == 2);
    CHECK(r22.entries[0].multiplicity == 3);
    CHECK(r22.entries[1].multiplicity == 1);
    CHECK(r22.commutant_dim == 10);
    CHECK(fixed_point_shape(2, 2) == std::vector<Int>{3, 1});

    DecompositionReport r23 = multiplicities(2, 3);
    CHECK(r23.entries[0].multiplicity == 4); // (3)
    CHECK(r23.entries[1].multiplicity == 2); // (2,1)
    CHECK(r23.entries[2].multiplicity == 0); // (1,1,1): more rows than m
    CHECK(r23.commutant_dim == 20);
    CHECK(fixed_point_shape(2, 3) == std::vector<Int>{4, 2});

    DecompositionReport r43 = multiplicities(4, 3);
    CHECK(r43.entries[0].multiplicity == 20);
    CHECK(r43.entries[1].multiplicity == 20);
    CHECK(r43.entries[2].multiplicity == 4);
    CHECK(r43.commutant_dim == 816);
}

TEST_CASE("hook content formula as an independent multiplicity oracle") {
    // 20 semistandard tableaux of shape (2,1) with entries <= 4.
    CHECK(multiplicity_hook_content(Partition({2, 1}), 4) == 20);
    CHECK(multiplicity_hook_content(Partition({3}), 2) == 4);
    CHECK(multiplicity_hook_content(Partition({1, 1, 1}), 2) == 0);

    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 1; n <= 5; ++n) {
            DecompositionReport r = multiplicities(m, n);
            CHECK(r.total_dim_check == int_pow(Int(m), n));
            Int commutant = 0;
            for (const auto& e : r.entries) {
                CHECK(e.multiplicity == multiplicity_hook_content(e.lambda, m));
                CHECK(e.dim == irrep_dimension(e.lambda));
                commutant += e.multiplicity * e.multiplicity;
            }
            CHECK(r.commutant_dim == commutant);
        }
}

TEST_CASE("parameter caps") {
    CHECK_THROWS_AS(multiplicities(65, 2), std::domain_error);
    CHECK_THROWS_AS(multiplicities(2, 13), std::domain_error);
}

TEST_CASE("divisibility verdicts") {
    // 4 = 2^2 divides m, but 2^2 does not divide 3! = 6.
    LemmaVerdict good = check_lemma(4, 3, 2, 2);
    CHECK(good.pk_divides_m);
    CHECK_FALSE(good.pk_divides_n_factorial);
    CHECK(good.hypotheses_hold);
    CHECK(good.all_divisible);
    CHECK(good.counterexamples.empty());
    CHECK_FALSE(good.violated());

    // Sharpness: 2 | m and 2 | 2!, and indeed a multiplicity escapes 2.
    LemmaVerdict sharp = check_lemma(2, 2, 2, 1);
    CHECK(sharp.pk_divides_m);
    CHECK(sharp.pk_divides_n_factorial);
    CHECK_FALSE(sharp.hypotheses_hold);
    CHECK_FALSE(sharp.all_divisible);
    REQUIRE_FALSE(sharp.counterexamples.empty());
    CHECK(sharp.counterexamples[0].lambda == Partition({2}));
    CHECK(sharp.counterexamples[0].multiplicity == 3);
    CHECK_FALSE(sharp.violated());

    LemmaVerdict odd = check_lemma(2, 2, 3, 1);
    CHECK_FALSE(odd.pk_divides_m);
    CHECK_FALSE(odd.hypotheses_hold);

    CHECK(check_lemma(9, 2, 3, 2).hypotheses_hold);
    CHECK(check_lemma(9, 2, 3, 2).all_divisible);

    CHECK_THROWS_AS(check_lemma(4, 3, 4, 1), std::invalid_argument); // non-prime p
    CHECK_THROWS_AS(check_lemma(4, 3, 2, 0), std::invalid_argument); // k = 0
    CHECK_THROWS_AS(check_lemma(4, 0, 2, 2), std::invalid_argument); // degenerate n
}

TEST_CASE("sweep finds no violations and is deterministic under parallelism") {
    SweepConfig cfg;
    cfg.max_m = 4;
    cfg.max_n = 4;
    cfg.max_k = 2;
    cfg.primes = {2, 3};
    cfg.parallelism = 1;
    SweepSummary serial = lemma_sweep(cfg);
    CHECK(serial.tuples_checked == 4 * 4 * 2 * 2);
    CHECK(serial.all_pass());
    CHECK(serial.violations.empty());
    CHECK(serial.hypotheses_hold_count > 0);

    cfg.parallelism = 3;
    SweepSummary parallel = lemma_sweep(cfg);
    CHECK(parallel.tuples_checked == serial.tuples_checked);
    CHECK(parallel.hypotheses_hold_count == serial.hypotheses_hold_count);
    REQUIRE(parallel.sharpness_examples.size() == serial.sharpness_examples.size());
    for (std::size_t i = 0; i < serial.sharpness_examples.size(); ++i) {
        CHECK(parallel.sharpness_examples[i].m == serial.sharpness_examples[i].m);
        CHECK(parallel.sharpness_examples[i].n == serial.sharpness_examples[i].n);
        CHECK(parallel.sharpness_examples[i].p == serial.sharpness_examples[i].p);
        CHECK(parallel.sharpness_examples[i].k == serial.sharpness_examples[i].k);
    }
}

TEST_CASE("sweep records sharpness examples where only the factorial hypothesis fails") {
    SweepConfig cfg;
    cfg.max_m = 2;
    cfg.max_n = 2;
    cfg.max_k = 1;
    cfg.primes = {2};
    SweepSummary s = lemma_sweep(cfg);
    REQUIRE_FALSE(s.sharpness_examples.empty());
    const LemmaVerdict& v = s.sharpness_examples[0];
    CHECK(v.m == 2);
    CHECK(v.n == 2);
    CHECK(v.p == 2);
    CHECK(v.pk_divides_m);
    CHECK(v.pk_divides_n_factorial);
    REQUIRE_FALSE(v.counterexamples.empty());
    CHECK(v.counterexamples[0].lambda == Partition({2}));
    CHECK(v.counterexamples[0].multiplicity == 3);
}

TEST_CASE("isotropy type of simplex points") {
    IsotropyReport r = isotropy_type({Rat(0), Rat(0), Rat(1)});
    CHECK(r.isotropy_group == "S_2 × S_1");
    CHECK(r.multiplicity_partition == Partition({2, 1}));
    CHECK(r.fiber_descriptor == "(E_{0}^{⊗2})^{S_2} ⊗ E_{1}");
    REQUIRE(r.values.size() == 2);
    CHECK(r.values[0].classification == "0-endpoint");
    CHECK(r.values[1].classification == "1-endpoint");

    IsotropyReport mid = isotropy_type({Rat(1, 2)});
    CHECK(mid.isotropy_group == "S_1");
    CHECK(mid.fiber_descriptor == "E_{1/2}");
    CHECK(mid.values[0].classification == "interior");

    IsotropyReport all_equal = isotropy_type({Rat(1, 3), Rat(1, 3), Rat(1, 3)});
    CHECK(all_equal.isotropy_group == "S_3");
    CHECK(all_equal.fiber_descriptor == "(E_{1/3}^{⊗3})^{S_3}");

    IsotropyReport unsorted = isotropy_type({Rat(1), Rat(0), Rat(1, 2)});
    CHECK(unsorted.sorted_coordinates == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
    CHECK(unsorted.isotropy_group == "S_1 × S_1 × S_1");

    CHECK_THROWS_AS(isotropy_type({Rat(2)}), std::domain_error);
    CHECK_THROWS_AS(isotropy_type({Rat(-1, 2)}), std::domain_error);
    CHECK_THROWS_AS(isotropy_type({}), std::invalid_argument);
}
