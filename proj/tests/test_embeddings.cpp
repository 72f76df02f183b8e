#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permfix/block_algebra.hpp"
#include "permfix/embeddings.hpp"
#include "permfix/frobenius.hpp"
#include "permfix/tensor_rep.hpp"

#include <stdexcept>

using namespace permfix;

TEST_CASE("cyclic construction with one factor is the identity map") {
    auto units = exact_unit_images(2, 1, 2);
    REQUIRE(units.size() == 4);
    for (unsigned a = 0; a < 2; ++a)
        for (unsigned b = 0; b < 2; ++b) {
            SparseExactMatrix expected(2);
            expected.set(a, b, Rat(1));
            CHECK(units[a * 2 + b] == expected);
        }
}

TEST_CASE("cyclic construction yields balanced partial permutation images") {
    auto units = exact_unit_images(3, 2, 3);
    REQUIRE(units.size() == 9);
    for (unsigned a = 0; a < 3; ++a)
        for (unsigned b = 0; b < 3; ++b) {
            const auto& img = units[a * 3 + b];
            CHECK(img.dim() == 9);
            CHECK(img.nnz() == 3); // each class has dimension 9 / 3
            for (const auto& [key, val] : img.entries()) {
                CHECK(val == 1);
                if (a == b) CHECK(key.first == key.second);
            }
        }
}

TEST_CASE("cyclic construction satisfies the matrix unit relations exactly") {
    struct Case {
        unsigned m, n;
        unsigned long p;
    };
    for (Case c : {Case{3, 2, 3}, Case{4, 1, 2}, Case{8, 3, 2}, Case{9, 2, 3}}) {
        auto units = exact_unit_images(c.m, c.n, c.p);
        std::size_t dim = units[0].dim();
        auto idx = [&](unsigned long a, unsigned long b) { return a * c.p + b; };

        SparseExactMatrix diag_sum(dim);
        for (unsigned long a = 0; a < c.p; ++a) diag_sum = diag_sum + units[idx(a, a)];
        CHECK(diag_sum == SparseExactMatrix::identity(dim));

        for (unsigned long a = 0; a < c.p; ++a)
            for (unsigned long b = 0; b < c.p; ++b) {
                CHECK(units[idx(a, b)].transpose() == units[idx(b, a)]);
                for (unsigned long e = 0; e < c.p; ++e)
                    for (unsigned long f = 0; f < c.p; ++f) {
                        auto prod = units[idx(a, b)] * units[idx(e, f)];
                        if (b == e)
                            CHECK(prod == units[idx(a, f)]);
                        else
                            CHECK(prod.is_zero());
                    }
            }

        for (const Perm& g : coxeter_generators(c.n)) {
            auto u = build_permutation_operator(g, c.m);
            for (const auto& img : units) CHECK(commutator(u, img).is_zero());
        }
    }
}

TEST_CASE("cyclic construction rejects parameters where the hypotheses fail") {
    CHECK_THROWS_AS(exact_unit_images(2, 2, 2), std::invalid_argument); // v_2(m) = v_2(n!)
    CHECK_THROWS_AS(exact_unit_images(3, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(exact_unit_images(5, 2, 4), std::invalid_argument); // p not prime
    CHECK_THROWS_AS(exact_unit_images(4, 0, 2), std::invalid_argument); // degenerate n
    CHECK_THROWS_AS(exact_unit_images(7, 2, 2), std::invalid_argument); // p does not divide m
}

TEST_CASE("exact embedding certificates verify to zero residuals") {
    for (auto [m, n, p] : {std::tuple<unsigned, unsigned, unsigned long>{3, 2, 3},
                           {4, 2, 2},
                           {9, 2, 3}}) {
        EmbedOptions opts;
        opts.mode = EmbedMode::Exact;
        EmbeddingCertificate cert = construct_Mp_embedding(m, n, p, opts);
        CHECK(cert.kind == CertKind::MatrixEmbedding);
        CHECK(cert.report.unital.exact_zero());
        CHECK(cert.report.multiplicative.exact_zero());
        CHECK(cert.report.star.exact_zero());
        REQUIRE(cert.report.equivariance.has_value());
        CHECK(cert.report.equivariance->exact_zero());
        CHECK(cert.report.images_nonzero);
        CHECK(cert.report.valid(EmbedMode::Exact));
    }
}

TEST_CASE("numeric pipeline produces certificates within tolerance") {
    for (auto [m, n, p] : {std::tuple<unsigned, unsigned, unsigned long>{3, 2, 3}, {4, 2, 2}}) {
        EmbeddingCertificate cert = construct_Mp_embedding(m, n, p);
        CHECK(cert.mode == EmbedMode::Numeric);
        // Unitality is repaired exactly in rational arithmetic.
        CHECK(cert.report.unital.exact_zero());
        // Group averaging makes equivariance exact at these sizes.
        REQUIRE(cert.report.equivariance.has_value());
        CHECK(cert.report.equivariance->exact_zero());
        CHECK(cert.report.multiplicative.within(1e-9));
        CHECK(cert.report.star.within(1e-9));
        CHECK(cert.report.valid(EmbedMode::Numeric));
    }
}

TEST_CASE("numeric pipeline is deterministic for a fixed seed") {
    EmbedOptions opts;
    opts.seed = 17;
    EmbeddingCertificate a = construct_Mp_embedding(3, 2, 3, opts);
    EmbeddingCertificate b = construct_Mp_embedding(3, 2, 3, opts);
    REQUIRE(a.images.size() == b.images.size());
    for (std::size_t i = 0; i < a.images.size(); ++i) CHECK(a.images[i] == b.images[i]);
    CHECK(a.seed == b.seed);
}

TEST_CASE("verification catches a tampered certificate") {
    EmbedOptions opts;
    opts.mode = EmbedMode::Exact;
    EmbeddingCertificate cert = construct_Mp_embedding(3, 2, 3, opts);
    REQUIRE(cert.report.valid(EmbedMode::Exact));

    cert.images[1].add(0, 0, Rat(1, 1000000));
    VerificationReport tampered = verify_certificate(cert);
    CHECK_FALSE(tampered.multiplicative.exact_zero());
    CHECK_FALSE(tampered.valid(EmbedMode::Exact));
    // Even at the loose numeric tolerance the defect is visible.
    CHECK_FALSE(tampered.multiplicative.within(1e-9));
}

TEST_CASE("residual comparison is exact at the tolerance boundary") {
    Rat tsq = Rat(1e-9) * Rat(1e-9);
    Residual at{tsq};
    CHECK(at.within(1e-9));
    Residual above{tsq * Rat(1000001, 1000000)};
    CHECK_FALSE(above.within(1e-9));
    Residual zero{};
    CHECK(zero.exact_zero());
    CHECK(zero.within(0.0));
}

TEST_CASE("sum unit enumeration is summand-major row-major") {
    auto units = sum_units(2, 3);
    REQUIRE(units.size() == 13);
    CHECK(units[0].summand == 0);
    CHECK(units[3].row == 1);
    CHECK(units[3].col == 1);
    CHECK(units[4].summand == 1);
    CHECK(units[4].row == 0);
    CHECK(units[12].row == 2);
    CHECK(units[12].col == 2);
}

TEST_CASE("block-diagonal sum embedding lays out repeated copies") {
    FrobeniusWitness w = represent_as_ap_bq(2, 3, 7); // 7 = 2*2 + 1*3
    REQUIRE(w.representable());
    CHECK(*w.a == 2);
    CHECK(*w.b == 1);
    EmbeddingCertificate cert = embed_sum_into_matrix(2, 3, 7, w);

    // p-unit (0,1) appears once per copy of the 2-block.
    SparseExactMatrix expected(7);
    expected.set(0, 1, Rat(1));
    expected.set(2, 3, Rat(1));
    CHECK(cert.images[1] == expected);
    // q-unit (0,2) lives in the single 3-block after the 2-blocks.
    SparseExactMatrix expected_q(7);
    expected_q.set(4, 6, Rat(1));
    CHECK(cert.images[4 + 2] == expected_q);

    CHECK(cert.report.unital.exact_zero());
    CHECK(cert.report.multiplicative.exact_zero());
    CHECK(cert.report.star.exact_zero());
    CHECK_FALSE(cert.report.equivariance.has_value());
    CHECK(cert.report.valid(EmbedMode::Exact));
}

TEST_CASE("sum embedding validates its witness") {
    FrobeniusWitness wrong_k = represent_as_ap_bq(3, 5, 11);
    CHECK_THROWS_AS(embed_sum_into_matrix(3, 5, 8, wrong_k), std::invalid_argument);
    FrobeniusWitness absent = represent_as_ap_bq(3, 5, 15);
    CHECK_THROWS_AS(embed_sum_into_matrix(3, 5, 15, absent), std::invalid_argument);
}

TEST_CASE("summand homomorphisms are fixed, unital and multiplicative in each summand") {
    unsigned long p = 3, q = 5;
    unsigned n = 2;
    FixedSummandAlgebra alg = FixedSummandAlgebra::create(3, 5, n);
    auto units = sum_units(p, q);
    std::vector<std::vector<SparseExactMatrix>> phi(n + 1);
    for (unsigned k = 0; k <= n; ++k) phi[k] = construct_phi_k(p, q, n, k);

    for (std::size_t u = 0; u < units.size(); ++u) {
        FixedSummandElement elem;
        for (unsigned k = 0; k <= n; ++k) elem.components.push_back(phi[k][u]);
        CHECK(is_h_fixed(alg, elem));
    }

    for (unsigned k = 0; k <= n; ++k) {
        std::size_t dim = alg.shapes[k].total();
        SparseExactMatrix diag(dim);
        for (const SumUnit& u : units) {
            std::size_t i = u.summand == 0 ? u.row * p + u.col : p * p + u.row * q + u.col;
            if (u.row == u.col) diag = diag + phi[k][i];
        }
        CHECK(diag == SparseExactMatrix::identity(dim));

        for (std::size_t i = 0; i < units.size(); ++i)
            for (std::size_t j = 0; j < units.size(); ++j) {
                auto prod = phi[k][i] * phi[k][j];
                const SumUnit &x = units[i], &y = units[j];
                if (x.summand == y.summand && x.col == y.row) {
                    std::size_t target = x.summand == 0 ? x.row * p + y.col
                                                        : p * p + x.row * q + y.col;
                    CHECK(prod == phi[k][target]);
                } else {
                    CHECK(prod.is_zero());
                }
            }
    }
}

TEST_CASE("summand homomorphisms require primes exceeding the word length") {
    CHECK_THROWS_AS(construct_phi_k(2, 5, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(construct_phi_k(3, 5, 2, 3), std::invalid_argument); // k > n
    CHECK_THROWS_AS(construct_phi_k(3, 9, 2, 0), std::invalid_argument); // q not prime
    CHECK_THROWS_AS(construct_phi_k(3, 3, 2, 0), std::invalid_argument); // p = q
}

TEST_CASE("transport into the block algebra is well defined") {
    // If g and h both carry the sorted vector w to v, their relabelings agree
    // on everything fixed by the stabilizer of w.
    unsigned p = 2, q = 3, n = 3;
    auto group = symmetric_group(n);
    for (const BitVector& v : all_bit_vectors(n)) {
        auto [k, w] = canonical_sorted_vector(v);
        TensorShape shape_w = block_shape(w, p, q);
        auto fixed_basis = fixed_algebra_basis(shape_w, product_group(n, k));
        std::vector<Perm> carriers;
        for (const Perm& g : group)
            if (permute_bits(g, w) == v) carriers.push_back(g);
        REQUIRE_FALSE(carriers.empty());
        for (std::size_t i = 1; i < carriers.size(); ++i)
            for (const auto& x : fixed_basis)
                CHECK(beta_action(carriers[0], x, shape_w) ==
                      beta_action(carriers[i], x, shape_w));
    }
}

TEST_CASE("block certificate is exact with trivial kernel") {
    EmbeddingCertificate cert = construct_block_embedding(3, 5, 2);
    CHECK(cert.kind == CertKind::BlockEmbedding);
    CHECK(cert.block_images.size() == 34);
    CHECK(cert.report.unital.exact_zero());
    CHECK(cert.report.multiplicative.exact_zero());
    CHECK(cert.report.star.exact_zero());
    REQUIRE(cert.report.equivariance.has_value());
    CHECK(cert.report.equivariance->exact_zero());
    REQUIRE(cert.report.rank.has_value());
    CHECK(*cert.report.rank == 34);
    CHECK(*cert.report.expected_rank == 34);
    CHECK(cert.report.images_nonzero);
    CHECK(cert.report.valid(EmbedMode::Exact));

    EmbeddingCertificate tiny = construct_block_embedding(3, 5, 1);
    CHECK(tiny.report.valid(EmbedMode::Exact));
    CHECK(*tiny.report.rank == 34);
}

TEST_CASE("psi carries the identity to the identity") {
    BlockAlgebraDescriptor desc = BlockAlgebraDescriptor::create(2, 3, 2);
    FixedSummandAlgebra alg = FixedSummandAlgebra::create(2, 3, 2);
    FixedSummandElement one;
    for (unsigned k = 0; k <= 2; ++k)
        one.components.push_back(SparseExactMatrix::identity(alg.shapes[k].total()));
    CHECK(block_equal(construct_psi(desc, one), block_identity(desc)));
}
