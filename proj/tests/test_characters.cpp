#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permfix/character.hpp"
#include "permfix/partition.hpp"

#include <array>
#include <stdexcept>

using namespace permfix;

namespace {

// Independent oracle for the two-dimensional irreducible of S_3: the action
// on {x in Z^3 : x1 + x2 + x3 = 0} in the basis (e1 - e2, e2 - e3). The
// character is the trace, computed from explicit integer matrices rather
// than any recursion.
using M2 = std::array<std::array<long, 2>, 2>;

M2 mul(const M2& a, const M2& b) {
    M2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

long tr(const M2& a) { return a[0][0] + a[1][1]; }

} // namespace

TEST_CASE("two-dimensional character of S_3 against an explicit representation") {
    const M2 id{{{1, 0}, {0, 1}}};
    const M2 s1{{{-1, 1}, {0, 1}}}; // swap of the first two letters
    const M2 s2{{{1, 0}, {1, -1}}}; // swap of the last two letters
    // Sanity of the oracle itself: generator relations of S_3.
    CHECK(mul(s1, s1) == id);
    CHECK(mul(s2, s2) == id);
    const M2 rot = mul(s1, s2); // a 3-cycle
    CHECK(mul(rot, mul(rot, rot)) == id);

    Partition lambda({2, 1});
    CHECK(mn_character(lambda, Partition({1, 1, 1})) == tr(id));
    CHECK(mn_character(lambda, Partition({2, 1})) == tr(s1));
    CHECK(mn_character(lambda, Partition({3})) == tr(rot));
    CHECK(tr(rot) == -1);
}

TEST_CASE("full character table of S_4 against the classical table") {
    CharacterTable t(4);
    REQUIRE(t.size() == 5);
    // Rows and columns in canonical order (4), (3,1), (2,2), (2,1,1), (1^4).
    const long expected[5][5] = {
        {1, 1, 1, 1, 1},    // trivial
        {-1, 0, -1, 1, 3},  // standard
        {0, -1, 2, 0, 2},   // two-dimensional
        {1, 0, -1, -1, 3},  // standard (x) sign
        {-1, 1, 1, -1, 1},  // sign
    };
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) CHECK(t.value(r, c) == expected[r][c]);
}

TEST_CASE("character on a full cycle obeys the hook rule") {
    // chi_lambda((n)) is (-1)^k when lambda is the hook (n-k, 1^k), else 0.
    unsigned n = 6;
    Partition full({n});
    for (const auto& lambda : enumerate_partitions(n)) {
        Int v = mn_character(lambda, full);
        bool is_hook = lambda.length() == 1 || lambda.part(1) == 1;
        if (!is_hook) {
            CHECK(v == 0);
        } else {
            unsigned k = lambda.length() - 1;
            CHECK(v == (k % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("identity column gives the hook length dimension") {
    for (unsigned n = 1; n <= 8; ++n) {
        CharacterTable t(n);
        std::size_t identity_col = t.size() - 1; // (1^n) is last in canonical order
        for (std::size_t r = 0; r < t.size(); ++r)
            CHECK(t.value(r, identity_col) == irrep_dimension(t.labels()[r]));
    }
}

TEST_CASE("exact row orthogonality") {
    for (unsigned n = 1; n <= 8; ++n) {
        CharacterTable t(n);
        CHECK(t.orthogonality_holds());
    }
    CharacterTable t5(5);
    CHECK(t5.inner_product(0, 0) == factorial(5));
    CHECK(t5.inner_product(0, 3) == 0);
    CHECK(t5.inner_product(2, 4) == 0);
}

TEST_CASE("table bookkeeping") {
    CharacterTable t(3);
    CHECK(t.labels() == enumerate_partitions(3));
    CHECK(t.class_size(0) == 2); // (3)
    CHECK(t.class_size(1) == 3); // (2,1)
    CHECK(t.class_size(2) == 1); // identity
    CHECK_THROWS_AS(CharacterTable(13), std::domain_error);
    CHECK_THROWS_AS(mn_character(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("class function inner products are exact rationals") {
    CharacterTable t(3);
    // f = values of a non-character class function.
    std::vector<Int> f{1, 0, 0};
    // <chi_trivial, f> = (1/6) * (2*1*1) = 1/3.
    CHECK(class_function_inner_product(t, 0, f) == Rat(1, 3));
}
