#include <catch_amalgamated.hpp>

#include "swlab/characters.hpp"
#include "swlab/group_algebra.hpp"

using swlab::character;
using swlab::Partition;
using swlab::Permutation;
using swlab::QuadScalar;

TEST_CASE("trivial and sign characters") {
    for (const auto& mu : swlab::partitions_of(6)) {
        REQUIRE(character(Partition({6}), mu) == 1);
        int sign = ((6 - static_cast<int>(mu.length())) % 2) ? -1 : 1;
        REQUIRE(character(Partition({1, 1, 1, 1, 1, 1}), mu) == sign);
    }
}

TEST_CASE("known character values") {
    REQUIRE(character(Partition({3, 1}), Partition({2, 1, 1})) == 1);
    REQUIRE(character(Partition({1, 1}), Partition({2})) == -1);
    REQUIRE(character(Partition({2, 2}), Partition({2, 2})) == 2);
    REQUIRE(character(Partition({2, 2}), Partition({3, 1})) == -1);
    REQUIRE(character(Partition({2, 1}), Partition({3})) == -1);
    REQUIRE(character(Partition({3, 1}), Partition({4})) == -1);
    // identity class gives the dimension
    for (const auto& lam : swlab::partitions_of(5))
        REQUIRE(character(lam, Partition({1, 1, 1, 1, 1})) == swlab::hook_dim(lam));
}

TEST_CASE("first orthogonality relation on S(5)") {
    auto parts = swlab::partitions_of(5);
    for (const auto& lam : parts)
        for (const auto& nu : parts) {
            mpz_class acc = 0;
            for (const auto& mu : parts)
                acc += swlab::class_size(mu) * character(lam, mu) * character(nu, mu);
            REQUIRE(acc == (lam == nu ? 120 : 0));
        }
}

TEST_CASE("class sizes sum to the group order") {
    mpz_class acc = 0;
    for (const auto& mu : swlab::partitions_of(7)) acc += swlab::class_size(mu);
    REQUIRE(acc == 5040);
}

TEST_CASE("gamma matches both routes for all shapes up to weight 8") {
    // gamma_eigenvalue internally hard-errors if the character formula and
    // the content sum disagree, so evaluating it is the test.
    for (int m = 2; m <= 8; ++m)
        for (const auto& lam : swlab::partitions_of(m)) {
            QuadScalar g = swlab::gamma_eigenvalue(lam);
            REQUIRE(g == QuadScalar(static_cast<long>(lam.content_sum())));
        }
    REQUIRE(swlab::gamma_eigenvalue(Partition({4})) == QuadScalar(6));
    REQUIRE(swlab::gamma_eigenvalue(Partition({1, 1, 1, 1})) == QuadScalar(-6));
    REQUIRE(swlab::gamma_eigenvalue(Partition({3, 1})) == QuadScalar(2));
}

TEST_CASE("young symmetrizers for weight 2") {
    auto p2 = swlab::young_symmetrizer(Partition({2}));
    auto p11 = swlab::young_symmetrizer(Partition({1, 1}));
    swlab::GroupAlgebraElement e2(2), e11(2);
    e2.add(Permutation(2), QuadScalar(1));
    e2.add(Permutation::transposition(2, 1, 2), QuadScalar(1));
    e11.add(Permutation(2), QuadScalar(1));
    e11.add(Permutation::transposition(2, 1, 2), QuadScalar(-1));
    REQUIRE(p2 == e2);
    REQUIRE(p11 == e11);
}

TEST_CASE("young symmetrizer for (2,1) uses the column filling") {
    // columns filled first: 1,2 in column one, 3 in column two;
    // p = (e - s12)(e + s13)
    auto p = swlab::young_symmetrizer(Partition({2, 1}));
    swlab::GroupAlgebraElement expect(3);
    Permutation s12 = Permutation::transposition(3, 1, 2);
    Permutation s13 = Permutation::transposition(3, 1, 3);
    expect.add(Permutation(3), QuadScalar(1));
    expect.add(s13, QuadScalar(1));
    expect.add(s12, QuadScalar(-1));
    expect.add(s12 * s13, QuadScalar(-1));
    REQUIRE(p == expect);
}

TEST_CASE("quasi-idempotence p^2 = (m!/dim) p for weights up to 5") {
    for (int m = 1; m <= 5; ++m) {
        mpz_class fact = 1;
        for (int i = 2; i <= m; ++i) fact *= i;
        for (const auto& lam : swlab::partitions_of(m)) {
            auto p = swlab::young_symmetrizer(lam);
            QuadScalar kappa = QuadScalar::rational(fact, swlab::hook_dim(lam));
            REQUIRE((p * p) == (kappa * p));
        }
    }
}

TEST_CASE("central idempotents are idempotent and orthogonal on S(3)") {
    auto z3 = swlab::central_idempotent(Partition({3}));
    auto z21 = swlab::central_idempotent(Partition({2, 1}));
    auto z111 = swlab::central_idempotent(Partition({1, 1, 1}));
    REQUIRE((z3 * z3) == z3);
    REQUIRE((z21 * z21) == z21);
    REQUIRE((z3 * z21).terms().empty());
    auto sum = z3 + z21 + z111;
    REQUIRE(sum == swlab::GroupAlgebraElement::unit(3));
}
