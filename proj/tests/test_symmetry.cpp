#include <catch_amalgamated.hpp>

#include <random>

#include "swlab/symmetry.hpp"

using swlab::Matrix;
using swlab::Permutation;
using swlab::QuadScalar;
using swlab::Symmetry;

namespace {

/// u = eps/2, v = eps: the classical antisymmetric pair on n = 2.
std::pair<Matrix<QuadScalar>, Matrix<QuadScalar>> classical_pair() {
    Matrix<QuadScalar> u(2, 2), v(2, 2);
    QuadScalar half = QuadScalar::rational(1, 2);
    u(0, 1) = half;
    u(1, 0) = -half;
    v(0, 1) = QuadScalar(1);
    v(1, 0) = QuadScalar(-1);
    return {u, v};
}

Symmetry<QuadScalar> family_n3(bool plus = true) {
    auto [u, v] = swlab::skew_diagonal_n3(QuadScalar(1), QuadScalar(1), plus);
    return swlab::build_rank2(u, v);
}

}  // namespace

TEST_CASE("classical pair gives the flip") {
    auto [u, v] = classical_pair();
    auto s = swlab::build_rank2(u, v);
    REQUIRE(s.matrix() == swlab::flip_matrix<QuadScalar>(2));
}

TEST_CASE("family formulas at a = b = 1") {
    auto [u, v] = swlab::skew_diagonal_n3(QuadScalar(1), QuadScalar(1), true);
    // u_31 = -2/(3+sqrt5) = -(3-sqrt5)/2
    REQUIRE(u(2, 0) == QuadScalar(-3, 1, 2, 5));
    // u.v = x/2 - 1/2 + 1/(2x) = 1 given x + 1/x = 3
    QuadScalar dot;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dot += u(i, j) * v(i, j);
    REQUIRE(dot.is_one());
}

TEST_CASE("both branches construct valid symmetries") {
    for (bool plus : {true, false}) {
        auto s = family_n3(plus);
        REQUIRE(s.report().all_ok());
        REQUIRE(s.dim() == 3);
    }
}

TEST_CASE("contraction constraint violation is rejected with the equation name") {
    auto [u, v] = classical_pair();
    try {
        swlab::build_rank2(u * QuadScalar(2), v);  // u.v = 2
        FAIL("expected constraint_violation");
    } catch (const swlab::constraint_violation& e) {
        REQUIRE(e.equation.find("u.v") == 0);
    }
}

TEST_CASE("flip and family pass verify; a non-YB involution fails qybe only") {
    for (int n : {2, 3, 4}) {
        auto rep = swlab::verify_matrix(n, swlab::flip_matrix<QuadScalar>(n));
        REQUIRE(rep.all_ok());
    }
    REQUIRE(swlab::verify_matrix(3, family_n3().matrix()).all_ok());

    // S = Id - 2 u v with u.v = 1 but u v u^t v^t far from Id/4:
    // an involution that is not a Yang-Baxter solution.
    Matrix<QuadScalar> s = Matrix<QuadScalar>::identity(4);
    s(0, 0) = QuadScalar(-1);
    auto rep = swlab::verify_matrix(2, s);
    REQUIRE(rep.involutive);
    REQUIRE_FALSE(rep.qybe);
    REQUIRE_THROWS_AS(Symmetry<QuadScalar>(2, s), swlab::verification_failure);
}

TEST_CASE("verify works in float mode with residuals") {
    auto sd = to_double(family_n3().matrix());
    auto rep = swlab::verify_matrix(3, sd, 1e-9);
    REQUIRE(rep.all_ok());
    REQUIRE(rep.qybe_residual < 1e-12);
}

TEST_CASE("rho of identity and of a transposition") {
    auto s = family_n3();
    REQUIRE(s.rho(2, Permutation(2)) == Matrix<QuadScalar>::identity(9));
    REQUIRE(s.rho(2, Permutation::transposition(2, 1, 2)) == s.matrix());
}

TEST_CASE("rho is well defined across factorizations of a 3-cycle") {
    auto s = family_n3();
    // (1 2 3) = s1 s2 (apply s2 first) = s2 s1 conjugated; compare two words.
    Permutation c3({2, 3, 1});
    auto direct = s.rho(3, c3);

    auto via_word = Matrix<QuadScalar>::identity(27);
    auto s12 = kron(s.matrix(), Matrix<QuadScalar>::identity(3));
    auto s23 = kron(Matrix<QuadScalar>::identity(3), s.matrix());
    // c3 = s1 o s2, so rho = S^{12} S^{23}
    via_word = s12 * s23;
    REQUIRE(direct == via_word);

    // redundant longer word: s2 s1 s1 s2 s1 s2 ... use involutivity-heavy word
    auto longer = s23 * s12 * s12 * s12 * s23 * s23;  // = s23 s12 s23 ... reduces to rho(c3)?
    // s23*s12*s12*s12*s23*s23 = s23*s12: that's rho(s2 o s1) = rho((1 3 2)) instead;
    // check it matches the inverse cycle.
    REQUIRE(longer == s.rho(3, c3.inverse()));
}

TEST_CASE("rho is a homomorphism on S(4) and S(5)") {
    auto s = family_n3();
    std::mt19937 rng(99);
    for (int m : {4, 5}) {
        auto perms = swlab::all_permutations(m);
        std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
        for (int trial = 0; trial < 5; ++trial) {
            const auto& a = perms[pick(rng)];
            const auto& b = perms[pick(rng)];
            REQUIRE(s.rho(m, a * b) == s.rho(m, a) * s.rho(m, b));
        }
    }
}

TEST_CASE("site operators act on sparse vectors consistently with dense rho") {
    auto s = family_n3();
    Permutation pi({3, 1, 2});
    auto dense = s.rho(3, pi);
    for (std::int64_t j = 0; j < 27; ++j) {
        auto col = s.ops().apply_perm(3, pi, swlab::sv_basis<QuadScalar>(j));
        for (auto& [i, x] : col) REQUIRE(dense(i, j) == x);
        std::size_t nnz = 0;
        for (std::int64_t i = 0; i < 27; ++i)
            if (!dense(i, j).is_zero()) ++nnz;
        REQUIRE(nnz == col.size());
    }
}

TEST_CASE("group sum over S(3) matches the naive sum") {
    auto s = family_n3();
    for (bool minus : {false, true}) {
        for (std::int64_t j : {0L, 7L, 13L, 26L}) {
            auto fast = s.ops().apply_group_sum(3, 3, minus, swlab::sv_basis<QuadScalar>(j));
            swlab::SparseVec<QuadScalar> naive;
            for (const auto& pi : swlab::all_permutations(3)) {
                QuadScalar c(minus ? pi.sign() : 1);
                sv_axpy(naive, c, s.ops().apply_perm(3, pi, swlab::sv_basis<QuadScalar>(j)));
            }
            REQUIRE(fast == naive);
        }
    }
}

TEST_CASE("glue of two flips on n = 1 is the flip on n = 2") {
    auto s1 = swlab::classical_flip<QuadScalar>(1);
    auto g = swlab::glue(s1, s1);
    REQUIRE(g.matrix() == swlab::flip_matrix<QuadScalar>(2));
}

TEST_CASE("glue restricts to its blocks and to the flip") {
    auto s1 = swlab::classical_flip<QuadScalar>(2);
    auto s2 = family_n3();
    auto g = swlab::glue(s1, s2);
    REQUIRE(g.dim() == 5);
    REQUIRE(g.report().all_ok());
    const int n = 5, n1 = 2;
    // V1 (x) V1 block
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (int k = 0; k < n1; ++k)
                for (int l = 0; l < n1; ++l)
                    REQUIRE(g.matrix()(i * n + j, k * n + l) == s1.matrix()(i * 2 + j, k * 2 + l));
    // V2 (x) V2 block
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    REQUIRE(g.matrix()((n1 + i) * n + (n1 + j), (n1 + k) * n + (n1 + l)) ==
                            s2.matrix()(i * 3 + j, k * 3 + l));
    // mixed block: flip
    REQUIRE(g.matrix()((n1 + 0) * n + 0, 0 * n + (n1 + 0)) == QuadScalar(1));
    REQUIRE(g.matrix()(0 * n + (n1 + 1), (n1 + 1) * n + 0) == QuadScalar(1));
}

TEST_CASE("super symmetry is a symmetry for b = 0 and b = 1") {
    for (long b : {0L, 1L}) {
        auto s = swlab::super_symmetry<QuadScalar>(QuadScalar(b));
        REQUIRE(s.report().all_ok());
    }
}

TEST_CASE("block swap braid on the flip is the block permutation") {
    auto s = swlab::classical_flip<QuadScalar>(2);
    auto pi = swlab::block_swap_perm(2, 1);
    REQUIRE(pi.images() == std::vector<int>{2, 3, 1});
    // on x_a (x) x_b (x) x_c the lift sends it to x_c (x) x_a (x) x_b
    auto v = s.ops().apply_perm(3, pi, swlab::sv_basis<QuadScalar>(0 * 4 + 1 * 2 + 1));
    REQUIRE(v.size() == 1);
    REQUIRE(v[0].first == 1 * 4 + 0 * 2 + 1);
}
