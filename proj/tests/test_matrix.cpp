#include <catch_amalgamated.hpp>

#include <random>

#include "swlab/matrix.hpp"

using swlab::Matrix;
using swlab::QuadScalar;

namespace {

Matrix<QuadScalar> diag2(const QuadScalar& a, const QuadScalar& b) {
    Matrix<QuadScalar> m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

Matrix<QuadScalar> random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> dist(-3, 3);
    Matrix<QuadScalar> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = QuadScalar(dist(rng));
    return m;
}

}  // namespace

TEST_CASE("kron of identities") {
    auto id2 = Matrix<QuadScalar>::identity(2);
    auto id3 = Matrix<QuadScalar>::identity(3);
    REQUIRE(kron(id2, id3) == Matrix<QuadScalar>::identity(6));
    Matrix<QuadScalar> a(2, 3);
    a(0, 1) = QuadScalar(4);
    a(1, 2) = QuadScalar(-7);
    REQUIRE(kron(a, Matrix<QuadScalar>::identity(1)) == a);
}

TEST_CASE("kron of diagonals multiplies eigenvalues") {
    QuadScalar a1(3, 1, 2, 5), a2(3, -1, 2, 5);
    auto d = diag2(a1, a2);
    auto k = kron(d, d);
    Matrix<QuadScalar> expect(4, 4);
    expect(0, 0) = a1 * a1;
    expect(1, 1) = a1 * a2;
    expect(2, 2) = a2 * a1;
    expect(3, 3) = a2 * a2;
    REQUIRE(k == expect);
}

TEST_CASE("kron cap") {
    Matrix<QuadScalar> big(20000, 1);
    REQUIRE_THROWS_AS(kron(big, big), swlab::cap_exceeded);
}

TEST_CASE("rank basics") {
    REQUIRE(mat_rank(Matrix<QuadScalar>::identity(9)) == 9);
    REQUIRE(mat_rank(Matrix<QuadScalar>(4, 4)) == 0);
    REQUIRE(mat_rank(Matrix<QuadScalar>()) == 0);
}

TEST_CASE("rank equals rank of transpose and is kron-multiplicative") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 12; ++trial) {
        auto a = random_int_matrix(rng, 4, 5);
        auto b = random_int_matrix(rng, 3, 3);
        REQUIRE(mat_rank(a) == mat_rank(a.transpose()));
        REQUIRE(mat_rank(kron(a, b)) == mat_rank(a) * mat_rank(b));
    }
}

TEST_CASE("float rank agrees with exact rank") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 12; ++trial) {
        auto a = random_int_matrix(rng, 5, 4);
        REQUIRE(mat_rank(to_double(a)) == mat_rank(a));
    }
}

TEST_CASE("rank over the quadratic field") {
    // rows proportional over Q(sqrt 5): rank 1
    QuadScalar phi(1, 1, 2, 5);
    Matrix<QuadScalar> m(2, 2);
    m(0, 0) = QuadScalar(1);
    m(0, 1) = phi;
    m(1, 0) = phi;
    m(1, 1) = phi * phi;
    REQUIRE(mat_rank(m) == 1);
}

TEST_CASE("solve with identity and zero matrices") {
    auto id = Matrix<QuadScalar>::identity(3);
    Matrix<QuadScalar> b(3, 1);
    b(0, 0) = QuadScalar(2);
    b(2, 0) = QuadScalar(-5);
    auto sol = linear_solve(id, b);
    REQUIRE(sol.consistent);
    REQUIRE(sol.particular == b);
    REQUIRE(sol.kernel.cols() == 0);

    Matrix<QuadScalar> z(3, 3), zb(3, 1);
    auto sol0 = linear_solve(z, zb);
    REQUIRE(sol0.consistent);
    REQUIRE(sol0.kernel.cols() == 3);  // kernel is the full space
    REQUIRE(sol0.particular.is_zero());
}

TEST_CASE("solve flags inconsistency") {
    Matrix<QuadScalar> a(2, 1), b(2, 1);
    a(0, 0) = QuadScalar(1);
    a(1, 0) = QuadScalar(1);
    b(0, 0) = QuadScalar(1);
    b(1, 0) = QuadScalar(2);
    REQUIRE_FALSE(linear_solve(a, b).consistent);
}

TEST_CASE("solve returns a real solution set") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 8; ++trial) {
        auto a = random_int_matrix(rng, 4, 6);
        auto x = random_int_matrix(rng, 6, 2);
        auto b = a * x;
        auto sol = linear_solve(a, b);
        REQUIRE(sol.consistent);
        REQUIRE((a * sol.particular) == b);
        REQUIRE((a * sol.kernel).is_zero());
        REQUIRE(sol.kernel.cols() == 6 - sol.rank);
    }
}

TEST_CASE("inverse round-trips") {
    Matrix<QuadScalar> m(2, 2);
    m(0, 0) = QuadScalar(1, 1, 2, 5);
    m(0, 1) = QuadScalar(1);
    m(1, 0) = QuadScalar(-2);
    m(1, 1) = QuadScalar(0, 1, 1, 5);
    auto inv = inverse(m);
    REQUIRE((m * inv).is_identity());
    REQUIRE((inv * m).is_identity());
}

TEST_CASE("determinant") {
    Matrix<QuadScalar> m(2, 2);
    m(0, 0) = QuadScalar(3, 1, 2, 5);
    m(0, 1) = QuadScalar(1);
    m(1, 0) = QuadScalar(1);
    m(1, 1) = QuadScalar(3, -1, 2, 5);
    // det = (9-5)/4 - 1 = 0
    REQUIRE(determinant(m).is_zero());
    REQUIRE(mat_rank(m) == 1);
}
