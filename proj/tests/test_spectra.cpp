#include <catch_amalgamated.hpp>

#include "swlab/spectra.hpp"

using swlab::Partition;
using swlab::QuadScalar;

TEST_CASE("hyperboloid table for n = 3") {
    auto t = swlab::hyperboloid_spectrum(3, 3);
    REQUIRE(t.rows.size() == 4);
    long expect_eig[] = {0, 4, 12, 24};
    long expect_mult[] = {1, 8, 55, 377};
    for (int l = 0; l <= 3; ++l) {
        REQUIRE(t.rows[l].eigenvalue == QuadScalar(expect_eig[l]));
        REQUIRE(t.rows[l].multiplicity == expect_mult[l]);
    }
    REQUIRE_THROWS_AS(swlab::hyperboloid_spectrum(2, 3), std::invalid_argument);
}

TEST_CASE("recurrence agrees with the exact alpha-power formula") {
    for (int n : {3, 4, 5}) {
        auto t = swlab::hyperboloid_spectrum(n, 12);
        for (long l = 0; l <= 12; ++l)
            REQUIRE(t.rows[l].multiplicity == swlab::hyperboloid_mult_formula(n, l));
    }
}

TEST_CASE("n = 4 first multiplicity is n^2 - 1") {
    auto t = swlab::hyperboloid_spectrum(4, 1);
    REQUIRE(t.rows[1].eigenvalue == QuadScalar(4));
    REQUIRE(t.rows[1].multiplicity == 15);
}

TEST_CASE("multiplicities match h_{2l} and brute-force schur dimensions") {
    auto t = swlab::hyperboloid_spectrum(3, 4);
    auto h = swlab::h_from_e(
        std::vector<QuadScalar>{QuadScalar(1), QuadScalar(3), QuadScalar(1)}, 8);
    for (long l = 0; l <= 4; ++l)
        REQUIRE(QuadScalar(t.rows[l].multiplicity, 0, 1, 0) == h[2 * l]);

    auto [u, v] = swlab::skew_diagonal_n3(QuadScalar(1), QuadScalar(1), true);
    auto s = swlab::build_rank2(u, v);
    for (long l = 0; l <= 2; ++l) {
        std::vector<int> parts;
        if (l > 0) parts.push_back(static_cast<int>(2 * l));
        REQUIRE(t.rows[l].multiplicity == swlab::schur_dim(s, Partition(parts)));
    }
}

TEST_CASE("eigenvalues come from the traceless Casimir formula") {
    for (long l = 0; l <= 20; ++l) {
        std::vector<int> parts;
        if (l > 0) parts.push_back(static_cast<int>(2 * l));
        REQUIRE(swlab::casimir_sl_eigenvalue(Partition(parts), 2) ==
                QuadScalar(2 * l * l + 2 * l));
    }
}

TEST_CASE("counting function") {
    auto t = swlab::hyperboloid_spectrum(3, 3);
    REQUIRE(swlab::count_eigenvalues(t, QuadScalar(4)) == 9);
    REQUIRE(swlab::count_eigenvalues(t, QuadScalar(12)) == 64);
    REQUIRE(swlab::count_eigenvalues(t, QuadScalar(24)) == 441);
    REQUIRE(swlab::count_eigenvalues(t, QuadScalar::rational(39, 10)) == 1);
    REQUIRE(swlab::count_eigenvalues(t, QuadScalar(0)) == 1);
    REQUIRE_THROWS_AS(swlab::count_eigenvalues(t, QuadScalar(25)), std::invalid_argument);
    // right-continuous, nondecreasing, jumps exactly m_l at lambda_l
    for (long l = 1; l <= 3; ++l) {
        auto at = swlab::count_eigenvalues(t, t.rows[l].eigenvalue);
        auto just_below =
            swlab::count_eigenvalues(t, t.rows[l].eigenvalue - QuadScalar::rational(1, 100));
        REQUIRE(at - just_below == t.rows[l].multiplicity);
    }
}

TEST_CASE("cpn orbit spectrum at p = 2 coincides with the hyperboloid") {
    std::vector<QuadScalar> alpha{QuadScalar(3, 1, 2, 5), QuadScalar(3, -1, 2, 5)};
    auto orbit = swlab::orbit_spectrum_cpn(2, alpha, 8);
    auto hyp = swlab::hyperboloid_spectrum(3, 8);
    for (long l = 0; l <= 8; ++l) {
        REQUIRE(orbit.rows[l].eigenvalue == hyp.rows[l].eigenvalue);
        REQUIRE(orbit.rows[l].multiplicity == hyp.rows[l].multiplicity);
    }
}

TEST_CASE("cpn orbit at p = 4 with the glued quartic roots") {
    std::vector<double> alpha{1.0, 1.0, (3 + std::sqrt(5.0)) / 2, (3 - std::sqrt(5.0)) / 2};
    auto orbit = swlab::orbit_spectrum_cpn(4, alpha, 3);
    REQUIRE(orbit.rows[0].eigenvalue.is_zero());
    REQUIRE(orbit.rows[0].multiplicity == 1);
    // k = 1: lambda = (2,1,1), m = 4, gamma = -2, eigenvalue 16 - 4 - 4 = 8
    REQUIRE(orbit.rows[1].eigenvalue == QuadScalar(8));
    REQUIRE(swlab::cpn_diagram(4, 1) == Partition({2, 1, 1}));
    REQUIRE(swlab::gamma_eigenvalue(Partition({2, 1, 1})) == QuadScalar(-2));
    // multiplicity = s_{(2,1,1)}(alpha), integral
    REQUIRE(orbit.rows[1].multiplicity > 0);
    // eigenvalues strictly increase
    for (std::size_t i = 1; i < orbit.rows.size(); ++i)
        REQUIRE(swlab::rational_cmp(orbit.rows[i].eigenvalue, orbit.rows[i - 1].eigenvalue) > 0);
}

TEST_CASE("weyl fit at L = 40") {
    auto t = swlab::hyperboloid_spectrum(3, 40);
    auto rep = swlab::weyl_fit(t);
    REQUIRE(rep.r_at_stable);
    REQUIRE(rep.r_below_stable);
    REQUIRE(rep.ratio == Catch::Approx(rep.ratio_expected).epsilon(0.01));
    REQUIRE(rep.ratio_expected == Catch::Approx((7 + 3 * std::sqrt(5.0)) / 2));
    REQUIRE(rep.log_fit_rel_err < 0.01);
    REQUIRE(rep.poly_exponent_diverges);
    // successive r_at differences shrink for l >= 10
    for (std::size_t i = 11; i + 1 < rep.r_at_log.size(); ++i) {
        double d1 = std::abs(rep.r_at_log[i] - rep.r_at_log[i - 1]);
        double d2 = std::abs(rep.r_at_log[i + 1] - rep.r_at_log[i]);
        REQUIRE(d2 <= d1 + 1e-12);
    }
}

TEST_CASE("weyl fit guards") {
    REQUIRE_THROWS_AS(swlab::weyl_fit(swlab::hyperboloid_spectrum(3, 5)),
                      std::invalid_argument);
}
