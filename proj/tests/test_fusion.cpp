#include <catch_amalgamated.hpp>

#include "swlab/characters.hpp"
#include "swlab/fusion.hpp"

using swlab::Partition;
using swlab::QuadScalar;

namespace {

std::vector<QuadScalar> family_alpha() {
    return {QuadScalar(3, 1, 2, 5), QuadScalar(3, -1, 2, 5)};
}

/// Independent oracle: c^nu_{lam,mu} as the induction-restriction character
/// inner product over S(|lam|) x S(|mu|).
long lr_by_characters(const Partition& lam, const Partition& mu, const Partition& nu) {
    const int a = lam.weight(), b = mu.weight();
    mpz_class acc = 0;
    for (const auto& ca : swlab::partitions_of(a))
        for (const auto& cb : swlab::partitions_of(b)) {
            std::vector<int> joined;
            for (int x : ca.parts()) joined.push_back(x);
            for (int x : cb.parts()) joined.push_back(x);
            std::sort(joined.rbegin(), joined.rend());
            acc += swlab::class_size(ca) * swlab::class_size(cb) *
                   swlab::character(lam, ca) * swlab::character(mu, cb) *
                   swlab::character(nu, Partition(joined));
        }
    mpz_class fa = 1, fb = 1;
    for (int i = 2; i <= a; ++i) fa *= i;
    for (int i = 2; i <= b; ++i) fb *= i;
    mpz_class q = acc / (fa * fb);
    return static_cast<long>(q.get_si());
}

}  // namespace

TEST_CASE("Pieri case (2) x (1)") {
    auto c = swlab::lr_coeffs(Partition({2}), Partition({1}));
    REQUIRE(c.size() == 2);
    REQUIRE(c.at(Partition({3})) == 1);
    REQUIRE(c.at(Partition({2, 1})) == 1);
}

TEST_CASE("(2) x (2) expands into three components") {
    auto c = swlab::lr_coeffs(Partition({2}), Partition({2}));
    REQUIRE(c.size() == 3);
    REQUIRE(c.at(Partition({4})) == 1);
    REQUIRE(c.at(Partition({3, 1})) == 1);
    REQUIRE(c.at(Partition({2, 2})) == 1);
}

TEST_CASE("(2,1) x (2,1) with a multiplicity two") {
    auto c = swlab::lr_coeffs(Partition({2, 1}), Partition({2, 1}));
    REQUIRE(c.at(Partition({4, 2})) == 1);
    REQUIRE(c.at(Partition({4, 1, 1})) == 1);
    REQUIRE(c.at(Partition({3, 3})) == 1);
    REQUIRE(c.at(Partition({3, 2, 1})) == 2);
    REQUIRE(c.at(Partition({3, 1, 1, 1})) == 1);
    REQUIRE(c.at(Partition({2, 2, 2})) == 1);
    REQUIRE(c.at(Partition({2, 2, 1, 1})) == 1);
    REQUIRE(c.size() == 7);
}

TEST_CASE("LR coefficients match the character inner product oracle") {
    std::vector<std::pair<Partition, Partition>> pairs = {
        {Partition({2, 1}), Partition({2, 1})},
        {Partition({3, 1}), Partition({2})},
        {Partition({2, 2}), Partition({2, 1})},
        {Partition({1, 1}), Partition({1, 1, 1})},
    };
    for (const auto& [lam, mu] : pairs) {
        auto got = swlab::lr_coeffs(lam, mu);
        for (const auto& nu : swlab::partitions_of(lam.weight() + mu.weight())) {
            long expect = lr_by_characters(lam, mu, nu);
            long have = got.count(nu) ? got.at(nu) : 0;
            REQUIRE(have == expect);
        }
    }
}

TEST_CASE("fusion at p = 2: (2) x (2) reduces to (4) + (2) + (0)") {
    auto f = swlab::fuse(Partition({2}), Partition({2}), 2);
    REQUIRE(f.raw.size() == 3);
    REQUIRE(f.reduced.size() == 3);
    REQUIRE(f.reduced.at(Partition({4})) == 1);
    REQUIRE(f.reduced.at(Partition({2})) == 1);
    REQUIRE(f.reduced.at(Partition{}) == 1);
}

TEST_CASE("fusion unit and length guard") {
    // the empty diagram is the unit; a reduced factor passes through
    auto f = swlab::fuse(Partition({3}), Partition{}, 2);
    REQUIRE(f.reduced.size() == 1);
    REQUIRE(f.reduced.at(Partition({3})) == 1);
    // an unreduced factor is identified with its reduction
    auto g = swlab::fuse(Partition({3, 1}), Partition{}, 2);
    REQUIRE(g.reduced.size() == 1);
    REQUIRE(g.reduced.at(Partition({2})) == 1);
    REQUIRE_THROWS_AS(swlab::fuse(Partition({1, 1, 1}), Partition({1}), 2),
                      std::invalid_argument);
}

TEST_CASE("fusion at p = 4 keeps the classical expansion") {
    auto f = swlab::fuse(Partition({2}), Partition({2}), 4);
    REQUIRE(f.reduced.size() == 3);
    REQUIRE(f.reduced.at(Partition({3, 1})) == 1);
}

TEST_CASE("fuse (1) x (1) at p = 2 is Sym plus det") {
    auto f = swlab::fuse(Partition({1}), Partition({1}), 2);
    REQUIRE(f.reduced.at(Partition({2})) == 1);
    REQUIRE(f.reduced.at(Partition{}) == 1);
    REQUIRE(f.reduced.size() == 2);
}

TEST_CASE("fusion commutes and is associative on small triples") {
    auto parts3 = swlab::partitions_of(3);
    std::vector<Partition> small;
    for (int m = 1; m <= 3; ++m)
        for (const auto& lam : swlab::partitions_of(m))
            if (lam.length() <= 2) small.push_back(lam);
    auto mult = [](const std::map<Partition, long>& a, const Partition& mu, int p) {
        std::map<Partition, long> out;
        for (const auto& [lam, c] : a)
            for (const auto& [nu, d] : swlab::fuse(lam, mu, p).reduced) out[nu] += c * d;
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    };
    for (const auto& a : small)
        for (const auto& b : small) {
            REQUIRE(swlab::fuse(a, b, 2).reduced == swlab::fuse(b, a, 2).reduced);
            for (const auto& c : small) {
                auto left = mult(swlab::fuse(a, b, 2).reduced, c, 2);
                std::map<Partition, long> right;
                for (const auto& [nu, d] : swlab::fuse(b, c, 2).reduced)
                    for (const auto& [rho, e] : swlab::fuse(a, nu, 2).reduced)
                        right[rho] += d * e;
                std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
                REQUIRE(left == right);
            }
        }
}

TEST_CASE("dimension identity 8 * 8 = 55 + 8 + 1 and 3 * 3 = 8 + 1") {
    auto alpha = family_alpha();
    auto d22 = swlab::dim_check(Partition({2}), Partition({2}), 2, alpha);
    REQUIRE(d22.consistent);
    REQUIRE(d22.lhs == QuadScalar(64));
    auto d11 = swlab::dim_check(Partition({1}), Partition({1}), 2, alpha);
    REQUIRE(d11.consistent);
    REQUIRE(d11.lhs == QuadScalar(9));
    REQUIRE(d11.rhs == QuadScalar(9));
}

TEST_CASE("dim_check holds for all pairs up to weight four at p = 2") {
    auto alpha = family_alpha();
    std::vector<Partition> shapes;
    for (int m = 1; m <= 4; ++m)
        for (const auto& lam : swlab::partitions_of(m))
            if (lam.length() <= 2) shapes.push_back(lam);
    for (const auto& a : shapes)
        for (const auto& b : shapes) {
            REQUIRE(swlab::dim_check(a, b, 2, alpha).consistent);
            REQUIRE(swlab::dropped_terms_vanish(a, b, 2, alpha));
        }
}

TEST_CASE("glued quartic dim_check in float with 1e-9 tolerance") {
    std::vector<double> alpha{1.0, 1.0, (3 + std::sqrt(5.0)) / 2, (3 - std::sqrt(5.0)) / 2};
    auto d = swlab::dim_check(Partition({2}), Partition({2}), 4, alpha);
    REQUIRE(d.consistent);
    // and a couple of heavier pairs
    REQUIRE(swlab::dim_check(Partition({2, 1}), Partition({2, 1}), 4, alpha).consistent);
    REQUIRE(swlab::dim_check(Partition({3, 1}), Partition({2, 2}), 4, alpha).consistent);
}
