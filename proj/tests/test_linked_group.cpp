#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heegaard/sampling.hpp"
#include "heegaard/stable.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>

using namespace heegaard;

namespace {

// Same torsion, one generator rescaled by a random unit: isometric or not.
LinkedGroup rescaled_partner(const LinkedGroup& g, std::mt19937_64& rng) {
    IntegerMatrix rows = identity(g.t());
    const Eigen::Index i = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(g.t()));
    const BigInt& order = g.torsion[static_cast<std::size_t>(i)];
    BigInt u;
    do u = BigInt(static_cast<unsigned long>(rng() % 1000)) % order; while (gcd(u, order) != 1);
    rows(i, i) = u;
    // Relinking y_i by u alone is not an automorphism unless u is a unit;
    // rebuild the form directly so the result may be non-isometric.
    RationalMatrix lam = g.linking;
    lam(i, i) = mod_one(lam(i, i) * u);
    try {
        return make_linked_group(g.free_rank, g.torsion, lam);
    } catch (const LinkingError&) {
        return transform_generators(g, rows);
    }
}

}  // namespace

TEST_CASE("linked group validation") {
    CHECK_NOTHROW(fixture::diagonal_group({5}, {2}));
    CHECK_THROWS_AS(fixture::diagonal_group({5}, {0}), LinkingError);
    CHECK_THROWS_AS(fixture::group({2, 4}, {{1, 1}, {0, 1}}, 4), LinkingError);  // not symmetric
    CHECK_THROWS_AS(fixture::group({2, 4}, {{1, 1}, {1, 1}}, 4), LinkingError);  // 2 * (1/4) not integral
    CHECK_THROWS_AS(fixture::group({4, 2}, {{1, 0}, {0, 1}}, 4), LinkingError);  // order not divisible
    const LinkedGroup g = fixture::group({8, 8}, {{8, 1}, {1, 0}}, 8);
    CHECK(g.linking(0, 0) == 0);
    CHECK(g.order() == 64);
    CHECK(evaluate(g, IntegerVector::Constant(2, 1), IntegerVector::Constant(2, 1)) == make_rational(1, 4));
}

TEST_CASE("lagrangian quotient of worked matrices") {
    SUBCASE("lens space") {
        const LinkedGroup g = quotient_with_linking(pair_from_matrix(lens_matrix(5, 2)));
        CHECK(g.torsion == std::vector<BigInt>{5});
        CHECK(g.free_rank == 0);
        CHECK(oracle::naive_isometric(g, fixture::diagonal_group({5}, {2})));
        const LinkedGroup n = linking_from_normal_form(partial_normal_form(lens_matrix(5, 2)));
        CHECK(n.linking(0, 0) == make_rational(2, 5));
    }
    SUBCASE("U and V") {
        const LinkedGroup u = linking_from_normal_form(partial_normal_form(fixture::matrix_U()));
        const LinkedGroup v = linking_from_normal_form(partial_normal_form(fixture::matrix_V()));
        CHECK(u.torsion == std::vector<BigInt>{8, 8});
        CHECK(oracle::naive_isometric(u, fixture::group({8, 8}, {{0, 1}, {1, 0}}, 8)));
        CHECK(oracle::naive_isometric(v, fixture::group({8, 8}, {{0, 3}, {3, 0}}, 8)));
        CHECK(oracle::naive_isometric(u, quotient_with_linking(pair_from_matrix(fixture::matrix_U()))));
    }
    SUBCASE("identity has free quotient") {
        const LinkedGroup g = quotient_with_linking(pair_from_matrix(SymplecticMatrix(identity(6))));
        CHECK(g.free_rank == 3);
        CHECK(g.t() == 0);
    }
    SUBCASE("invalid pairs are rejected") {
        HeegaardPair bad{1, from_rows({{2}, {0}})};
        CHECK_THROWS(validate_pair(bad));
    }
}

TEST_CASE("normal form linking agrees with the lagrangian quotient") {
    std::mt19937_64 rng(4242);
    for (int n = 0; n < 60; ++n) {
        const SymplecticMatrix h = random_symplectic(1 + n % 3, 300, rng);
        const LinkedGroup a = linking_from_normal_form(partial_normal_form(h));
        const LinkedGroup b = quotient_with_linking(pair_from_matrix(h));
        CHECK(a.free_rank == b.free_rank);
        CHECK(a.torsion == b.torsion);
        CHECK(oracle::naive_isometric(a, b));
    }
}

TEST_CASE("primary decomposition of Z6") {
    const LinkedGroup g = fixture::diagonal_group({6}, {1});
    const auto parts = primary_decompose(g);
    REQUIRE(parts.size() == 2);
    const PrimaryComponent* two = find_component(parts, 2);
    const PrimaryComponent* three = find_component(parts, 3);
    REQUIRE(two);
    REQUIRE(three);
    CHECK(two->exponents == std::vector<unsigned long>{1});
    CHECK(two->linking(0, 0) == make_rational(1, 2));
    CHECK(three->linking(0, 0) == make_rational(2, 3));
    CHECK(find_component(parts, 5) == nullptr);
    CHECK(oracle::naive_isometric(reassemble(parts), g));
}

TEST_CASE("reassembling primary parts gives an isometric group") {
    std::mt19937_64 rng(77);
    for (int n = 0; n < 60; ++n) {
        const LinkedGroup g = random_linked_group(400, rng);
        const LinkedGroup r = reassemble(primary_decompose(g), g.free_rank);
        CHECK(r.torsion == g.torsion);
        CHECK(stable_equivalence(g, r).equivalent);
        CHECK(oracle::naive_isometric(g, r));
        for (const auto& c : primary_decompose(g)) {
            CHECK(std::is_sorted(c.exponents.begin(), c.exponents.end()));
            CHECK(c.order() * (g.order() / c.order()) == g.order());
            CHECK(gcd(c.order(), g.order() / c.order()) == 1);
        }
    }
}

TEST_CASE("stable equivalence worked cases") {
    CHECK(stable_equivalence(fixture::matrix_U(), fixture::matrix_V()).equivalent);
    CHECK_FALSE(stable_equivalence(lens_matrix(5, 1), lens_matrix(5, 2)).equivalent);
    CHECK(stable_equivalence(lens_matrix(5, 1), lens_matrix(5, 4)).equivalent);
    CHECK(stable_equivalence(lens_matrix(7, 2), lens_matrix(7, 1)).equivalent);
    const StableVerdict v = stable_equivalence(fixture::diagonal_group({3}, {1}), fixture::diagonal_group({5}, {1}));
    CHECK_FALSE(v.equivalent);
    CHECK_FALSE(v.reason.empty());
    CHECK(stable_equivalence(SymplecticMatrix(identity(2)), SymplecticMatrix(standard_J(1))).equivalent == false);
}

TEST_CASE("stable equivalence matches exhaustive isometry search") {
    std::mt19937_64 rng(1729);
    int equal = 0, different = 0;
    for (int n = 0; n < 150; ++n) {
        const LinkedGroup g = random_linked_group(150, rng, 0);
        if (g.t() == 0) continue;
        const LinkedGroup h = rescaled_partner(g, rng);
        const bool naive = oracle::naive_isometric(g, h);
        CHECK(stable_equivalence(g, h).equivalent == naive);
        (naive ? equal : different) += 1;
    }
    CHECK(equal > 10);
    CHECK(different > 10);
}

TEST_CASE("invariants are unchanged by generator changes") {
    std::mt19937_64 rng(99);
    for (int n = 0; n < 80; ++n) {
        const LinkedGroup g = random_linked_group(5000, rng);
        const LinkedGroup h = transform_generators(g, random_automorphism(g.torsion, rng));
        CHECK(stable_equivalence(g, h).equivalent);
    }
}

TEST_CASE("invariants are unchanged by handlebody moves") {
    std::mt19937_64 rng(100);
    for (int n = 0; n < 40; ++n) {
        const Eigen::Index genus = 1 + n % 3;
        const SymplecticMatrix h = random_symplectic(genus, 2000, rng);
        const SymplecticMatrix moved(random_handlebody_element(genus, rng) * h.matrix() *
                                     random_handlebody_element(genus, rng));
        CHECK(stable_equivalence(h, moved).equivalent);
    }
}
