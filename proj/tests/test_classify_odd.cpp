#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heegaard/classify_odd.hpp"
#include "heegaard/enumeration.hpp"
#include "heegaard/minimal_class.hpp"
#include "heegaard/number_theory.hpp"
#include "heegaard/sampling.hpp"
#include "fixtures.hpp"

#include <random>

using namespace heegaard;

namespace {

PrimaryComponent component(const LinkedGroup& g, long p) {
    const auto parts = primary_decompose(g);
    const PrimaryComponent* c = find_component(parts, p);
    REQUIRE(c);
    return *c;
}

bool searched_isometric(const PrimaryComponent& a, const PrimaryComponent& b) {
    if (a.exponents != b.exponents) return false;
    const SmallLinking sa(a.orders(), a.linking, 1u << 20), sb(b.orders(), b.linking, 1u << 20);
    return search_isometries(sa, sb, [](const Isometry&) { return false; }).found > 0;
}

}  // namespace

TEST_CASE("seifert invariants of diagonal forms") {
    const auto inv = seifert_invariants(component(fixture::diagonal_group({5}, {2}), 5));
    REQUIRE(inv.blocks.size() == 1);
    CHECK(inv.blocks[0].exponent == 1);
    CHECK(inv.blocks[0].multiplicity == 1);
    CHECK(inv.blocks[0].character == -1);

    const auto two_blocks = seifert_invariants(component(fixture::diagonal_group({3, 9, 9}, {1, 2, 4}), 3));
    REQUIRE(two_blocks.blocks.size() == 2);
    CHECK(two_blocks.blocks[0].exponent == 1);
    CHECK(two_blocks.blocks[0].character == 1);
    CHECK(two_blocks.blocks[1].exponent == 2);
    CHECK(two_blocks.blocks[1].multiplicity == 2);
    CHECK(two_blocks.blocks[1].character == legendre_symbol(8, 3));
}

TEST_CASE("odd classification worked cases") {
    const auto c = [](long a, long b) {
        return odd_equivalent(component(fixture::diagonal_group({5}, {a}), 5),
                              component(fixture::diagonal_group({5}, {b}), 5));
    };
    CHECK(c(1, 4));
    CHECK(c(2, 3));
    CHECK_FALSE(c(1, 2));
    // Two nonsquares multiply to a square.
    CHECK(odd_equivalent(component(fixture::diagonal_group({5, 5}, {2, 2}), 5),
                         component(fixture::diagonal_group({5, 5}, {1, 1}), 5)));
    CHECK_FALSE(odd_equivalent(component(fixture::diagonal_group({3}, {1}), 3),
                               component(fixture::diagonal_group({9}, {1}), 3)));
    CHECK_FALSE(odd_equivalent(component(fixture::diagonal_group({3}, {1}), 3),
                               component(fixture::diagonal_group({5}, {1}), 5)));
}

TEST_CASE("characters match exhaustive search on random odd components") {
    std::mt19937_64 rng(3);
    for (long p : {3l, 5l, 7l}) {
        int equal = 0, different = 0;
        for (int n = 0; n < 40; ++n) {
            const PrimaryComponent a = random_primary_component(p, 400, rng, 3);
            PrimaryComponent b = random_primary_component(p, 400, rng, 3);
            if (b.exponents != a.exponents) b = transform_generators(a, random_automorphism(a.orders(), rng));
            // Flip one block character half of the time.
            if (rng() % 2) {
                IntegerMatrix rows = identity(a.rank());
                b = transform_generators(b, rows);
                b.linking(0, 0) = mod_one(b.linking(0, 0) * BigInt(p == 3 ? 2 : (p == 5 ? 2 : 3)));
            }
            bool valid = true;
            try {
                (void)seifert_invariants(b);
                (void)make_linked_group(0, b.orders(), b.linking);
            } catch (const LinkingError&) {
                valid = false;
            }
            if (!valid) continue;
            const bool truth = searched_isometric(a, b);
            CHECK(odd_equivalent(a, b) == truth);
            (truth ? equal : different) += 1;
        }
        CHECK(equal > 0);
        CHECK(different > 0);
    }
}

TEST_CASE("scaling by a square unit preserves the characters") {
    std::mt19937_64 rng(8);
    for (int n = 0; n < 60; ++n) {
        const long p = std::array<long, 4>{3, 5, 7, 11}[n % 4];
        const PrimaryComponent c = random_primary_component(p, 5000, rng);
        const long u = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(p - 1));
        PrimaryComponent scaled = c;
        scaled.linking = c.linking * BigRational(u * u);
        for (Eigen::Index i = 0; i < scaled.rank(); ++i)
            for (Eigen::Index j = 0; j < scaled.rank(); ++j) scaled.linking(i, j) = mod_one(scaled.linking(i, j));
        CHECK(seifert_invariants(scaled) == seifert_invariants(c));
        CHECK(odd_equivalent(scaled, c));
    }
}

TEST_CASE("diagonalization keeps the odd invariants") {
    std::mt19937_64 rng(9);
    for (int n = 0; n < 60; ++n) {
        LinkedGroup g;
        do g = random_linked_group(3000, rng, 0);
        while (g.t() == 0 || mod(g.torsion.back(), 2) == 0);
        const LinkedGroup d = diagonalize_odd(g);
        CHECK(d.torsion == g.torsion);
        for (Eigen::Index i = 0; i < d.t(); ++i)
            for (Eigen::Index j = 0; j < d.t(); ++j)
                if (i != j) CHECK(d.linking(i, j) == 0);
        CHECK(stable_invariants(d).odd == stable_invariants(g).odd);
    }
    CHECK_THROWS(diagonalize_odd(fixture::diagonal_group({2}, {1})));
}
