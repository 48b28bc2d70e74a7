#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heegaard/classify_two.hpp"
#include "heegaard/enumeration.hpp"
#include "heegaard/sampling.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>

using namespace heegaard;
using fixture::d_form;
using fixture::hyperbolic;
using fixture::inf;
using fixture::Phase;
using fixture::phase_pattern;
using fixture::unary;

namespace {

using Cyc = CyclotomicElement;

Cyc i_unit() { return Cyc::root_of_unity(1, 2); }

void check_witness(const PrimaryComponent& c, const WallDecomposition& w) {
    Eigen::Index n = 0;
    for (const auto& f : w.summands) n += f.rank();
    REQUIRE(n == c.rank());
    REQUIRE(w.witness.rows() == c.rank());
    REQUIRE(w.witness.cols() == c.rank());
    // Witness is invertible over Z_2, so its columns generate.
    CHECK(mod(determinant(w.witness), 2) == 1);
    const RationalMatrix img = to_rational(w.witness).transpose() * c.linking * to_rational(w.witness);
    Eigen::Index at = 0;
    for (const auto& f : w.summands) {
        const RationalMatrix m = f.matrix();
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                const bool inside = i >= at && i < at + f.rank() && j >= at && j < at + f.rank();
                if (i >= at && i < at + f.rank())
                    CHECK(mod_one(img(i, j)) == (inside ? mod_one(m(i - at, j - at)) : BigRational(0)));
            }
        // Column orders: the image vector has order exactly 2^j.
        for (Eigen::Index k = at; k < at + f.rank(); ++k) {
            BigInt order = 1;
            for (Eigen::Index i = 0; i < c.rank(); ++i) {
                const BigInt ci = pow(BigInt(2), c.exponents[static_cast<std::size_t>(i)]);
                const BigInt x = mod(w.witness(i, k), ci);
                if (x != 0) order = std::max(order, BigInt(ci / gcd(x, ci)));
            }
            CHECK(order == pow(BigInt(2), f.j));
        }
        at += f.rank();
    }
}

Phase entries(const PrimaryComponent& c) { return phase_vector(c).entries; }

}  // namespace

TEST_CASE("burger counts on cyclic groups") {
    const auto z2 = burger_counts(fixture::two_component({unary(1, 1)}));
    CHECK(z2.at(BigRational(0)) == 1);
    CHECK(z2.at(make_rational(1, 2)) == 1);
    const auto z4 = burger_counts(fixture::two_component({unary(1, 2)}));
    CHECK(z4.size() == 2);
    CHECK(z4.at(BigRational(0)) == 2);
    CHECK(z4.at(make_rational(1, 4)) == 2);
}

TEST_CASE("gauss sum base cases") {
    CHECK(gauss_sum_bruteforce(fixture::two_component({unary(1, 1)}), 0).is_zero());
    CHECK(gauss_sum_bruteforce(fixture::two_component({unary(1, 2)}), 0) ==
          Cyc::integer(2, 2) * (Cyc::integer(2, 1) + i_unit()));
    CHECK(gauss_sum_bruteforce(fixture::two_component({unary(1, 3)}), 0) == Cyc::integer(3, 4) * Cyc::rho(1, 3));
    CHECK(gauss_sum_closed_form({unary(1, 1)}, 0).is_zero());
    CHECK(gauss_sum_closed_form({unary(1, 2)}, 0) == Cyc::integer(2, 2) * (Cyc::integer(2, 1) + i_unit()));
    CHECK(gauss_sum_closed_form({unary(1, 3)}, 0) == Cyc::integer(3, 4) * Cyc::rho(1, 3));
}

TEST_CASE("closed forms of the binary pieces") {
    CHECK(gauss_sum_closed_form({d_form(2)}, 0) == Cyc::integer(3, -8));
    CHECK(gauss_sum_closed_form({hyperbolic(2)}, 0) == Cyc::integer(3, 8));
    CHECK(gauss_sum_bruteforce(fixture::two_component({d_form(2)}), 0) == Cyc::integer(3, -8));
    for (unsigned long j = 1; j <= 5; ++j)
        for (const auto& f : {unary(1, j), unary(3, j), unary(5, j), unary(7, j), hyperbolic(j), d_form(j)})
            for (unsigned long k = 0; k < j + 2; ++k)
                CHECK(gauss_sum_closed_form({f}, k) == gauss_sum_bruteforce(fixture::two_component({f}), k));
}

TEST_CASE("gauss sums from counts equal direct enumeration") {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 40; ++n) {
        const PrimaryComponent c = random_primary_component(2, 512, rng);
        const auto counts = burger_counts(c);
        BigInt total = 0;
        for (const auto& [a, m] : counts) total += m;
        CHECK(total == c.order());
        for (unsigned long k = 0; k <= c.exponents.back(); ++k)
            CHECK(gauss_sum_from_counts(counts, k) == gauss_sum_bruteforce(c, k));
    }
}

TEST_CASE("gauss sums agree with floating point evaluation") {
    std::mt19937_64 rng(2);
    for (int n = 0; n < 30; ++n) {
        const PrimaryComponent c = random_primary_component(2, 256, rng);
        for (unsigned long k = 0; k < c.exponents.back(); ++k) {
            const auto exact = oracle::evaluate(gauss_sum_bruteforce(c, k));
            const auto numeric = oracle::numeric_gauss(c.orders(), c.linking, k);
            CHECK(std::abs(exact - numeric) < 1e-6);
        }
    }
}

TEST_CASE("closed form equals enumeration on random components") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 60; ++n) {
        const PrimaryComponent c = random_primary_component(2, 1024, rng);
        const WallDecomposition w = wall_decompose(c);
        for (unsigned long k = 0; k < c.exponents.back(); ++k)
            CHECK(gauss_sum_closed_form(w.summands, k) == gauss_sum_bruteforce(c, k));
    }
}

TEST_CASE("gauss sum magnitudes follow the radical") {
    // |Gamma_k|^2 = |T| |rad| when 2^k lambda(x, x) vanishes on
    // rad = {x : 2^(k+1) x = 0}, and Gamma_k = 0 otherwise.
    std::mt19937_64 rng(4);
    for (int n = 0; n < 30; ++n) {
        const PrimaryComponent c = random_primary_component(2, 256, rng);
        for (unsigned long k = 0; k < c.exponents.back(); ++k) {
            const BigInt scale = pow(BigInt(2), k);
            std::size_t rad = 0;
            bool vanishes = true;
            for (const auto& x : oracle::elements(c.orders())) {
                bool in_rad = true;
                for (Eigen::Index i = 0; i < x.size(); ++i)
                    in_rad = in_rad && mod(2 * scale * x(i), c.orders()[static_cast<std::size_t>(i)]) == 0;
                if (!in_rad) continue;
                ++rad;
                if (mod_one(oracle::link(c.linking, x, x) * scale) != 0) vanishes = false;
            }
            const Cyc gamma = gauss_sum_bruteforce(c, k);
            if (!vanishes) {
                CHECK(gamma.is_zero());
                continue;
            }
            const double expected = c.order().get_d() * static_cast<double>(rad);
            CHECK(std::abs(std::norm(oracle::evaluate(gamma)) - expected) < 1e-6 * expected);
        }
    }
}

TEST_CASE("wall decomposition of worked forms") {
    SUBCASE("already basic") {
        const PrimaryComponent c = fixture::two_component({unary(3, 2), hyperbolic(3)});
        const WallDecomposition w = wall_decompose(c);
        check_witness(c, w);
        CHECK(w.summands.size() == 2);
    }
    SUBCASE("odd self-linking forces unary summands") {
        const PrimaryComponent c = fixture::two_component({unary(1, 3), unary(1, 3)});
        const WallDecomposition w = wall_decompose(c);
        check_witness(c, w);
        REQUIRE(w.summands.size() == 2);
        for (const auto& f : w.summands) CHECK(f.kind == BasicForm::Kind::Unary);
    }
    SUBCASE("D form survives") {
        const PrimaryComponent c = fixture::two_component({d_form(3)});
        const WallDecomposition w = wall_decompose(c);
        check_witness(c, w);
        REQUIRE(w.summands.size() == 1);
        CHECK(w.summands[0].kind == BasicForm::Kind::BinaryD);
        CHECK(w.summands[0].to_string() == "D/2^3");
    }
    SUBCASE("names") {
        CHECK(unary(3, 2).to_string() == "U(3/2^2)");
        CHECK(hyperbolic(1).to_string() == "C/2^1");
    }
}

TEST_CASE("wall witnesses are valid on random components") {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 120; ++n) {
        const PrimaryComponent c = random_primary_component(2, 1u << 14, rng, 5);
        const WallDecomposition w = wall_decompose(c);
        check_witness(c, w);
        CHECK(phase_vector(w.summands, c.exponents.back()) == phase_vector(c));
    }
}

TEST_CASE("phase vectors of the matched pairs") {
    for (unsigned long n = 2; n <= 6; ++n) {
        const Phase expected = phase_pattern({0, inf}, {1}, n);
        const PrimaryComponent a = fixture::two_component({unary(1, n - 1), hyperbolic(n)});
        const PrimaryComponent b = fixture::two_component({unary(-3, n - 1), d_form(n)});
        CHECK(entries(a) == expected);
        CHECK(entries(b) == expected);
        CHECK(phase_vector_from_gauss(a).entries == expected);
        CHECK(phase_vector_from_gauss(b).entries == expected);
        CHECK(two_equivalent(a, b));
    }
}

TEST_CASE("phase vectors of the unary pairs and triples") {
    for (unsigned long n = 3; n <= 6; ++n) {
        const PrimaryComponent a = fixture::two_component({unary(1, n), unary(3, n - 1)});
        const PrimaryComponent b = fixture::two_component({unary(3, n), unary(1, n - 1)});
        CHECK(entries(a) == phase_pattern({inf, inf}, {0, 4}, n));
        CHECK(entries(b) == phase_pattern({inf, inf}, {4, 0}, n));
        CHECK(phase_vector_from_gauss(a) == phase_vector(a));
        CHECK(phase_vector_from_gauss(b) == phase_vector(b));
        CHECK_FALSE(two_equivalent(a, b));

        const PrimaryComponent x = fixture::two_component({unary(1, n), unary(3, n - 1), unary(5, n - 2)});
        const PrimaryComponent y = fixture::two_component({unary(3, n), unary(5, n - 1), unary(1, n - 2)});
        const PrimaryComponent z = fixture::two_component({unary(5, n), unary(1, n - 1), unary(3, n - 2)});
        CHECK(entries(x) == phase_pattern({inf, inf, inf}, {5}, n));
        CHECK(entries(y) == phase_pattern({inf, inf, inf}, {5}, n));
        CHECK(entries(z) == phase_pattern({inf, inf, inf}, {1}, n));
        CHECK(two_equivalent(x, y));
        // With only three levels every block is odd and the phases coincide.
        CHECK(two_equivalent(x, z) == (n == 3));
    }
}

TEST_CASE("all odd blocks give an infinite phase vector") {
    const PrimaryComponent c = fixture::two_component({unary(1, 1), unary(3, 2), unary(5, 3)});
    CHECK(entries(c) == Phase{inf, inf, inf});
}

TEST_CASE("C and D are told apart above the first level") {
    CHECK(two_equivalent(fixture::two_component({hyperbolic(1)}), fixture::two_component({d_form(1)})));
    for (unsigned long j = 2; j <= 5; ++j) {
        CHECK_FALSE(two_equivalent(fixture::two_component({hyperbolic(j)}), fixture::two_component({d_form(j)})));
        CHECK(two_equivalent(fixture::two_component({hyperbolic(j), hyperbolic(j)}),
                             fixture::two_component({d_form(j), d_form(j)})));
    }
    CHECK(two_equivalent(fixture::two_component({unary(1, 3), unary(1, 3)}),
                         fixture::two_component({unary(5, 3), unary(5, 3)})));
}

TEST_CASE("2-primary classification matches exhaustive isometry search") {
    std::mt19937_64 rng(6);
    int equal = 0, different = 0;
    for (int n = 0; n < 150; ++n) {
        const PrimaryComponent a = random_primary_component(2, 256, rng, 3);
        PrimaryComponent b = random_primary_component(2, 256, rng, 3);
        if (b.exponents != a.exponents) {
            b = transform_generators(a, random_automorphism(a.orders(), rng));
            if (rng() % 2) {
                const Eigen::Index i = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(b.rank()));
                b.linking(i, i) = mod_one(b.linking(i, i) * BigInt(std::array<long, 3>{3, 5, 7}[rng() % 3]));
            }
        }
        try {
            (void)make_linked_group(0, b.orders(), b.linking);
        } catch (const LinkingError&) {
            continue;
        }
        const SmallLinking sa(a.orders(), a.linking, 1u << 20), sb(b.orders(), b.linking, 1u << 20);
        const bool truth = search_isometries(sa, sb, [](const Isometry&) { return false; }).found > 0;
        CHECK(two_equivalent(a, b) == truth);
        (truth ? equal : different) += 1;
    }
    CHECK(equal > 10);
    CHECK(different > 10);
}

TEST_CASE("phase_of rejects malformed sums") {
    CHECK(phase_of(Cyc::integer(3, 0)) == std::nullopt);
    CHECK(phase_of(Cyc::integer(3, 4)) == 0);
    CHECK(phase_of(Cyc::integer(3, -8)) == 4);
    CHECK_THROWS(phase_of(Cyc::integer(3, 3)));
}
