#include "heegaard/selftest.hpp"

#include "heegaard/enumeration.hpp"
#include "heegaard/minimal_class.hpp"
#include "heegaard/sampling.hpp"
#include "heegaard/smith.hpp"

#include <functional>
#include <random>
#include <string>

namespace heegaard {

using Index = Eigen::Index;

namespace {

bool check_snf(std::mt19937_64& rng) {
    std::uniform_int_distribution<Index> dim(1, 6);
    std::uniform_int_distribution<long> entry(-50, 50);
    const Index r = dim(rng), c = dim(rng);
    IntegerMatrix m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = entry(rng);
    const SmithForm s = smith_normal_form(m);
    if (s.U * m * s.V != s.D) return false;
    if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1) return false;
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i)
        if (s.diag[i + 1] != 0 && (s.diag[i] == 0 || mod(s.diag[i + 1], s.diag[i]) != 0)) return false;
    return true;
}

bool check_gauss(std::uint64_t max_size, std::mt19937_64& rng) {
    const PrimaryComponent c = random_primary_component(2, max_size, rng);
    const auto forms = wall_decompose(c).summands;
    for (unsigned long k = 0; k < c.exponents.back(); ++k)
        if (gauss_sum_closed_form(forms, k) != gauss_sum_bruteforce(c, k)) return false;
    return true;
}

bool check_linking_oracle(std::uint64_t max_size, std::mt19937_64& rng) {
    std::uniform_int_distribution<Index> genus(1, 3);
    const SymplecticMatrix h = random_symplectic(genus(rng), max_size, rng);
    const LinkedGroup a = linking_from_normal_form(partial_normal_form(h));
    const LinkedGroup b = quotient_with_linking(pair_from_matrix(h));
    if (!stable_equivalence(a, b).equivalent) return false;
    if (a.t() == 0) return b.t() == 0;
    const SmallLinking sa(a, max_size), sb(b, max_size);
    return search_isometries(sa, sb, [](const Isometry&) { return false; }).found == 1;
}

bool check_square_law(std::uint64_t max_size, std::mt19937_64& rng) {
    const LinkedGroup g = random_linked_group(max_size, rng, 0);
    const MinimalInvariant m = det_invariant(g);
    const SmallLinking s(g, max_size);
    bool ok = true;
    search_isometries(
        s, s,
        [&](const Isometry& h) {
            const BigInt d = isometry_det(h, g.torsion);
            if (mod(d * d - 1, m.tau_bar) != 0) ok = false;
            return ok;
        },
        200000);
    return ok;
}

}  // namespace

int run_selftest(std::uint64_t max_size, std::uint64_t seed, std::ostream& log, int cases) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    const auto run = [&](const std::string& name, std::uint64_t min_size, const std::function<bool()>& property) {
        int passed = 0, ran = 0;
        if (max_size >= min_size) {
            for (int i = 0; i < cases; ++i) {
                ++ran;
                bool ok = false;
                try {
                    ok = property();
                } catch (const std::exception& e) {
                    log << name << ": case " << i << " threw: " << e.what() << "\n";
                }
                if (ok) ++passed;
            }
        }
        failures += ran - passed;
        log << name << ": " << passed << "/" << ran << (passed == ran ? " ok" : " FAILED") << "\n";
    };
    run("snf recomposition", 1, [&] { return check_snf(rng); });
    run("gauss closed form vs enumeration", 2, [&] { return check_gauss(max_size, rng); });
    run("normal form vs lagrangian linking", 2, [&] { return check_linking_oracle(max_size, rng); });
    run("isometry square law", 2, [&] { return check_square_law(max_size, rng); });
    log << (failures ? "selftest FAILED" : "selftest passed") << "\n";
    return failures;
}

}  // namespace heegaard
