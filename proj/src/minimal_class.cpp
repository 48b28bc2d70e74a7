#include "heegaard/minimal_class.hpp"

#include "heegaard/enumeration.hpp"
#include "heegaard/number_theory.hpp"
#include "heegaard/smith.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace heegaard {

using Index = Eigen::Index;

namespace {

// Node budget for the volume-preserving isometry search.
constexpr std::uint64_t kSearchBudget = 4'000'000;

bool is_unit_mod(const BigInt& a, const BigInt& m) { return gcd(a, m) == 1; }

bool plus_minus_one(const BigInt& d, const BigInt& m) { return mod(d - 1, m) == 0 || mod(d + 1, m) == 0; }

}  // namespace

bool is_even_linking(const LinkedGroup& g) {
    if (g.t() == 0) throw LinkingError("evenness needs torsion");
    const BigInt& tau = g.torsion.front();
    if (mod(tau, BigInt(2)) == 1) return false;

    // z_i = (tau_i / tau) y_i span the tau-torsion; tau lambda(z_i, z_j) is integral.
    bool generators_even = true;
    for (Index i = 0; i < g.t(); ++i) {
        const BigInt m = g.torsion[static_cast<std::size_t>(i)] / tau;
        const BigRational v = BigRational(m * m * tau) * g.linking(i, i);
        if (!is_integer(v)) throw std::logic_error("tau-torsion self-linking is not in <1/tau>");
        if (mod(v.get_num(), BigInt(2)) != 0) generators_even = false;
    }

    const auto parts = primary_decompose(g);
    const PrimaryComponent* two = find_component(parts, 2);
    const unsigned long lowest = two->exponents.front();
    bool wall_even = true;
    for (const auto& f : wall_decompose(*two).summands)
        if (f.kind == BasicForm::Kind::Unary && f.j == lowest) wall_even = false;

    if (wall_even != generators_even) throw std::logic_error("evenness criteria disagree");
    return generators_even;
}

RationalMatrix symmetric_lift(const LinkedGroup& g) {
    RationalMatrix lift(g.t(), g.t());
    for (Index i = 0; i < g.t(); ++i)
        for (Index j = i; j < g.t(); ++j) {
            lift(i, j) = g.linking(i, j);
            lift(j, i) = g.linking(i, j);
        }
    return lift;
}

BigInt lifted_determinant(const LinkedGroup& g, const RationalMatrix& lift) {
    const BigRational d = BigRational(g.order()) * determinant(lift);
    if (!is_integer(d)) throw std::logic_error("|T| det of a symmetric lift is not an integer");
    return d.get_num();
}

MinimalInvariant det_invariant(const LinkedGroup& g, std::uint64_t seed, int extra_lifts) {
    if (g.t() == 0) throw LinkingError("det invariant needs torsion");
    MinimalInvariant out;
    out.tau = g.torsion.front();
    out.even = is_even_linking(g);
    out.tau_bar = out.even ? 2 * out.tau : out.tau;
    const RationalMatrix lift = symmetric_lift(g);
    out.det_value = mod(lifted_determinant(g, lift), out.tau_bar);
    if (!is_unit_mod(out.det_value, out.tau)) throw LinkingError("det invariant is not a unit mod tau");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> shift(-5, 5);
    for (int n = 0; n < extra_lifts; ++n) {
        RationalMatrix other = lift;
        for (Index i = 0; i < g.t(); ++i)
            for (Index j = i; j < g.t(); ++j) {
                const long s = shift(rng);
                other(i, j) += s;
                if (j != i) other(j, i) += s;
            }
        if (mod(lifted_determinant(g, other), out.tau_bar) != out.det_value)
            throw std::logic_error("det invariant depends on the symmetric lift");
    }
    return out;
}

BigInt class_count(const BigInt& tau, bool even) {
    if (tau < 2) throw ArithmeticError("class count needs tau >= 2");
    if (tau > 1'000'000) return class_count_structural(tau, even);
    const long t = to_long(tau);
    const long tau_bar = (even && t % 2 == 0) ? 2 * t : t;
    long units = 0, roots = 0;
    for (long u = 1; u < t; ++u) {
        if (std::gcd(u, t) != 1) continue;
        ++units;
        if ((u * u) % tau_bar == 1 % tau_bar) ++roots;
    }
    return units / roots;
}

BigInt class_count_structural(const BigInt& tau, bool even) {
    if (tau < 2) throw ArithmeticError("class count needs tau >= 2");
    BigInt units = 1, roots = 1;
    for (const BigInt& p : prime_divisors(tau)) {
        const unsigned long e = valuation(tau, p);
        units *= pow(p, e - 1) * (p - 1);
        if (p != 2) roots *= 2;
        else if (even) roots *= e == 1 ? 1 : 2;
        else roots *= e == 1 ? 1 : (e == 2 ? 2 : 4);
    }
    return units / roots;
}

BigInt class_count(const LinkedGroup& g) { return class_count(g.torsion.front(), is_even_linking(g)); }

MinimalVerdict minimal_equivalence(const LinkedGroup& a, const LinkedGroup& b) {
    MinimalVerdict out;
    const StableVerdict stable = stable_equivalence(a, b);
    if (!stable.equivalent) {
        out.reason = stable.reason;
        return out;
    }
    if (a.t() == 0) {
        out.equivalent = true;
        return out;
    }
    const MinimalInvariant ia = det_invariant(a);
    const MinimalInvariant ib = det_invariant(b);
    const bool det_match = ia.det_value == ib.det_value;
    if (!det_match)
        out.reason = "det " + ia.det_value.get_str() + " vs " + ib.det_value.get_str() + " mod " + ia.tau_bar.get_str();

    const auto limits = enumeration_limits();
    if (a.order() > BigInt(static_cast<unsigned long>(limits.isometry))) {
        out.bounded_search = true;
        out.equivalent = det_match;
        return out;
    }
    const SmallLinking sa(a, limits.isometry), sb(b, limits.isometry);
    const SearchOutcome search = search_isometries(
        sa, sb,
        [&](const Isometry& h) {
            const BigInt d = isometry_det(h, a.torsion);
            if (mod(ia.det_value - d * d * ib.det_value, ia.tau_bar) != 0)
                throw std::logic_error("isometry violates the det transport law");
            if (!plus_minus_one(d, ia.tau)) return true;
            out.det_h = d;
            return false;
        },
        kSearchBudget);
    if (out.det_h) {
        if (!det_match) throw std::logic_error("volume-preserving isometry found between unequal det invariants");
        out.equivalent = true;
        return out;
    }
    if (!search.complete) {
        out.bounded_search = true;
        out.equivalent = det_match;
        return out;
    }
    if (det_match) throw std::logic_error("equal det invariants without a volume-preserving isometry");
    return out;
}

MinimalVerdict minimal_equivalence(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    const PartialNormalForm na = partial_normal_form(a);
    const PartialNormalForm nb = partial_normal_form(b);
    const LinkedGroup ga = linking_from_normal_form(na);
    const LinkedGroup gb = linking_from_normal_form(nb);
    if (na.stab_index != 0 || nb.stab_index != 0 || a.genus() != b.genus()) {
        const StableVerdict s = stable_equivalence(ga, gb);
        MinimalVerdict out;
        out.equivalent = s.equivalent;
        out.fell_back_to_stable = true;
        out.reason = "stabilized input, decided by stable equivalence";
        if (!s.equivalent) out.reason += ": " + s.reason;
        return out;
    }
    return minimal_equivalence(ga, gb);
}

bool operator==(const ReidemeisterSymbol& a, const ReidemeisterSymbol& b) {
    return a.i == b.i && a.p == b.p && a.value == b.value && a.character == b.character &&
           a.determined == b.determined;
}

std::vector<ReidemeisterSymbol> reidemeister_symbols(const PartialNormalForm& nf) {
    std::vector<ReidemeisterSymbol> out;
    if (nf.t < 2) return out;
    const IntegerMatrix Q2 = nf.Q2();
    BigInt g = 0;
    for (Index i = 0; i + 1 < nf.t; ++i) {
        g = gcd(g, nf.tau[static_cast<std::size_t>(i + 1)] / nf.tau[static_cast<std::size_t>(i)]);
        if (g == 1) break;
        for (const BigInt& p : prime_divisors(g)) {
            const BigInt v = mod(BigInt(Q2(i, i)), p);
            const int chi = v == 0 ? 0 : (p == 2 ? 1 : legendre_symbol(v, p));
            out.push_back({i + 1, p, v, chi, mod(nf.tau[static_cast<std::size_t>(i)], p) == 0});
        }
    }
    return out;
}

ExteriorDet exterior_det(const IntegerMatrix& alpha, const std::vector<BigInt>& torsion) {
    const Index r = static_cast<Index>(torsion.size());
    if (r == 0 || alpha.rows() != r || alpha.cols() != r) throw ArithmeticError("exterior det needs an r x r matrix");
    for (Index i = 0; i < r; ++i)
        for (Index k = 0; k < r; ++k)
            if (mod(torsion[static_cast<std::size_t>(i)] * BigInt(alpha(i, k)), torsion[static_cast<std::size_t>(k)]) != 0)
                throw ArithmeticError("generator images do not respect generator orders");
    IntegerMatrix stacked = zeros(2 * r, r);
    stacked.topRows(r) = alpha;
    stacked.bottomRows(r) = diagonal(torsion);
    for (const BigInt& d : smith_normal_form(stacked).diag)
        if (d != 1) throw ArithmeticError("generator images do not generate the group");
    ExteriorDet out;
    out.tau = torsion.front();
    out.det = mod(determinant(alpha), out.tau);
    out.equivalent_to_identity = plus_minus_one(out.det, out.tau);
    return out;
}

LinkedGroup diagonalize_odd(const LinkedGroup& g) {
    for (const BigInt& t : g.torsion)
        if (mod(t, BigInt(2)) == 0) throw ArithmeticError("diagonalization needs odd torsion");
    const auto parts = primary_decompose(g);
    std::vector<PrimaryComponent> diag_parts;
    for (const auto& c : parts) {
        const OddPrimeInvariants inv = seifert_invariants(c);
        PrimaryComponent d;
        d.p = c.p;
        d.exponents = c.exponents;
        d.linking = RationalMatrix(c.rank(), c.rank());
        for (Index i = 0; i < c.rank(); ++i)
            for (Index j = 0; j < c.rank(); ++j) d.linking(i, j) = 0;
        Index start = 0;
        for (const auto& block : inv.blocks) {
            const BigInt den = pow(c.p, block.exponent);
            d.linking(start, start) = make_rational(block.determinant, den);
            for (Index k = 1; k < block.multiplicity; ++k) d.linking(start + k, start + k) = make_rational(1, den);
            start += block.multiplicity;
        }
        if (!(seifert_invariants(d) == inv)) throw std::logic_error("diagonal form changed a character");
        diag_parts.push_back(std::move(d));
    }
    return reassemble(diag_parts, g.free_rank);
}

}  // namespace heegaard
