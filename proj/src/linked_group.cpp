#include "heegaard/linked_group.hpp"

#include "heegaard/number_theory.hpp"
#include "heegaard/smith.hpp"

#include <algorithm>

namespace heegaard {

using Index = Eigen::Index;

namespace {

BigRational lifted_determinant_times_order(const std::vector<BigInt>& torsion, const RationalMatrix& lam) {
    BigInt order = 1;
    for (const auto& t : torsion) order *= t;
    return BigRational(order) * determinant(lam);
}

}  // namespace

BigInt LinkedGroup::order() const {
    BigInt n = 1;
    for (const auto& t : torsion) n *= t;
    return n;
}

LinkedGroup make_linked_group(Index free_rank, std::vector<BigInt> torsion, const RationalMatrix& linking) {
    if (free_rank < 0) throw LinkingError("negative free rank");
    const Index t = static_cast<Index>(torsion.size());
    if (linking.rows() != t || linking.cols() != t) throw LinkingError("linking matrix size does not match torsion");
    for (Index i = 0; i < t; ++i) {
        const BigInt& ti = torsion[static_cast<std::size_t>(i)];
        if (ti < 2) throw LinkingError("torsion coefficients must be >= 2");
        if (i > 0 && mod(ti, torsion[static_cast<std::size_t>(i - 1)]) != 0)
            throw LinkingError("torsion coefficients must form a divisibility chain");
    }
    LinkedGroup g;
    g.free_rank = free_rank;
    g.torsion = std::move(torsion);
    g.linking.resize(t, t);
    for (Index i = 0; i < t; ++i)
        for (Index j = 0; j < t; ++j) g.linking(i, j) = mod_one(linking(i, j));
    for (Index i = 0; i < t; ++i)
        for (Index j = 0; j < t; ++j) {
            if (g.linking(i, j) != g.linking(j, i)) throw LinkingError("linking is not symmetric");
            const BigRational& l = g.linking(i, j);
            if (!is_integer(l * g.torsion[static_cast<std::size_t>(i)]) ||
                !is_integer(l * g.torsion[static_cast<std::size_t>(j)]))
                throw LinkingError("linking entry incompatible with generator orders");
        }
    if (t > 0) {
        const BigRational d = lifted_determinant_times_order(g.torsion, g.linking);
        if (!is_integer(d)) throw LinkingError("|H| det(lambda) is not an integer");
        if (gcd(d.get_num(), g.torsion.front()) != 1) throw LinkingError("linking is singular");
    }
    return g;
}

bool structurally_equal(const LinkedGroup& a, const LinkedGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion && a.linking == b.linking;
}

BigRational evaluate(const LinkedGroup& g, const IntegerVector& x, const IntegerVector& y) {
    BigRational v = 0;
    for (Index i = 0; i < g.t(); ++i)
        for (Index j = 0; j < g.t(); ++j)
            if (x(i) != 0 && y(j) != 0) v += BigRational(x(i) * y(j)) * g.linking(i, j);
    return mod_one(v);
}

LinkedGroup linking_from_normal_form(const PartialNormalForm& nf) {
    const Index t = nf.t;
    RationalMatrix lam(t, t);
    if (t > 0) {
        const IntegerMatrix Q2 = nf.Q2();
        for (Index i = 0; i < t; ++i)
            for (Index j = 0; j < t; ++j) lam(i, j) = make_rational(Q2(i, j), nf.tau[static_cast<std::size_t>(j)]);
    }
    try {
        return make_linked_group(nf.r, nf.tau, lam);
    } catch (const LinkingError& e) {
        throw LinkingError(std::string("normal form produced an invalid linking: ") + e.what());
    }
}

HeegaardPair pair_from_matrix(const SymplecticMatrix& h) {
    const Index g = h.genus();
    return HeegaardPair{g, h.matrix().rightCols(g)};
}

void validate_pair(const HeegaardPair& pair) {
    const Index g = pair.genus;
    if (pair.bbar.rows() != 2 * g || pair.bbar.cols() != g) throw LinkingError("Bbar must be 2g x g");
    const IntegerMatrix J = standard_J(g);
    if (!is_zero(pair.bbar.transpose() * J * pair.bbar)) throw LinkingError("Bbar is not isotropic");
    const SmithForm snf = smith_normal_form(pair.bbar);
    for (const BigInt& d : snf.diag)
        if (d != 1) throw LinkingError("Bbar is not a rank g direct summand");
}

LinkedGroup quotient_with_linking(const HeegaardPair& pair) {
    validate_pair(pair);
    const Index g = pair.genus;
    // Generators of B + Bbar as columns: [E_B | Bbar] with E_B = [0; I].
    IntegerMatrix G = zeros(2 * g, 2 * g);
    G.bottomLeftCorner(g, g) = identity(g);
    G.rightCols(g) = pair.bbar;
    const SmithForm snf = smith_normal_form(G);
    const IntegerMatrix J = standard_J(g);

    std::vector<Index> torsion_idx;
    Index free_rank = 0;
    std::vector<BigInt> torsion;
    for (Index i = 0; i < 2 * g; ++i) {
        const BigInt& d = snf.diag[static_cast<std::size_t>(i)];
        if (d == 0) ++free_rank;
        else if (d != 1) {
            torsion_idx.push_back(i);
            torsion.push_back(d);
        }
    }
    const Index t = static_cast<Index>(torsion_idx.size());
    RationalMatrix lam(t, t);
    for (Index a = 0; a < t; ++a) {
        const Index i = torsion_idx[static_cast<std::size_t>(a)];
        const BigInt& m = snf.diag[static_cast<std::size_t>(i)];
        // m u_i = G (V e_i); its B part is E_B times the first g coordinates.
        const IntegerVector c = snf.V.col(i);
        IntegerVector b = IntegerVector::Zero(2 * g);
        for (Index k = 0; k < g; ++k) b(g + k) = c(k);
        const IntegerVector bbar = pair.bbar * c.tail(g);
        if (b + bbar != m * IntegerVector(snf.U_inv.col(i)))
            throw LinkingError("torsion lift does not decompose in B + Bbar");
        for (Index bidx = 0; bidx < t; ++bidx) {
            const IntegerVector u = snf.U_inv.col(torsion_idx[static_cast<std::size_t>(bidx)]);
            const BigInt w = (b.transpose() * J * u)(0, 0);
            lam(a, bidx) = make_rational(w, m);
        }
    }
    try {
        return make_linked_group(free_rank, torsion, lam);
    } catch (const LinkingError& e) {
        throw LinkingError(std::string("lagrangian quotient produced an invalid linking: ") + e.what());
    }
}

BigInt PrimaryComponent::order() const {
    BigInt n = 1;
    for (auto e : exponents) n *= pow(p, e);
    return n;
}

std::vector<BigInt> PrimaryComponent::orders() const {
    std::vector<BigInt> out;
    for (auto e : exponents) out.push_back(pow(p, e));
    return out;
}

std::vector<PrimaryComponent> primary_decompose(const LinkedGroup& g) {
    std::vector<PrimaryComponent> out;
    if (g.t() == 0) return out;
    const std::vector<BigInt> primes = prime_divisors(g.torsion.back());
    // multiplier[p][i] = tau_i / p^{e_i}; zero when p does not divide tau_i.
    std::vector<std::vector<BigInt>> multiplier;
    for (const BigInt& p : primes) {
        PrimaryComponent c;
        c.p = p;
        std::vector<Index> idx;
        std::vector<BigInt> mult(static_cast<std::size_t>(g.t()), BigInt(0));
        for (Index i = 0; i < g.t(); ++i) {
            const BigInt& ti = g.torsion[static_cast<std::size_t>(i)];
            if (mod(ti, p) != 0) continue;
            const unsigned long e = valuation(ti, p);
            c.exponents.push_back(e);
            idx.push_back(i);
            mult[static_cast<std::size_t>(i)] = ti / pow(p, e);
        }
        const Index s = static_cast<Index>(idx.size());
        c.linking.resize(s, s);
        for (Index a = 0; a < s; ++a)
            for (Index b = 0; b < s; ++b) {
                const Index i = idx[static_cast<std::size_t>(a)], j = idx[static_cast<std::size_t>(b)];
                c.linking(a, b) = mod_one(BigRational(mult[static_cast<std::size_t>(i)] * mult[static_cast<std::size_t>(j)]) *
                                          g.linking(i, j));
                BigInt den = c.linking(a, b).get_den();
                while (mod(den, p) == 0) den /= p;
                if (den != 1) throw LinkingError("primary linking has a denominator prime to p");
            }
        multiplier.push_back(std::move(mult));
        out.push_back(std::move(c));
    }
    for (std::size_t x = 0; x < primes.size(); ++x)
        for (std::size_t y = x + 1; y < primes.size(); ++y)
            for (Index i = 0; i < g.t(); ++i)
                for (Index j = 0; j < g.t(); ++j) {
                    const BigInt& mi = multiplier[x][static_cast<std::size_t>(i)];
                    const BigInt& mj = multiplier[y][static_cast<std::size_t>(j)];
                    if (mi == 0 || mj == 0) continue;
                    if (!is_integer(BigRational(mi * mj) * g.linking(i, j)))
                        throw LinkingError("distinct primary components are not orthogonal");
                }
    return out;
}

const PrimaryComponent* find_component(const std::vector<PrimaryComponent>& parts, const BigInt& p) {
    for (const auto& c : parts)
        if (c.p == p) return &c;
    return nullptr;
}

LinkedGroup as_linked_group(const PrimaryComponent& c) {
    return make_linked_group(0, c.orders(), c.linking);
}

LinkedGroup reassemble(const std::vector<PrimaryComponent>& parts, Index free_rank) {
    Index t = 0;
    for (const auto& c : parts) t = std::max(t, c.rank());
    std::vector<BigInt> torsion(static_cast<std::size_t>(t), BigInt(1));
    RationalMatrix lam(t, t);
    for (Index i = 0; i < t; ++i)
        for (Index j = 0; j < t; ++j) lam(i, j) = 0;
    for (const auto& c : parts) {
        const Index shift = t - c.rank();
        for (Index a = 0; a < c.rank(); ++a) {
            torsion[static_cast<std::size_t>(a + shift)] *= pow(c.p, c.exponents[static_cast<std::size_t>(a)]);
            for (Index b = 0; b < c.rank(); ++b) lam(a + shift, b + shift) += c.linking(a, b);
        }
    }
    return make_linked_group(free_rank, torsion, lam);
}

}  // namespace heegaard
