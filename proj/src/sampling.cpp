#include "heegaard/sampling.hpp"

#include "heegaard/smith.hpp"

#include <algorithm>

namespace heegaard {

using Index = Eigen::Index;

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

BigInt random_unit(const BigInt& m, std::mt19937_64& rng) {
    if (m <= 2) return 1;
    const long mm = to_long(m);
    for (;;) {
        const BigInt u = uniform(rng, 1, mm - 1);
        if (gcd(u, m) == 1) return u;
    }
}

RationalMatrix congruent(const RationalMatrix& lam, const IntegerMatrix& rows) {
    const RationalMatrix M = to_rational(rows);
    RationalMatrix out = M * lam * M.transpose();
    for (Index i = 0; i < out.rows(); ++i)
        for (Index j = 0; j < out.cols(); ++j) out(i, j) = mod_one(out(i, j));
    return out;
}

}  // namespace

LinkedGroup transform_generators(const LinkedGroup& g, const IntegerMatrix& rows) {
    return make_linked_group(g.free_rank, g.torsion, congruent(g.linking, rows));
}

PrimaryComponent transform_generators(const PrimaryComponent& c, const IntegerMatrix& rows) {
    PrimaryComponent out = c;
    out.linking = congruent(c.linking, rows);
    return out;
}

IntegerMatrix random_automorphism(const std::vector<BigInt>& orders, std::mt19937_64& rng, int moves) {
    const Index t = static_cast<Index>(orders.size());
    IntegerMatrix M = identity(t);
    if (t == 0) return M;
    for (int step = 0; step < moves; ++step) {
        const Index i = uniform(rng, 0, t - 1), j = uniform(rng, 0, t - 1);
        const BigInt& oi = orders[static_cast<std::size_t>(i)];
        const BigInt& oj = orders[static_cast<std::size_t>(j)];
        if (i == j) {
            M.row(i) *= random_unit(oi, rng);
        } else if (oi == oj && uniform(rng, 0, 3) == 0) {
            M.row(i).swap(M.row(j));
        } else {
            const BigInt scale = oj > oi ? BigInt(oj / oi) : BigInt(1);
            const BigInt c = uniform(rng, -3, 3);
            M.row(i) += BigInt(c * scale) * IntegerMatrix(M.row(j));
        }
        for (Index r = 0; r < t; ++r)
            for (Index k = 0; k < t; ++k) M(r, k) = mod(BigInt(M(r, k)), orders[static_cast<std::size_t>(k)]);
    }
    return M;
}

PrimaryComponent random_primary_component(const BigInt& p, std::uint64_t max_order, std::mt19937_64& rng,
                                          Index max_rank) {
    if (BigInt(static_cast<unsigned long>(max_order)) < p) throw ArithmeticError("order bound below p");
    struct Piece {
        unsigned long e;
        int kind;  // 0 unary, 1 hyperbolic, 2 the other binary form
        BigInt a;
    };
    std::vector<Piece> pieces;
    BigInt budget = static_cast<unsigned long>(max_order);
    Index rank = 0;
    while (rank < max_rank && budget >= p) {
        unsigned long emax = 0;
        while (pow(p, emax + 1) <= budget) ++emax;
        const unsigned long e = static_cast<unsigned long>(uniform(rng, 1, static_cast<long>(std::min(emax, 6ul))));
        const BigInt pe = pow(p, e);
        int kind = 0;
        if (p == 2 && rank + 2 <= max_rank && pe * pe <= budget && uniform(rng, 0, 2) == 0) kind = 1 + uniform(rng, 0, 1);
        if (kind == 0) {
            BigInt a = random_unit(pe, rng);
            if (p == 2 && mod(a, BigInt(2)) == 0) a += 1;
            pieces.push_back({e, 0, a});
            budget /= pe;
            rank += 1;
        } else {
            pieces.push_back({e, kind, 0});
            budget /= pe * pe;
            rank += 2;
        }
        if (uniform(rng, 0, 2) == 0) break;
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.e < y.e; });

    PrimaryComponent c;
    c.p = p;
    for (const auto& piece : pieces)
        for (int k = 0; k < (piece.kind ? 2 : 1); ++k) c.exponents.push_back(piece.e);
    c.linking = RationalMatrix(rank, rank);
    for (Index i = 0; i < rank; ++i)
        for (Index j = 0; j < rank; ++j) c.linking(i, j) = 0;
    Index at = 0;
    for (const auto& piece : pieces) {
        const BigInt den = pow(p, piece.e);
        if (piece.kind == 0) {
            c.linking(at, at) = make_rational(piece.a, den);
            at += 1;
            continue;
        }
        const BigInt diag = piece.kind == 2 ? 2 : 0;
        c.linking(at, at) = mod_one(make_rational(diag, den));
        c.linking(at + 1, at + 1) = c.linking(at, at);
        c.linking(at, at + 1) = make_rational(1, den);
        c.linking(at + 1, at) = c.linking(at, at + 1);
        at += 2;
    }
    return transform_generators(c, random_automorphism(c.orders(), rng));
}

LinkedGroup random_linked_group(std::uint64_t max_order, std::mt19937_64& rng, Index max_free_rank) {
    if (max_order < 2) throw ArithmeticError("order bound below 2");
    std::vector<BigInt> primes{2, 3, 5, 7};
    std::shuffle(primes.begin(), primes.end(), rng);
    std::vector<PrimaryComponent> parts;
    std::uint64_t budget = max_order;
    for (const BigInt& p : primes) {
        if (BigInt(static_cast<unsigned long>(budget)) < p) continue;
        if (!parts.empty() && uniform(rng, 0, 1) == 0) continue;
        PrimaryComponent c = random_primary_component(p, budget, rng);
        budget /= to_long(c.order());
        parts.push_back(std::move(c));
    }
    if (parts.empty()) parts.push_back(random_primary_component(2, max_order, rng));
    const LinkedGroup g = reassemble(parts, uniform(rng, 0, max_free_rank));
    return transform_generators(g, random_automorphism(g.torsion, rng));
}

BigInt torsion_order(const SymplecticMatrix& h) {
    BigInt n = 1;
    for (const BigInt& d : smith_normal_form(h.P()).diag)
        if (d != 0) n *= d;
    return n;
}

SymplecticMatrix random_symplectic(Index genus, std::uint64_t max_order, std::mt19937_64& rng) {
    const BigInt bound = static_cast<unsigned long>(max_order);
    for (int attempt = 0;; ++attempt) {
        SymplecticMatrix h;
        BigInt budget = bound;
        for (Index b = 0; b < genus; ++b) {
            SymplecticMatrix block;
            const long roll = uniform(rng, 0, 9);
            if (roll < 2 || budget < 2) {
                block = SymplecticMatrix(identity(2));
            } else if (roll < 3) {
                block = SymplecticMatrix(standard_J(1));
            } else {
                const long p = uniform(rng, 2, std::min(12l, to_long(budget)));
                BigInt q;
                do q = uniform(rng, 1, p - 1);
                while (gcd(q, BigInt(p)) != 1);
                block = lens_matrix(p, q);
                budget /= p;
            }
            h = b == 0 ? block : symplectic_direct_sum(h, block);
        }
        // Shears move the quotient off the block-diagonal family.
        if (attempt < 50 && uniform(rng, 0, 1) == 0) {
            IntegerMatrix W = zeros(genus, genus);
            for (Index i = 0; i < genus; ++i)
                for (Index j = i; j < genus; ++j) {
                    W(i, j) = uniform(rng, -1, 1);
                    W(j, i) = W(i, j);
                }
            h = uniform(rng, 0, 1) ? h * upper_shear(W) : upper_shear(W) * h;
        }
        const SymplecticMatrix left = validate_symplectic(random_handlebody_element(genus, rng, 4));
        const SymplecticMatrix right = validate_symplectic(random_handlebody_element(genus, rng, 4));
        h = left * h * right;
        if (torsion_order(h) <= bound) return h;
    }
}

}  // namespace heegaard
