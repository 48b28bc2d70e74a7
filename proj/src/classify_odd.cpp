#include "heegaard/classify_odd.hpp"

#include "heegaard/number_theory.hpp"

namespace heegaard {

using Index = Eigen::Index;

bool operator==(const OddBlock& a, const OddBlock& b) {
    return a.exponent == b.exponent && a.multiplicity == b.multiplicity && a.character == b.character;
}

bool operator==(const OddPrimeInvariants& a, const OddPrimeInvariants& b) {
    return a.p == b.p && a.blocks == b.blocks;
}

OddPrimeInvariants seifert_invariants(const PrimaryComponent& c) {
    if (c.p == 2) throw ArithmeticError("seifert invariants need an odd prime");
    OddPrimeInvariants out;
    out.p = c.p;
    Index start = 0;
    while (start < c.rank()) {
        const unsigned long e = c.exponents[static_cast<std::size_t>(start)];
        Index end = start;
        while (end < c.rank() && c.exponents[static_cast<std::size_t>(end)] == e) ++end;
        const Index k = end - start;
        const BigInt scale = pow(c.p, e);
        IntegerMatrix box(k, k);
        for (Index u = 0; u < k; ++u)
            for (Index v = 0; v < k; ++v) {
                const BigRational s = c.linking(start + u, start + v) * scale;
                if (!is_integer(s)) throw LinkingError("box entry is not of order p^e");
                box(u, v) = mod(s.get_num(), scale);
            }
        OddBlock block;
        block.exponent = e;
        block.multiplicity = k;
        block.determinant = mod(determinant(box), c.p);
        if (block.determinant == 0) throw LinkingError("degenerate box in odd primary linking");
        block.character = legendre_symbol(block.determinant, c.p);
        out.blocks.push_back(block);
        start = end;
    }
    return out;
}

bool odd_equivalent(const PrimaryComponent& a, const PrimaryComponent& b) {
    if (a.p != b.p || a.exponents != b.exponents) return false;
    const auto ia = seifert_invariants(a);
    const auto ib = seifert_invariants(b);
    for (std::size_t i = 0; i < ia.blocks.size(); ++i)
        if (ia.blocks[i].character != ib.blocks[i].character) return false;
    return true;
}

}  // namespace heegaard
