#include "heegaard/stable.hpp"

namespace heegaard {

namespace {

std::string join(const std::vector<BigInt>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + ")";
}

}  // namespace

StableInvariants stable_invariants(const LinkedGroup& g) {
    StableInvariants out;
    out.free_rank = g.free_rank;
    out.torsion = g.torsion;
    for (const auto& c : primary_decompose(g)) {
        if (c.p == 2) {
            TwoPrimeInvariants two;
            two.exponents = c.exponents;
            two.wall = wall_decompose(c);
            two.phase = phase_vector(two.wall.summands, c.exponents.back());
            out.two = std::move(two);
        } else {
            out.odd.push_back(seifert_invariants(c));
        }
    }
    return out;
}

StableVerdict compare_stable(const StableInvariants& a, const StableInvariants& b) {
    if (a.free_rank != b.free_rank)
        return {false, "free rank " + std::to_string(a.free_rank) + " vs " + std::to_string(b.free_rank)};
    if (a.torsion != b.torsion) return {false, "torsion " + join(a.torsion) + " vs " + join(b.torsion)};
    for (std::size_t i = 0; i < a.odd.size(); ++i)
        if (!(a.odd[i] == b.odd[i])) return {false, "characters differ at p = " + a.odd[i].p.get_str()};
    if (a.two && !(a.two->phase == b.two->phase))
        return {false, "phase vector " + a.two->phase.to_string() + " vs " + b.two->phase.to_string()};
    return {true, ""};
}

StableVerdict stable_equivalence(const LinkedGroup& a, const LinkedGroup& b) {
    return compare_stable(stable_invariants(a), stable_invariants(b));
}

StableVerdict stable_equivalence(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    return stable_equivalence(linking_from_normal_form(partial_normal_form(a)),
                              linking_from_normal_form(partial_normal_form(b)));
}

}  // namespace heegaard
