#pragma once

#include "heegaard/classify_odd.hpp"
#include "heegaard/classify_two.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heegaard {

struct TwoPrimeInvariants {
    std::vector<unsigned long> exponents;
    WallDecomposition wall;
    PhaseVector phase;
};

// Complete invariants of a linked group up to isomorphism.
struct StableInvariants {
    Eigen::Index free_rank = 0;
    std::vector<BigInt> torsion;
    std::vector<OddPrimeInvariants> odd;
    std::optional<TwoPrimeInvariants> two;
};

StableInvariants stable_invariants(const LinkedGroup& g);

struct StableVerdict {
    bool equivalent = false;
    std::string reason;  // first differing invariant; empty when equivalent
};

StableVerdict compare_stable(const StableInvariants& a, const StableInvariants& b);
StableVerdict stable_equivalence(const LinkedGroup& a, const LinkedGroup& b);
StableVerdict stable_equivalence(const SymplecticMatrix& a, const SymplecticMatrix& b);

}  // namespace heegaard
