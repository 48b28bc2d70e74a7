#pragma once

#include "heegaard/linked_group.hpp"

#include <vector>

namespace heegaard {

// One box of equal exponent in the p-primary linking matrix.
struct OddBlock {
    unsigned long exponent = 0;
    Eigen::Index multiplicity = 0;
    BigInt determinant;  // det of the box p^e * lambda, reduced mod p into [1, p)
    int character = 0;   // Legendre symbol of `determinant`
};

// Blocks ordered by strictly increasing exponent.
struct OddPrimeInvariants {
    BigInt p;
    std::vector<OddBlock> blocks;
};

// Compares exponents, multiplicities and characters; box determinants are
// representatives and do not take part.
bool operator==(const OddBlock& a, const OddBlock& b);
bool operator==(const OddPrimeInvariants& a, const OddPrimeInvariants& b);

// Characters are read off the matrix as given; off-box entries are ignored.
// Throws LinkingError on a box whose determinant vanishes mod p.
OddPrimeInvariants seifert_invariants(const PrimaryComponent& c);

// False (not an error) when primes or exponent lists differ.
bool odd_equivalent(const PrimaryComponent& a, const PrimaryComponent& b);

}  // namespace heegaard
