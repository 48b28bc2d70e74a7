#pragma once

#include "heegaard/linked_group.hpp"

#include <random>

namespace heegaard {

// Seeded random instances shared by the self-test and the test suites.
// Every sampler is deterministic for a fixed engine state.

// Row i of `rows` gives y'_i in terms of the old generators; the result is
// the linking on the new generators, which must have the same orders.
LinkedGroup transform_generators(const LinkedGroup& g, const IntegerMatrix& rows);
PrimaryComponent transform_generators(const PrimaryComponent& c, const IntegerMatrix& rows);

// Product of elementary automorphisms of Z_{tau_1} + ... + Z_{tau_t}
// (tau_i | tau_{i+1}): unit rescalings and y_i += c y_j, the latter scaled
// by tau_j / tau_i when j > i.  Rows are images of the generators.
IntegerMatrix random_automorphism(const std::vector<BigInt>& orders, std::mt19937_64& rng, int moves = 6);

// Orthogonal sum of random diagonal (p odd) or basic (p = 2) pieces with
// |T| <= max_order, disguised by a random automorphism.  max_order >= p.
PrimaryComponent random_primary_component(const BigInt& p, std::uint64_t max_order, std::mt19937_64& rng,
                                          Eigen::Index max_rank = 4);

// Random torsion over primes {2, 3, 5, 7} with |T| <= max_order (>= 2).
LinkedGroup random_linked_group(std::uint64_t max_order, std::mt19937_64& rng, Eigen::Index max_free_rank = 1);

// Random symplectic matrix of the given genus whose quotient torsion has
// order at most max_order; built from lens blocks, shears and handlebody
// moves.
SymplecticMatrix random_symplectic(Eigen::Index genus, std::uint64_t max_order, std::mt19937_64& rng);

// |T| of Z^{2g} / (B + Bbar): product of the nonzero invariant factors of P.
BigInt torsion_order(const SymplecticMatrix& h);

}  // namespace heegaard
