#pragma once

#include "heegaard/stable.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace heegaard {

// Lowest block of the 2-primary part is even: every x with tau x = 0 has
// lambda(x, x) in <2/tau>.  Always false when tau = tau_1 is odd.  Computed
// from the generators and from a Wall decomposition; disagreement throws.
bool is_even_linking(const LinkedGroup& g);

// Symmetric rational lift: entries of the stored linking (in [0, 1)).
RationalMatrix symmetric_lift(const LinkedGroup& g);
// |T| det(lift); an integer for every symmetric lift.
BigInt lifted_determinant(const LinkedGroup& g, const RationalMatrix& lift);

// tau_bar = 2 tau for even linkings with tau even, tau otherwise.
struct MinimalInvariant {
    BigInt tau;
    BigInt tau_bar;
    bool even = false;
    BigInt det_value;  // in [0, tau_bar), a unit mod tau
};

// Recomputes with `extra_lifts` randomized symmetric lifts and throws
// std::logic_error if any disagrees mod tau_bar.  Requires t >= 1.
MinimalInvariant det_invariant(const LinkedGroup& g, std::uint64_t seed = 1, int extra_lifts = 3);

// |units mod tau| / |{u : u^2 = 1 mod tau_bar}|.
BigInt class_count(const BigInt& tau, bool even);
BigInt class_count(const LinkedGroup& g);
// Same count from the unit group structure, without enumeration.
BigInt class_count_structural(const BigInt& tau, bool even);

struct MinimalVerdict {
    bool equivalent = false;
    bool bounded_search = false;       // no exhaustive certificate was obtained
    bool fell_back_to_stable = false;  // an input was stabilized or genera differ
    std::string reason;
    std::optional<BigInt> det_h;       // volume-preserving witness, mod tau
};

// Linked groups carrying the volume of their generators: equivalent iff
// stably equivalent and the det invariants agree mod tau_bar.  Within the
// isometry bound this is certified by searching for an isometry h with
// det h = +-1 mod tau.
MinimalVerdict minimal_equivalence(const LinkedGroup& a, const LinkedGroup& b);
MinimalVerdict minimal_equivalence(const SymplecticMatrix& a, const SymplecticMatrix& b);

// value = q_ii mod p; zero exactly when p | q_ii.  i is 1-based.
// q_ii is fixed only mod tau_i, so the symbol depends on the splitting
// alone when p | tau_i (`determined`); there, generator changes move q_ii
// by unit squares and `character` (0, or the quadratic character of q_ii
// mod p, 1 for p = 2) is the invariant part.
struct ReidemeisterSymbol {
    Eigen::Index i = 0;
    BigInt p;
    BigInt value;
    int character = 0;
    bool determined = false;
};
bool operator==(const ReidemeisterSymbol& a, const ReidemeisterSymbol& b);
std::vector<ReidemeisterSymbol> reidemeister_symbols(const PartialNormalForm& nf);

// Row i of alpha holds the coordinates of the image of generator i.
struct ExteriorDet {
    BigInt tau;
    BigInt det;  // mod tau
    bool equivalent_to_identity = false;  // det = +-1 mod tau
};
// Throws ArithmeticError if alpha is not a well-defined surjective endomorphism.
ExteriorDet exterior_det(const IntegerMatrix& alpha, const std::vector<BigInt>& torsion);

// Diagonal linking with the same characters; all tau_i must be odd.
LinkedGroup diagonalize_odd(const LinkedGroup& g);

}  // namespace heegaard
