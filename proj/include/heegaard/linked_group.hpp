#pragma once

#include "heegaard/exact.hpp"
#include "heegaard/symplectic.hpp"

#include <vector>

namespace heegaard {

class LinkingError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Free rank plus a torsion group Z_{tau_1} + ... + Z_{tau_t}, tau_i | tau_{i+1},
// with a nonsingular symmetric Q/Z-valued linking on the generators y_i.
// Entries of `linking` are kept in [0, 1).
struct LinkedGroup {
    Eigen::Index free_rank = 0;
    std::vector<BigInt> torsion;
    RationalMatrix linking;

    Eigen::Index t() const { return static_cast<Eigen::Index>(torsion.size()); }
    BigInt order() const;  // |T|
};

// Reduces entries mod 1 and checks symmetry, order compatibility and
// nonsingularity.  Throws LinkingError.
LinkedGroup make_linked_group(Eigen::Index free_rank, std::vector<BigInt> torsion, const RationalMatrix& linking);

// Entrywise equality; isomorphism is decided by classification invariants.
bool structurally_equal(const LinkedGroup& a, const LinkedGroup& b);

// lambda(x, y) mod 1 for integer coordinate vectors on the generators.
BigRational evaluate(const LinkedGroup& g, const IntegerVector& x, const IntegerVector& y);

// lambda_ij = q_ij / tau_j from the core of a partial normal form.
LinkedGroup linking_from_normal_form(const PartialNormalForm& nf);

// Lagrangians B = span(b_i) and Bbar, given by a 2g x g generator matrix.
struct HeegaardPair {
    Eigen::Index genus = 0;
    IntegerMatrix bbar;
};

// Bbar = H(B) = columns g+1..2g of H.
HeegaardPair pair_from_matrix(const SymplecticMatrix& h);
// Checks isotropy and that Bbar is a rank g direct summand.
void validate_pair(const HeegaardPair& pair);
// Z^{2g} / (B + Bbar) with lambda(x, y) = (1/m) omega(b, v) where m x = b + bbar.
LinkedGroup quotient_with_linking(const HeegaardPair& pair);

// Generators g_i = (tau_i / p^{e_i}) y_i of the p-primary part, e_i ascending.
struct PrimaryComponent {
    BigInt p;
    std::vector<unsigned long> exponents;
    RationalMatrix linking;

    Eigen::Index rank() const { return static_cast<Eigen::Index>(exponents.size()); }
    BigInt order() const;
    std::vector<BigInt> orders() const;
};

std::vector<PrimaryComponent> primary_decompose(const LinkedGroup& g);
const PrimaryComponent* find_component(const std::vector<PrimaryComponent>& parts, const BigInt& p);
LinkedGroup as_linked_group(const PrimaryComponent& c);
// Orthogonal sum of primary parts, rewritten on invariant-factor generators.
LinkedGroup reassemble(const std::vector<PrimaryComponent>& parts, Eigen::Index free_rank = 0);

}  // namespace heegaard
