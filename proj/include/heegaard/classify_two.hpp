#pragma once

#include "heegaard/cyclotomic.hpp"
#include "heegaard/linked_group.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace heegaard {

// Unary (a / 2^j), a odd in [1, 2^j); BinaryC = [[0,1],[1,0]] / 2^j;
// BinaryD = [[2,1],[1,2]] / 2^j.  a is unused for binary forms.
struct BasicForm {
    enum class Kind { Unary, BinaryC, BinaryD };
    Kind kind = Kind::Unary;
    BigInt a = 1;
    unsigned long j = 1;

    Eigen::Index rank() const { return kind == Kind::Unary ? 1 : 2; }
    RationalMatrix matrix() const;
    std::string to_string() const;
};

bool operator==(const BasicForm& x, const BasicForm& y);

// Column c of `witness` holds the coordinates, on the component generators,
// of the c-th basis vector of the orthogonal sum of `summands`.
struct WallDecomposition {
    std::vector<BasicForm> summands;
    IntegerMatrix witness;
};

// entries[0] = phi_n, ..., entries[n-1] = phi_1; nullopt is infinity.
struct PhaseVector {
    unsigned long degree = 0;
    std::vector<std::optional<int>> entries;

    std::string to_string() const;
};

bool operator==(const PhaseVector& a, const PhaseVector& b);

// N_a = #{x : lambda(x, x) = a}, by full enumeration.
std::map<BigRational, BigInt> burger_counts(const PrimaryComponent& c);

// Sum over x of E(2^k lambda(x, x)), by full enumeration.
CyclotomicElement gauss_sum_bruteforce(const PrimaryComponent& c, unsigned long k);
// Sum over a of N_a E(2^k a).
CyclotomicElement gauss_sum_from_counts(const std::map<BigRational, BigInt>& counts, unsigned long k);
// Product of the per-summand closed forms.
CyclotomicElement gauss_sum_closed_form(const std::vector<BasicForm>& forms, unsigned long k);

// Splits off unary summands at the top order when a top generator has odd
// self-linking, hyperbolic planes otherwise; every split is re-verified.
WallDecomposition wall_decompose(const PrimaryComponent& c);

// Additive per-summand table on a Wall decomposition; degree = top exponent.
PhaseVector phase_vector(const PrimaryComponent& c);
PhaseVector phase_vector(const std::vector<BasicForm>& forms, unsigned long degree);
// phi_k read off Gamma_{k-1} by brute force.
PhaseVector phase_vector_from_gauss(const PrimaryComponent& c);
// phi with gamma = sqrt2^p rho^phi; nullopt when gamma = 0.  Throws
// std::logic_error if gamma is not of that shape.
std::optional<int> phase_of(const CyclotomicElement& gamma);

// False when the exponent lists differ.
bool two_equivalent(const PrimaryComponent& a, const PrimaryComponent& b);

}  // namespace heegaard
