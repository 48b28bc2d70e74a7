#pragma once

#include "heegaard/exact.hpp"

#include <random>
#include <string>
#include <vector>

namespace heegaard {

class NotSymplecticError : public std::runtime_error {
public:
    NotSymplecticError(const std::string& identity, const std::string& detail)
        : std::runtime_error(detail), identity_(identity) {}
    // Name of the first failing block identity, e.g. "R^T Q - S^T P = I".
    const std::string& identity() const { return identity_; }

private:
    std::string identity_;
};

// 2g x 2g integer matrix H = [[R, P], [S, Q]] with H^T J H = J.
class SymplecticMatrix {
public:
    SymplecticMatrix() = default;
    // Throws NotSymplecticError on violation.
    explicit SymplecticMatrix(IntegerMatrix m);

    Eigen::Index genus() const { return m_.rows() / 2; }
    const IntegerMatrix& matrix() const { return m_; }

    IntegerMatrix R() const { return m_.topLeftCorner(genus(), genus()); }
    IntegerMatrix P() const { return m_.topRightCorner(genus(), genus()); }
    IntegerMatrix S() const { return m_.bottomLeftCorner(genus(), genus()); }
    IntegerMatrix Q() const { return m_.bottomRightCorner(genus(), genus()); }

    // [[Q^T, -P^T], [-S^T, R^T]].
    SymplecticMatrix inverse() const;
    SymplecticMatrix transpose() const;

    friend bool operator==(const SymplecticMatrix& a, const SymplecticMatrix& b) { return a.m_ == b.m_; }

private:
    struct Trusted {};
    SymplecticMatrix(IntegerMatrix m, Trusted) : m_(std::move(m)) {}
    friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b);

    IntegerMatrix m_;
};

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b);

IntegerMatrix standard_J(Eigen::Index genus);
SymplecticMatrix validate_symplectic(const IntegerMatrix& m);

// Handlebody subgroup: P block zero.
bool in_handlebody_subgroup(const SymplecticMatrix& h);
bool in_handlebody_subgroup(const IntegerMatrix& m);

// [[I, 0], [Z, I]], Z symmetric.
SymplecticMatrix omega(const IntegerMatrix& Z);
// [[A, 0], [0, A^{-T}]], A unimodular.
SymplecticMatrix sigma(const IntegerMatrix& A);
// [[I, Z], [0, I]], Z symmetric; not in the handlebody subgroup.
SymplecticMatrix upper_shear(const IntegerMatrix& Z);

SymplecticMatrix stabilize(const SymplecticMatrix& h, Eigen::Index k);
// Blockwise direct sum of splittings of genus g1 and g2.
SymplecticMatrix symplectic_direct_sum(const SymplecticMatrix& a, const SymplecticMatrix& b);
// Genus 1 matrix [[r, p], [s, q]] with rq - ps = 1; requires gcd(p, q) = 1.
SymplecticMatrix lens_matrix(const BigInt& p, const BigInt& q);

struct PartialNormalForm {
    SymplecticMatrix original;
    SymplecticMatrix normalized;
    Eigen::Index stab_index = 0;
    Eigen::Index t = 0;
    Eigen::Index r = 0;
    std::vector<BigInt> tau;
    SymplecticMatrix core;  // [[R2, P2], [S2, Q2]], 2t x 2t; empty when t == 0
    IntegerMatrix left;     // left * original * right == normalized
    IntegerMatrix right;

    IntegerMatrix Q2() const { return core.Q(); }
    IntegerMatrix R2() const { return core.R(); }
};

PartialNormalForm partial_normal_form(const SymplecticMatrix& h);
bool is_stabilized(const SymplecticMatrix& h);
Eigen::Index minimal_genus(const SymplecticMatrix& h);

// Random element of the handlebody subgroup: a product of at most
// max_factors Omega/Sigma generators with small entries.
IntegerMatrix random_handlebody_element(Eigen::Index genus, std::mt19937_64& rng, int max_factors = 12);

}  // namespace heegaard
