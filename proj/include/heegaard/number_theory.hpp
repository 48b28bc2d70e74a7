#pragma once

#include "heegaard/exact.hpp"

#include <array>
#include <utility>
#include <vector>

namespace heegaard {

class NotPrimeError : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};

class NonLiftableError : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};

// Trial division to 2^20, then Miller-Rabin on the first 13 prime bases,
// which is deterministic below 3317044064679887385961981.  Larger inputs
// that survive trial division are rejected.
bool is_prime(const BigInt& n);

// Distinct prime divisors in increasing order, n >= 1.
std::vector<BigInt> prime_divisors(const BigInt& n);
unsigned long valuation(BigInt n, const BigInt& p);

// Euler's criterion.  p must be an odd prime.
int legendre_symbol(const BigInt& a, const BigInt& p);

// f(x) = c[0] + c[1] x + c[2] x^2.
struct Quadratic {
    std::array<BigInt, 3> c;
    BigInt operator()(const BigInt& x) const { return c[0] + c[1] * x + c[2] * x * x; }
    BigInt derivative(const BigInt& x) const { return c[1] + 2 * c[2] * x; }
};

// Lift a root r of f mod p^{k-1} to the unique root r + t p^{k-1} mod p^k,
// 0 <= t < p.  Requires k >= 2 and f'(r) a unit mod p.
BigInt hensel_sqrt_solve(const Quadratic& f, const BigInt& p, unsigned long k, const BigInt& r);

// Root mod p^k obtained by lifting a root mod p one power at a time.
BigInt hensel_lift_to(const Quadratic& f, const BigInt& p, unsigned long k, const BigInt& r);

// Unique x mod prod(m_i) with x = v_i mod m_i; moduli pairwise coprime.
BigInt crt_combine(const std::vector<std::pair<BigInt, BigInt>>& residues);

}  // namespace heegaard
