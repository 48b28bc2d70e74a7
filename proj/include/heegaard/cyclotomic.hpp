#pragma once

#include "heegaard/exact.hpp"

#include <string>
#include <vector>

namespace heegaard {

// Element of Z[zeta] with zeta = E(1/2^level), stored in Z[x]/(x^N + 1),
// N = 2^(level-1).  coeffs.size() == N always.
class CyclotomicElement {
public:
    explicit CyclotomicElement(unsigned level = 1);
    CyclotomicElement(unsigned level, std::vector<BigInt> coeffs);

    static CyclotomicElement integer(unsigned level, const BigInt& value);
    // zeta_{2^level}^numerator.
    static CyclotomicElement root_of_unity(long numerator, unsigned level);
    // E(1/8)^power, level >= 3.
    static CyclotomicElement rho(long power, unsigned level);
    // rho - rho^3, level >= 3.
    static CyclotomicElement sqrt2(unsigned level);

    unsigned level() const { return level_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    // Image under zeta_{2^level} -> zeta_{2^target}^{2^(target-level)}.
    CyclotomicElement embed(unsigned target) const;
    // zeta -> zeta^{-1}.
    CyclotomicElement conj() const;

    bool is_zero() const;
    // True if the element is a rational integer; value is written to *out.
    bool is_integer(BigInt* out = nullptr) const;

    CyclotomicElement& operator+=(const CyclotomicElement& other);
    CyclotomicElement& operator-=(const CyclotomicElement& other);
    CyclotomicElement& operator*=(const CyclotomicElement& other);
    CyclotomicElement& operator*=(const BigInt& scalar);
    // Adds scalar * zeta^exponent in place.
    void add_power(long exponent, const BigInt& scalar);

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const BigInt& s) { return a *= s; }
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);
    friend bool operator!=(const CyclotomicElement& a, const CyclotomicElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    unsigned level_;
    std::vector<BigInt> coeffs_;
};

CyclotomicElement pow(const CyclotomicElement& base, unsigned long exponent);

}  // namespace heegaard
