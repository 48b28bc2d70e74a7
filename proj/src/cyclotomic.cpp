#include "heegaard/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

namespace heegaard {

namespace {

constexpr unsigned kMaxLevel = 24;

std::size_t degree(unsigned level) { return std::size_t{1} << (level - 1); }

void check_level(unsigned level) {
    if (level < 1 || level > kMaxLevel) throw ArithmeticError("cyclotomic level out of range");
}

void unify(CyclotomicElement& a, CyclotomicElement& b) {
    const unsigned l = std::max(a.level(), b.level());
    if (a.level() != l) a = a.embed(l);
    if (b.level() != l) b = b.embed(l);
}

}  // namespace

CyclotomicElement::CyclotomicElement(unsigned level) : level_(level) {
    check_level(level);
    coeffs_.assign(degree(level), BigInt(0));
}

CyclotomicElement::CyclotomicElement(unsigned level, std::vector<BigInt> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
    check_level(level);
    if (coeffs_.size() != degree(level)) throw ArithmeticError("coefficient vector has wrong length");
}

CyclotomicElement CyclotomicElement::integer(unsigned level, const BigInt& value) {
    CyclotomicElement e(level);
    e.coeffs_[0] = value;
    return e;
}

CyclotomicElement CyclotomicElement::root_of_unity(long numerator, unsigned level) {
    CyclotomicElement e(level);
    e.add_power(numerator, 1);
    return e;
}

CyclotomicElement CyclotomicElement::rho(long power, unsigned level) {
    if (level < 3) throw ArithmeticError("rho needs level >= 3");
    return root_of_unity(power, 3).embed(level);
}

CyclotomicElement CyclotomicElement::sqrt2(unsigned level) {
    if (level < 3) throw ArithmeticError("sqrt2 needs level >= 3");
    return rho(1, level) - rho(3, level);
}

void CyclotomicElement::add_power(long exponent, const BigInt& scalar) {
    const long n = static_cast<long>(coeffs_.size());
    const long e = static_cast<long>(mod(static_cast<std::int64_t>(exponent), 2 * n));
    if (e < n)
        coeffs_[static_cast<std::size_t>(e)] += scalar;
    else
        coeffs_[static_cast<std::size_t>(e - n)] -= scalar;
}

CyclotomicElement CyclotomicElement::embed(unsigned target) const {
    if (target < level_) throw ArithmeticError("cannot embed into a lower level");
    if (target == level_) return *this;
    CyclotomicElement out(target);
    const long stride = 1l << (target - level_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.coeffs_[i * static_cast<std::size_t>(stride)] = coeffs_[i];
    return out;
}

CyclotomicElement CyclotomicElement::conj() const {
    CyclotomicElement out(level_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.add_power(-static_cast<long>(i), coeffs_[i]);
    return out;
}

bool CyclotomicElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

bool CyclotomicElement::is_integer(BigInt* out) const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    if (out) *out = coeffs_[0];
    return true;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& other) {
    CyclotomicElement b = other;
    unify(*this, b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& other) {
    CyclotomicElement b = other;
    unify(*this, b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& other) {
    CyclotomicElement b = other;
    unify(*this, b);
    CyclotomicElement out(level_);
    // Gauss sums are sparse; skip zero coefficients on both sides.
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        if (b.coeffs_[j] != 0) nz.push_back(j);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j : nz) out.add_power(static_cast<long>(i + j), coeffs_[i] * b.coeffs_[j]);
    }
    *this = std::move(out);
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.level_ == b.level_) return a.coeffs_ == b.coeffs_;
    CyclotomicElement x = a, y = b;
    unify(x, y);
    return x.coeffs_ == y.coeffs_;
}

std::string CyclotomicElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) out << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0) out << "-";
        first = false;
        const BigInt a = abs(coeffs_[i]);
        if (i == 0) {
            out << a.get_str();
            continue;
        }
        if (a != 1) out << a.get_str() << "*";
        out << "z" << (1ul << level_);
        if (i > 1) out << "^" << i;
    }
    if (first) out << "0";
    return out.str();
}

CyclotomicElement pow(const CyclotomicElement& base, unsigned long exponent) {
    CyclotomicElement result = CyclotomicElement::integer(base.level(), 1);
    CyclotomicElement b = base;
    while (exponent) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

}  // namespace heegaard
