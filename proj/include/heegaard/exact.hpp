#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpz_class NonInteger;
    typedef mpz_class Nested;
    typedef mpz_class Literal;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 300,
        MulCost = 300
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace heegaard {

using BigInt = mpz_class;
// mpq_class keeps numerator/denominator in lowest terms with denominator > 0
// as long as every constructor goes through canonicalize().
using BigRational = mpq_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<BigInt>;
using IntegerVector = Vector<BigInt>;
using RationalMatrix = Matrix<BigRational>;

class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

// Representative of q modulo 1 in [0, 1).
BigRational mod_one(const BigRational& q);
bool is_integer(const BigRational& q);

// Least nonnegative residue; m > 0.
BigInt mod(const BigInt& a, const BigInt& m);
std::int64_t mod(std::int64_t a, std::int64_t m);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
// Inverse of a modulo m; throws if gcd(a, m) != 1.
BigInt inverse_mod(const BigInt& a, const BigInt& m);
BigInt pow(const BigInt& base, unsigned long exponent);
long to_long(const BigInt& z);

IntegerMatrix identity(Eigen::Index n);
IntegerMatrix zeros(Eigen::Index rows, Eigen::Index cols);
IntegerMatrix diagonal(const std::vector<BigInt>& entries);
IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

// [[a, b], [c, d]] for square blocks of equal size.
IntegerMatrix block2x2(const IntegerMatrix& a, const IntegerMatrix& b, const IntegerMatrix& c,
                       const IntegerMatrix& d);
IntegerMatrix direct_sum(const IntegerMatrix& a, const IntegerMatrix& b);

bool is_symmetric(const IntegerMatrix& m);
bool is_zero(const IntegerMatrix& m);

// Fraction-free (Bareiss) determinant; exact for any integer matrix.
template <typename Derived>
BigInt determinant(const Eigen::MatrixBase<Derived>& input) {
    if (input.rows() != input.cols()) throw ArithmeticError("determinant of non-square matrix");
    const Eigen::Index n = input.rows();
    if (n == 0) return 1;
    IntegerMatrix a = input;
    BigInt sign = 1;
    BigInt previous = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index swap = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
                a(i, j) = t;
            }
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

BigRational determinant(const RationalMatrix& m);

// Inverse of a unimodular integer matrix; throws if |det| != 1.
IntegerMatrix inverse_unimodular(const IntegerMatrix& m);

RationalMatrix to_rational(const IntegerMatrix& m);

std::string to_string(const IntegerMatrix& m);

}  // namespace heegaard
