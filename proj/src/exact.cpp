#include "heegaard/exact.hpp"

#include <sstream>

namespace heegaard {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigRational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return make_rational(BigInt(text), 1);
        return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ArithmeticError("malformed rational '" + text + "'");
    }
}

std::string to_string(const BigRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

BigRational mod_one(const BigRational& q) {
    BigInt n = mod(q.get_num(), q.get_den());
    return make_rational(n, q.get_den());
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigInt mod(const BigInt& a, const BigInt& m) {
    if (m <= 0) throw ArithmeticError("modulus must be positive");
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw ArithmeticError("division by zero");
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
    if (m == 1) return 0;
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw ArithmeticError(a.get_str() + " is not invertible modulo " + m.get_str());
    return mod(r, m);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

long to_long(const BigInt& z) {
    if (!z.fits_slong_p()) throw ArithmeticError("integer " + z.get_str() + " exceeds machine range");
    return z.get_si();
}

IntegerMatrix identity(Eigen::Index n) {
    IntegerMatrix m = zeros(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix zeros(Eigen::Index rows, Eigen::Index cols) {
    IntegerMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = 0;
    return m;
}

IntegerMatrix diagonal(const std::vector<BigInt>& entries) {
    const auto n = static_cast<Eigen::Index>(entries.size());
    IntegerMatrix m = zeros(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
    return m;
}

IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
    IntegerMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw ArithmeticError("ragged matrix rows");
        for (Eigen::Index j = 0; j < c; ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

IntegerMatrix block2x2(const IntegerMatrix& a, const IntegerMatrix& b, const IntegerMatrix& c,
                       const IntegerMatrix& d) {
    const Eigen::Index n = a.rows();
    IntegerMatrix m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = a;
    m.topRightCorner(n, n) = b;
    m.bottomLeftCorner(n, n) = c;
    m.bottomRightCorner(n, n) = d;
    return m;
}

IntegerMatrix direct_sum(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix m = zeros(a.rows() + b.rows(), a.cols() + b.cols());
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    return m;
}

bool is_symmetric(const IntegerMatrix& m) {
    return m.rows() == m.cols() && m == m.transpose();
}

bool is_zero(const IntegerMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

BigRational determinant(const RationalMatrix& input) {
    if (input.rows() != input.cols()) throw ArithmeticError("determinant of non-square matrix");
    RationalMatrix a = input;
    const Eigen::Index n = a.rows();
    BigRational det = 1;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = k; i < n; ++i)
            if (a(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            a.row(k).swap(a.row(pivot));
            det = -det;
        }
        det *= a(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const BigRational f = a(i, k) / a(k, k);
            for (Eigen::Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

IntegerMatrix inverse_unimodular(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw ArithmeticError("inverse of non-square matrix");
    const Eigen::Index n = m.rows();
    RationalMatrix a = to_rational(m);
    RationalMatrix inv(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = i == j ? 1 : 0;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = k; i < n; ++i)
            if (a(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw ArithmeticError("matrix is singular");
        a.row(k).swap(a.row(pivot));
        inv.row(k).swap(inv.row(pivot));
        const BigRational p = a(k, k);
        for (Eigen::Index j = 0; j < n; ++j) {
            a(k, j) /= p;
            inv(k, j) /= p;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            const BigRational f = a(i, k);
            for (Eigen::Index j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    IntegerMatrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!is_integer(inv(i, j))) throw ArithmeticError("matrix is not unimodular");
            out(i, j) = inv(i, j).get_num();
        }
    return out;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = BigRational(m(i, j));
    return r;
}

std::string to_string(const IntegerMatrix& m) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
        out << "]";
        if (i + 1 < m.rows()) out << "\n";
    }
    return out.str();
}

}  // namespace heegaard
