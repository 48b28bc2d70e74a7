#pragma once

// Independent reference computations used only by the tests.  Each one
// takes a different route from the library code it checks.

#include "heegaard/cyclotomic.hpp"
#include "heegaard/linked_group.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <set>
#include <vector>

namespace oracle {

using heegaard::BigInt;
using heegaard::BigRational;
using heegaard::IntegerMatrix;
using heegaard::IntegerVector;
using heegaard::LinkedGroup;
using Index = Eigen::Index;

// Invariant factors from determinantal divisors d_k = gcd of k x k minors.
inline std::vector<BigInt> invariant_factors(const IntegerMatrix& m) {
    const Index n = std::min(m.rows(), m.cols());
    std::vector<BigInt> out;
    BigInt prev = 1;
    for (Index k = 1; k <= n; ++k) {
        BigInt g = 0;
        std::vector<Index> rows(static_cast<std::size_t>(k)), cols(static_cast<std::size_t>(k));
        std::function<void(Index, Index, std::vector<Index>&, Index, const std::function<void()>&)> choose =
            [&](Index start, Index depth, std::vector<Index>& pick, Index limit, const std::function<void()>& body) {
                if (depth == k) return body();
                for (Index i = start; i < limit; ++i) {
                    pick[static_cast<std::size_t>(depth)] = i;
                    choose(i + 1, depth + 1, pick, limit, body);
                }
            };
        choose(0, 0, rows, m.rows(), [&] {
            choose(0, 0, cols, m.cols(), [&] {
                IntegerMatrix minor(k, k);
                for (Index a = 0; a < k; ++a)
                    for (Index b = 0; b < k; ++b)
                        minor(a, b) = m(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]);
                g = heegaard::gcd(g, heegaard::determinant(minor));
            });
        });
        if (g == 0) {
            for (Index rest = k; rest <= n; ++rest) out.push_back(0);
            break;
        }
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

inline int legendre_by_squares(long a, long p) {
    std::set<long> squares;
    for (long x = 1; x < p; ++x) squares.insert((x * x) % p);
    const long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    return squares.count(r) ? 1 : -1;
}

// All coordinate vectors of Z_{o_1} + ... + Z_{o_t}.
inline std::vector<IntegerVector> elements(const std::vector<BigInt>& orders) {
    std::vector<IntegerVector> out;
    IntegerVector x = IntegerVector::Zero(static_cast<Index>(orders.size()));
    for (;;) {
        out.push_back(x);
        Index i = 0;
        for (; i < x.size(); ++i) {
            x(i) += 1;
            if (x(i) < orders[static_cast<std::size_t>(i)]) break;
            x(i) = 0;
        }
        if (i == x.size()) break;
    }
    return out;
}

inline BigRational link(const heegaard::RationalMatrix& lam, const IntegerVector& x, const IntegerVector& y) {
    BigRational v = 0;
    for (Index i = 0; i < x.size(); ++i)
        for (Index j = 0; j < y.size(); ++j) v += BigRational(x(i) * y(j)) * lam(i, j);
    return heegaard::mod_one(v);
}

// Counts maps y_i -> x_i (a tuple of elements of the target) that respect
// orders and the linking; each is automatically injective by
// nondegeneracy, hence an isometry.  visit(images) returns false to stop.
inline std::size_t naive_isometries(const std::vector<BigInt>& orders, const heegaard::RationalMatrix& from,
                                    const heegaard::RationalMatrix& to,
                                    const std::function<bool(const std::vector<IntegerVector>&)>& visit) {
    const auto all = elements(orders);
    const Index t = static_cast<Index>(orders.size());
    std::vector<IntegerVector> images(static_cast<std::size_t>(t));
    std::size_t count = 0;
    bool stop = false;
    std::function<void(Index)> rec = [&](Index i) {
        if (stop) return;
        if (i == t) {
            ++count;
            if (!visit(images)) stop = true;
            return;
        }
        for (const auto& x : all) {
            bool ok = true;
            for (Index k = 0; k < t && ok; ++k)
                ok = heegaard::mod(orders[static_cast<std::size_t>(i)] * BigInt(x(k)), orders[static_cast<std::size_t>(k)]) == 0;
            if (!ok) continue;
            images[static_cast<std::size_t>(i)] = x;
            for (Index j = 0; j <= i && ok; ++j) ok = link(to, images[static_cast<std::size_t>(j)], x) == from(j, i);
            if (!ok) continue;
            rec(i + 1);
            if (stop) return;
        }
    };
    rec(0);
    return count;
}

inline bool naive_isometric(const LinkedGroup& a, const LinkedGroup& b) {
    if (a.torsion != b.torsion || a.free_rank != b.free_rank) return false;
    return naive_isometries(a.torsion, a.linking, b.linking, [](const auto&) { return false; }) > 0;
}

inline std::complex<double> evaluate(const heegaard::CyclotomicElement& e) {
    const double n = std::ldexp(1.0, static_cast<int>(e.level()));
    std::complex<double> z = 0;
    for (std::size_t k = 0; k < e.coeffs().size(); ++k)
        z += e.coeffs()[k].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
    return z;
}

// Sum over x of exp(2 pi i 2^k lambda(x, x)) in floating point.
inline std::complex<double> numeric_gauss(const std::vector<BigInt>& orders, const heegaard::RationalMatrix& lam,
                                          unsigned long k) {
    std::complex<double> z = 0;
    const BigInt scale = heegaard::pow(BigInt(2), k);
    for (const auto& x : elements(orders)) {
        const BigRational v = heegaard::mod_one(link(lam, x, x) * scale);
        z += std::polar(1.0, 2 * std::numbers::pi * v.get_d());
    }
    return z;
}

}  // namespace oracle
