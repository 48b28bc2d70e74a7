#pragma once

// Shared constructors for hand-built test inputs.

#include "heegaard/classify_two.hpp"
#include "heegaard/linked_group.hpp"
#include "heegaard/symplectic.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace fixture {

using heegaard::BasicForm;
using heegaard::BigInt;
using heegaard::BigRational;
using heegaard::RationalMatrix;

inline BasicForm unary(long a, unsigned long j) { return {BasicForm::Kind::Unary, heegaard::mod(BigInt(a), heegaard::pow(BigInt(2), j)), j}; }
inline BasicForm hyperbolic(unsigned long j) { return {BasicForm::Kind::BinaryC, 1, j}; }
inline BasicForm d_form(unsigned long j) { return {BasicForm::Kind::BinaryD, 1, j}; }

// 2-primary component carrying the orthogonal sum of `forms`, generators
// sorted by ascending exponent.
inline heegaard::PrimaryComponent two_component(std::vector<BasicForm> forms) {
    std::stable_sort(forms.begin(), forms.end(), [](const BasicForm& a, const BasicForm& b) { return a.j < b.j; });
    heegaard::PrimaryComponent c;
    c.p = 2;
    Eigen::Index n = 0;
    for (const auto& f : forms) n += f.rank();
    c.linking = RationalMatrix::Zero(n, n);
    Eigen::Index at = 0;
    for (const auto& f : forms) {
        c.linking.block(at, at, f.rank(), f.rank()) = f.matrix();
        for (Eigen::Index k = 0; k < f.rank(); ++k) c.exponents.push_back(f.j);
        at += f.rank();
    }
    return c;
}

// Diagonal linking a_i / tau_i on Z_{tau_1} + ... (tau_i | tau_{i+1}).
inline heegaard::LinkedGroup diagonal_group(const std::vector<long>& tau, const std::vector<long>& a) {
    const auto t = static_cast<Eigen::Index>(tau.size());
    RationalMatrix m = RationalMatrix::Zero(t, t);
    std::vector<BigInt> torsion;
    for (Eigen::Index i = 0; i < t; ++i) {
        m(i, i) = heegaard::make_rational(a[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(i)]);
        torsion.emplace_back(tau[static_cast<std::size_t>(i)]);
    }
    return heegaard::make_linked_group(0, torsion, m);
}

inline heegaard::LinkedGroup group(const std::vector<long>& tau, const std::vector<std::vector<long>>& num,
                                   long den) {
    const auto t = static_cast<Eigen::Index>(tau.size());
    RationalMatrix m(t, t);
    for (Eigen::Index i = 0; i < t; ++i)
        for (Eigen::Index j = 0; j < t; ++j)
            m(i, j) = heegaard::make_rational(num[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], den);
    return heegaard::make_linked_group(0, std::vector<BigInt>(tau.begin(), tau.end()), m);
}

inline heegaard::SymplecticMatrix matrix_U() {
    return heegaard::SymplecticMatrix(
        heegaard::from_rows({{0, -15, 8, 0}, {-15, 0, 0, 8}, {-2, 0, 0, 1}, {0, -2, 1, 0}}));
}

inline heegaard::SymplecticMatrix matrix_V() {
    return heegaard::SymplecticMatrix(
        heegaard::from_rows({{0, -5, 8, 0}, {-5, 0, 0, 8}, {-2, 0, 0, 3}, {0, -2, 3, 0}}));
}

using Phase = std::vector<std::optional<int>>;
constexpr std::nullopt_t inf = std::nullopt;

// `head` followed by `cycle` repeated, truncated to n entries.
inline Phase phase_pattern(const Phase& head, const std::vector<int>& cycle, std::size_t n) {
    Phase out = head;
    for (std::size_t k = 0; out.size() < n; ++k) out.push_back(cycle[k % cycle.size()]);
    out.resize(n);
    return out;
}

}  // namespace fixture
