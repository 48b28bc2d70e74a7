#include "heegaard/smith.hpp"

#include <cstdlib>

namespace heegaard {

namespace {

struct Reducer {
    IntegerMatrix A, U, V, U_inv, V_inv;

    // row i += c * row k
    void add_row(Eigen::Index i, Eigen::Index k, const BigInt& c) {
        A.row(i) += c * A.row(k);
        U.row(i) += c * U.row(k);
        U_inv.col(k) -= c * U_inv.col(i);
    }
    void swap_rows(Eigen::Index i, Eigen::Index k) {
        if (i == k) return;
        A.row(i).swap(A.row(k));
        U.row(i).swap(U.row(k));
        U_inv.col(i).swap(U_inv.col(k));
    }
    void negate_row(Eigen::Index i) {
        A.row(i) *= BigInt(-1);
        U.row(i) *= BigInt(-1);
        U_inv.col(i) *= BigInt(-1);
    }
    // col j += c * col k
    void add_col(Eigen::Index j, Eigen::Index k, const BigInt& c) {
        A.col(j) += c * A.col(k);
        V.col(j) += c * V.col(k);
        V_inv.row(k) -= c * V_inv.row(j);
    }
    void swap_cols(Eigen::Index j, Eigen::Index k) {
        if (j == k) return;
        A.col(j).swap(A.col(k));
        V.col(j).swap(V.col(k));
        V_inv.row(j).swap(V_inv.row(k));
    }

    bool find_pivot(Eigen::Index s, Eigen::Index& row, Eigen::Index& col) const {
        bool found = false;
        BigInt best;
        for (Eigen::Index i = s; i < A.rows(); ++i)
            for (Eigen::Index j = s; j < A.cols(); ++j) {
                if (A(i, j) == 0) continue;
                BigInt a = abs(A(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    row = i;
                    col = j;
                }
            }
        return found;
    }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& input) {
    const Eigen::Index m = input.rows();
    const Eigen::Index n = input.cols();
    Reducer r{input, identity(m), identity(n), identity(m), identity(n)};

    const Eigen::Index steps = std::min(m, n);
    for (Eigen::Index s = 0; s < steps; ++s) {
        Eigen::Index pr = 0, pc = 0;
        if (!r.find_pivot(s, pr, pc)) break;
        for (;;) {
            r.swap_rows(s, pr);
            r.swap_cols(s, pc);
            const BigInt pivot = r.A(s, s);
            bool clean = true;
            for (Eigen::Index i = s + 1; i < m; ++i) {
                if (r.A(i, s) == 0) continue;
                r.add_row(i, s, -floor_div(r.A(i, s), pivot));
                if (r.A(i, s) != 0) clean = false;
            }
            for (Eigen::Index j = s + 1; j < n; ++j) {
                if (r.A(s, j) == 0) continue;
                r.add_col(j, s, -floor_div(r.A(s, j), pivot));
                if (r.A(s, j) != 0) clean = false;
            }
            if (clean) {
                Eigen::Index bad = -1;
                for (Eigen::Index i = s + 1; i < m && bad < 0; ++i)
                    for (Eigen::Index j = s + 1; j < n; ++j)
                        if (mod(r.A(i, j), abs(pivot)) != 0) {
                            bad = i;
                            break;
                        }
                if (bad < 0) break;
                r.add_row(s, bad, 1);
            }
            r.find_pivot(s, pr, pc);
        }
        if (r.A(s, s) < 0) r.negate_row(s);
    }

    SmithForm out;
    out.D = r.A;
    out.U = r.U;
    out.V = r.V;
    out.U_inv = r.U_inv;
    out.V_inv = r.V_inv;
    for (Eigen::Index i = 0; i < steps; ++i) out.diag.push_back(r.A(i, i));
    return out;
}

}  // namespace heegaard
