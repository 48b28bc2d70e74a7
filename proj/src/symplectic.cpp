#include "heegaard/symplectic.hpp"

#include "heegaard/smith.hpp"

namespace heegaard {

namespace {

using Index = Eigen::Index;

struct Blocks {
    Index s, t, r;
    Index b1() const { return 0; }
    Index b2() const { return s; }
    Index b3() const { return s + t; }
};

// Working state for the normal form; every move is mirrored into a witness.
struct Normalizer {
    IntegerMatrix H, L, W;
    Index g;

    IntegerMatrix R() const { return H.topLeftCorner(g, g); }
    IntegerMatrix P() const { return H.topRightCorner(g, g); }
    IntegerMatrix S() const { return H.bottomLeftCorner(g, g); }
    IntegerMatrix Q() const { return H.bottomRightCorner(g, g); }

    void left(const IntegerMatrix& X) {
        H = X * H;
        L = X * L;
    }
    void right(const IntegerMatrix& X) {
        H = H * X;
        W = W * X;
    }
};

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("partial normal form: ") + what);
}

}  // namespace

IntegerMatrix standard_J(Index genus) {
    return block2x2(zeros(genus, genus), identity(genus), -identity(genus), zeros(genus, genus));
}

SymplecticMatrix::SymplecticMatrix(IntegerMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() % 2 != 0 || m_.rows() == 0)
        throw NotSymplecticError("square even dimension", "matrix must be 2g x 2g with g >= 1");
    const Index g = genus();
    const IntegerMatrix J = standard_J(g);
    if (m_.transpose() * J * m_ == J) return;
    const IntegerMatrix R = this->R(), P = this->P(), S = this->S(), Q = this->Q();
    const IntegerMatrix RtS = R.transpose() * S;
    const IntegerMatrix PtQ = P.transpose() * Q;
    const IntegerMatrix RPt = R * P.transpose();
    const IntegerMatrix SQt = S * Q.transpose();
    const IntegerMatrix unit = R.transpose() * Q - S.transpose() * P;
    std::string failing;
    if (!is_symmetric(RtS)) failing = "R^T S symmetric";
    else if (!is_symmetric(PtQ)) failing = "P^T Q symmetric";
    else if (!is_symmetric(RPt)) failing = "R P^T symmetric";
    else if (!is_symmetric(SQt)) failing = "S Q^T symmetric";
    else if (unit != identity(g)) failing = "R^T Q - S^T P = I";
    else failing = "H^T J H = J";
    throw NotSymplecticError(failing, "matrix is not symplectic: " + failing + " fails");
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    IntegerMatrix inv = block2x2(Q().transpose(), -P().transpose(), -S().transpose(), R().transpose());
    return SymplecticMatrix(std::move(inv), Trusted{});
}

SymplecticMatrix SymplecticMatrix::transpose() const {
    return SymplecticMatrix(m_.transpose(), Trusted{});
}

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    if (a.genus() != b.genus()) throw ArithmeticError("genus mismatch in product");
    return SymplecticMatrix(a.m_ * b.m_, SymplecticMatrix::Trusted{});
}

SymplecticMatrix validate_symplectic(const IntegerMatrix& m) { return SymplecticMatrix(m); }

bool in_handlebody_subgroup(const IntegerMatrix& m) {
    const Index g = m.rows() / 2;
    return is_zero(m.topRightCorner(g, g));
}

bool in_handlebody_subgroup(const SymplecticMatrix& h) { return in_handlebody_subgroup(h.matrix()); }

SymplecticMatrix omega(const IntegerMatrix& Z) {
    if (!is_symmetric(Z)) throw ArithmeticError("omega needs a symmetric matrix");
    const Index g = Z.rows();
    return SymplecticMatrix(block2x2(identity(g), zeros(g, g), Z, identity(g)));
}

SymplecticMatrix sigma(const IntegerMatrix& A) {
    const Index g = A.rows();
    const IntegerMatrix inv_t = inverse_unimodular(A).transpose();
    return SymplecticMatrix(block2x2(A, zeros(g, g), zeros(g, g), inv_t));
}

SymplecticMatrix upper_shear(const IntegerMatrix& Z) {
    if (!is_symmetric(Z)) throw ArithmeticError("shear needs a symmetric matrix");
    const Index g = Z.rows();
    return SymplecticMatrix(block2x2(identity(g), Z, zeros(g, g), identity(g)));
}

SymplecticMatrix stabilize(const SymplecticMatrix& h, Index k) {
    if (k < 0) throw ArithmeticError("negative stabilization index");
    if (k == 0) return h;
    const IntegerMatrix J = standard_J(k);
    return symplectic_direct_sum(SymplecticMatrix(J), h);
}

SymplecticMatrix symplectic_direct_sum(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    return SymplecticMatrix(block2x2(direct_sum(a.R(), b.R()), direct_sum(a.P(), b.P()),
                                     direct_sum(a.S(), b.S()), direct_sum(a.Q(), b.Q())));
}

SymplecticMatrix lens_matrix(const BigInt& p, const BigInt& q) {
    BigInt g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    if (g != 1) throw ArithmeticError("lens matrix needs gcd(p, q) = 1");
    // u q + v p = 1, so r = u, s = -v.
    BigInt r = u, s = -v;
    if (p != 0) {
        const BigInt k = floor_div(r, abs(p)) * (p > 0 ? 1 : -1);
        r -= k * p;
        s -= k * q;
    }
    IntegerMatrix m(2, 2);
    m << r, p, s, q;
    return SymplecticMatrix(m);
}

PartialNormalForm partial_normal_form(const SymplecticMatrix& h) {
    const Index g = h.genus();
    Normalizer n{h.matrix(), identity(2 * g), identity(2 * g), g};

    // SNF of P via Sigma moves on both sides.
    const SmithForm snf = smith_normal_form(h.P());
    n.left(block2x2(snf.U, zeros(g, g), zeros(g, g), snf.U_inv.transpose()));
    n.right(block2x2(snf.V_inv.transpose(), zeros(g, g), zeros(g, g), snf.V));

    Blocks b{0, 0, 0};
    std::vector<BigInt> tau;
    for (const BigInt& d : snf.diag) {
        if (d == 1) ++b.s;
        else if (d == 0) ++b.r;
        else {
            ++b.t;
            tau.push_back(d);
        }
    }
    const Index s = b.s, t = b.t, r = b.r;
    const Index i2 = b.b2(), i3 = b.b3();

    // Left Omega: clear Q's first column block and Q12.  Q12 = Q21^T T is forced by P^T Q symmetric.
    {
        const IntegerMatrix Q = n.Q();
        IntegerMatrix Z = zeros(g, g);
        Z.block(0, 0, s, s) = -Q.block(0, 0, s, s);
        Z.block(i2, 0, t, s) = -Q.block(i2, 0, t, s);
        Z.block(0, i2, s, t) = -Q.block(i2, 0, t, s).transpose();
        Z.block(i3, 0, r, s) = -Q.block(i3, 0, r, s);
        Z.block(0, i3, s, r) = -Q.block(i3, 0, r, s).transpose();
        n.left(omega(Z).matrix());
    }
    // Right Sigma: Q33 is unimodular; clear Q32 and set Q33 = I.
    if (r > 0) {
        const IntegerMatrix Q = n.Q();
        const IntegerMatrix Q33_inv = inverse_unimodular(Q.block(i3, i3, r, r));
        IntegerMatrix K = identity(g);
        K.block(i3, i2, r, t) = -Q33_inv * Q.block(i3, i2, r, t);
        K.block(i3, i3, r, r) = Q33_inv;
        const IntegerMatrix B = inverse_unimodular(K).transpose();
        n.right(block2x2(B, zeros(g, g), zeros(g, g), K));
    }
    // Right Omega: clear R's first row block and R21 = T R12^T.
    {
        const IntegerMatrix R = n.R();
        IntegerMatrix Z = zeros(g, g);
        Z.block(0, 0, s, s) = -R.block(0, 0, s, s);
        Z.block(0, i2, s, t) = -R.block(0, i2, s, t);
        Z.block(i2, 0, t, s) = -R.block(0, i2, s, t).transpose();
        Z.block(0, i3, s, r) = -R.block(0, i3, s, r);
        Z.block(i3, 0, r, s) = -R.block(0, i3, s, r).transpose();
        n.right(omega(Z).matrix());
    }
    // Right Omega: R23 is divisible row-wise by T.
    if (t > 0 && r > 0) {
        const IntegerMatrix R = n.R();
        IntegerMatrix Z = zeros(g, g);
        for (Index i = 0; i < t; ++i)
            for (Index j = 0; j < r; ++j) {
                const BigInt& x = R(i2 + i, i3 + j);
                require(mod(x, tau[static_cast<std::size_t>(i)]) == 0, "R23 not divisible by T");
                Z(i2 + i, i3 + j) = -x / tau[static_cast<std::size_t>(i)];
                Z(i3 + j, i2 + i) = Z(i2 + i, i3 + j);
            }
        n.right(omega(Z).matrix());
    }
    // Left Omega: clear the symmetric S33.
    if (r > 0) {
        const IntegerMatrix S = n.S();
        IntegerMatrix Z = zeros(g, g);
        Z.block(i3, i3, r, r) = -S.block(i3, i3, r, r);
        n.left(omega(Z).matrix());
    }
    // Residue reduction of Q22 (left Omega) and R22 (right Omega).
    if (t > 0) {
        const IntegerMatrix Q = n.Q();
        IntegerMatrix Z = zeros(g, g);
        for (Index i = 0; i < t; ++i)
            for (Index j = i; j < t; ++j) {
                const BigInt z = -floor_div(Q(i2 + j, i2 + i), tau[static_cast<std::size_t>(i)]);
                Z(i2 + j, i2 + i) = z;
                Z(i2 + i, i2 + j) = z;
            }
        n.left(omega(Z).matrix());

        const IntegerMatrix R = n.R();
        Z = zeros(g, g);
        for (Index i = 0; i < t; ++i)
            for (Index j = i; j < t; ++j) {
                const BigInt z = -floor_div(R(i2 + i, i2 + j), tau[static_cast<std::size_t>(i)]);
                Z(i2 + i, i2 + j) = z;
                Z(i2 + j, i2 + i) = z;
            }
        n.right(omega(Z).matrix());
    }

    PartialNormalForm out;
    out.original = h;
    out.normalized = SymplecticMatrix(n.H);
    out.stab_index = s;
    out.t = t;
    out.r = r;
    out.tau = tau;
    out.left = n.L;
    out.right = n.W;

    // Shape check against diag(0, R2, I), diag(I, T, 0), diag(-I, S2, 0), diag(0, Q2, I).
    const IntegerMatrix R = n.R(), P = n.P(), S = n.S(), Q = n.Q();
    const IntegerMatrix R2 = R.block(i2, i2, t, t), S2 = S.block(i2, i2, t, t), Q2 = Q.block(i2, i2, t, t);
    require(R == direct_sum(direct_sum(zeros(s, s), R2), identity(r)), "R block shape");
    require(P == diagonal(snf.diag), "P block shape");
    require(S == direct_sum(direct_sum(-identity(s), S2), zeros(r, r)), "S block shape");
    require(Q == direct_sum(direct_sum(zeros(s, s), Q2), identity(r)), "Q block shape");
    for (Index i = 0; i < t; ++i)
        for (Index j = i; j < t; ++j) {
            const BigInt& ti = tau[static_cast<std::size_t>(i)];
            const BigInt& tj = tau[static_cast<std::size_t>(j)];
            require(Q2(j, i) >= 0 && Q2(j, i) < ti, "q_ji residue");
            require(Q2(i, j) == (tj / ti) * Q2(j, i), "q_ij partner");
            require(R2(i, j) >= 0 && R2(i, j) < ti, "r_ij residue");
            require(R2(j, i) == (tj / ti) * R2(i, j), "r_ji partner");
        }
    if (t > 0) out.core = SymplecticMatrix(block2x2(R2, P.block(i2, i2, t, t), S2, Q2));
    require(in_handlebody_subgroup(out.left) && in_handlebody_subgroup(out.right), "witness outside handlebody group");
    require(out.left * h.matrix() * out.right == n.H, "witness round trip");
    return out;
}

bool is_stabilized(const SymplecticMatrix& h) { return partial_normal_form(h).stab_index > 0; }

Index minimal_genus(const SymplecticMatrix& h) {
    const PartialNormalForm nf = partial_normal_form(h);
    return nf.t + nf.r;
}

IntegerMatrix random_handlebody_element(Index genus, std::mt19937_64& rng, int max_factors) {
    std::uniform_int_distribution<int> count(1, max_factors);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<Index> pick(0, genus - 1);
    IntegerMatrix out = identity(2 * genus);
    const int factors = count(rng);
    for (int f = 0; f < factors; ++f) {
        if (coin(rng)) {
            IntegerMatrix Z = zeros(genus, genus);
            for (Index i = 0; i < genus; ++i)
                for (Index j = i; j < genus; ++j) {
                    Z(i, j) = small(rng);
                    Z(j, i) = Z(i, j);
                }
            out = out * omega(Z).matrix();
        } else {
            IntegerMatrix A = identity(genus);
            for (int e = 0; e < 3; ++e) {
                const Index i = pick(rng), j = pick(rng);
                if (i != j) {
                    const int c = small(rng);
                    A.row(i) += BigInt(c) * A.row(j);
                } else if (coin(rng)) {
                    A.row(i) *= BigInt(-1);
                } else if (genus > 1) {
                    A.row(i).swap(A.row((i + 1) % genus));
                }
            }
            out = out * sigma(A).matrix();
        }
    }
    return out;
}

}  // namespace heegaard
