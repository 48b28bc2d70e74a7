#include "heegaard/number_theory.hpp"

namespace heegaard {

namespace {

constexpr unsigned long kTrialBound = 1ul << 20;
const char* const kMillerRabinLimit = "3317044064679887385961981";

bool miller_rabin(const BigInt& n) {
    static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    BigInt d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    const BigInt n_minus_1 = n - 1;
    for (unsigned long a : bases) {
        BigInt x;
        const BigInt base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_1) continue;
        bool witness = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n_minus_1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (unsigned long q = 2; q < kTrialBound; ++q) {
        if (BigInt(q) * q > n) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return n == q;
    }
    if (n >= BigInt(kMillerRabinLimit))
        throw NotPrimeError("primality of " + n.get_str() + " is beyond the deterministic range");
    return miller_rabin(n);
}

std::vector<BigInt> prime_divisors(const BigInt& input) {
    if (input < 1) throw ArithmeticError("prime_divisors needs a positive integer");
    std::vector<BigInt> out;
    BigInt n = input;
    for (unsigned long q = 2; BigInt(q) * q <= n; ++q) {
        if (q >= kTrialBound) {
            if (!is_prime(n)) throw ArithmeticError("cannot factor " + input.get_str());
            break;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            out.emplace_back(q);
            while (mpz_divisible_ui_p(n.get_mpz_t(), q)) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

unsigned long valuation(BigInt n, const BigInt& p) {
    if (n == 0) throw ArithmeticError("valuation of zero");
    unsigned long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

int legendre_symbol(const BigInt& a, const BigInt& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t())) throw NotPrimeError("modulus " + p.get_str() + " is not an odd prime");
    if (!is_prime(p)) throw NotPrimeError("modulus " + p.get_str() + " is composite");
    const BigInt r = mod(a, p);
    if (r == 0) return 0;
    BigInt e = (p - 1) / 2;
    BigInt x;
    mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return x == 1 ? 1 : -1;
}

BigInt hensel_sqrt_solve(const Quadratic& f, const BigInt& p, unsigned long k, const BigInt& r) {
    if (k < 2) throw ArithmeticError("hensel lift needs k >= 2");
    const BigInt lower = pow(p, k - 1);
    const BigInt root = mod(r, lower);
    const BigInt value = f(root);
    if (mod(value, lower) != 0) throw ArithmeticError("seed is not a root mod p^(k-1)");
    const BigInt slope = mod(f.derivative(root), p);
    if (slope == 0) throw NonLiftableError("f'(r) vanishes mod p");
    const BigInt t = mod(-(value / lower) * inverse_mod(slope, p), p);
    return root + t * lower;
}

BigInt hensel_lift_to(const Quadratic& f, const BigInt& p, unsigned long k, const BigInt& r) {
    BigInt root = mod(r, p);
    if (mod(f(root), p) != 0) throw ArithmeticError("seed is not a root mod p");
    for (unsigned long e = 2; e <= k; ++e) root = hensel_sqrt_solve(f, p, e, root);
    return root;
}

BigInt crt_combine(const std::vector<std::pair<BigInt, BigInt>>& residues) {
    BigInt x = 0;
    BigInt modulus = 1;
    for (const auto& [value, m] : residues) {
        if (m <= 0) throw ArithmeticError("moduli must be positive");
        if (gcd(modulus, m) != 1) throw ArithmeticError("moduli are not pairwise coprime");
        // x + modulus * s = value mod m
        const BigInt s = mod((value - x) * inverse_mod(modulus, m), m);
        x += modulus * s;
        modulus *= m;
    }
    return mod(x, modulus);
}

}  // namespace heegaard
