#include "heegaard/classify_two.hpp"

#include "heegaard/enumeration.hpp"
#include "heegaard/number_theory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heegaard {

using Index = Eigen::Index;

RationalMatrix BasicForm::matrix() const {
    const BigInt den = pow(BigInt(2), j);
    if (kind == Kind::Unary) {
        RationalMatrix m(1, 1);
        m(0, 0) = make_rational(a, den);
        return m;
    }
    const BigInt diag = kind == Kind::BinaryC ? 0 : 2;
    RationalMatrix m(2, 2);
    m(0, 0) = mod_one(make_rational(diag, den));
    m(1, 1) = m(0, 0);
    m(0, 1) = make_rational(1, den);
    m(1, 0) = m(0, 1);
    return m;
}

std::string BasicForm::to_string() const {
    const std::string level = "2^" + std::to_string(j);
    switch (kind) {
        case Kind::Unary: return "U(" + a.get_str() + "/" + level + ")";
        case Kind::BinaryC: return "C/" + level;
        case Kind::BinaryD: return "D/" + level;
    }
    return {};
}

bool operator==(const BasicForm& x, const BasicForm& y) {
    if (x.kind != y.kind || x.j != y.j) return false;
    return x.kind != BasicForm::Kind::Unary || x.a == y.a;
}

std::string PhaseVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ", ";
        if (entries[i]) os << *entries[i];
        else os << "inf";
    }
    os << ")";
    return os.str();
}

bool operator==(const PhaseVector& a, const PhaseVector& b) {
    return a.degree == b.degree && a.entries == b.entries;
}

namespace {

unsigned long top_exponent(const PrimaryComponent& c) {
    return c.exponents.empty() ? 0 : c.exponents.back();
}

unsigned long log2_exact(const BigInt& den) {
    const unsigned long e = valuation(den, 2);
    if (pow(BigInt(2), e) != den) throw ArithmeticError("denominator is not a power of two");
    return e;
}

void require_two(const PrimaryComponent& c) {
    if (c.p != 2) throw ArithmeticError("2-primary component expected");
}

// Self-linking values scaled by 2^top, with multiplicities.
std::vector<std::int64_t> value_histogram(const PrimaryComponent& c) {
    const SmallLinking s(as_linked_group(c), enumeration_limits().burger);
    std::vector<std::int64_t> hist(static_cast<std::size_t>(s.modulus()), 0);
    std::vector<std::int64_t> x;
    for (std::int64_t e = 0; e < s.size(); ++e) {
        s.coords(e, x);
        ++hist[static_cast<std::size_t>(s.value(x, x))];
    }
    return hist;
}

int epsilon(const BigInt& a) { return mod(a, BigInt(4)) == 1 ? 1 : 7; }

CyclotomicElement sqrt2_power(unsigned long p, unsigned level) {
    CyclotomicElement out = CyclotomicElement::integer(level, pow(BigInt(2), p / 2));
    if (p % 2) out *= CyclotomicElement::sqrt2(level);
    return out;
}

CyclotomicElement closed_form(const BasicForm& f, unsigned long k, unsigned level) {
    const unsigned long j = f.j;
    switch (f.kind) {
        case BasicForm::Kind::Unary: {
            if (k >= j) return CyclotomicElement::integer(level, pow(BigInt(2), j));
            if (k + 1 == j) return CyclotomicElement(level);
            const long phase = (j - k) % 2 == 0 ? epsilon(f.a) : to_long(mod(f.a, BigInt(8)));
            return sqrt2_power(j + k + 1, level) * CyclotomicElement::rho(phase, level);
        }
        case BasicForm::Kind::BinaryC:
            return CyclotomicElement::integer(level, pow(BigInt(2), k + 1 >= j ? 2 * j : j + k + 1));
        case BasicForm::Kind::BinaryD: {
            if (k + 1 >= j) return CyclotomicElement::integer(level, pow(BigInt(2), 2 * j));
            const BigInt sign = (j + k + 1) % 2 == 0 ? 1 : -1;
            return CyclotomicElement::integer(level, sign * pow(BigInt(2), j + k + 1));
        }
    }
    return CyclotomicElement(level);
}

// phi_k contribution of one summand; nullopt is infinity.
std::optional<int> phase_entry(const BasicForm& f, unsigned long k) {
    const unsigned long j = f.j;
    switch (f.kind) {
        case BasicForm::Kind::Unary:
            if (k > j) return 0;
            if (k == j) return std::nullopt;
            return (j - k) % 2 == 1 ? epsilon(f.a) : static_cast<int>(to_long(mod(f.a, BigInt(8))));
        case BasicForm::Kind::BinaryC: return 0;
        case BasicForm::Kind::BinaryD: return k >= j ? 0 : static_cast<int>((4 * (j + k)) % 8);
    }
    return 0;
}

// Exact arithmetic on coordinate vectors of a 2-primary component, with the
// form scaled by 2^top.
class TwoForm {
public:
    explicit TwoForm(const PrimaryComponent& c) : top_(top_exponent(c)), modulus_(pow(BigInt(2), top_)) {
        const Index s = c.rank();
        F_.resize(s, s);
        for (Index i = 0; i < s; ++i)
            for (Index j = 0; j < s; ++j) {
                const BigRational v = c.linking(i, j) * modulus_;
                if (!is_integer(v)) throw LinkingError("2-primary linking has a foreign denominator");
                F_(i, j) = v.get_num();
            }
        for (auto e : c.exponents) orders_.push_back(pow(BigInt(2), e));
    }

    // 2^top lambda(x, y) mod 2^top.
    BigInt pair(const IntegerVector& x, const IntegerVector& y) const {
        return mod(BigInt((x.transpose() * F_ * y)(0, 0)), modulus_);
    }
    // 2^j lambda(x, y) mod 2^j; exact when x or y has order dividing 2^j.
    BigInt at_level(const IntegerVector& x, const IntegerVector& y, unsigned long j) const {
        const BigInt shift = pow(BigInt(2), top_ - j);
        const BigInt v = pair(x, y);
        if (mod(v, shift) != 0) throw std::logic_error("wall decomposition: pairing exceeds level");
        return v / shift;
    }
    void reduce(IntegerVector& x) const {
        for (Index i = 0; i < x.size(); ++i) x(i) = mod(BigInt(x(i)), orders_[static_cast<std::size_t>(i)]);
    }
    bool killed_by(const IntegerVector& x, const BigInt& m) const {
        for (Index i = 0; i < x.size(); ++i)
            if (mod(BigInt(m * x(i)), orders_[static_cast<std::size_t>(i)]) != 0) return false;
        return true;
    }
    unsigned long top() const { return top_; }

private:
    unsigned long top_;
    BigInt modulus_;
    IntegerMatrix F_;
    std::vector<BigInt> orders_;
};

struct Vec {
    IntegerVector x;
    unsigned long e;
};

void check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("wall decomposition: ") + what);
}

}  // namespace

std::map<BigRational, BigInt> burger_counts(const PrimaryComponent& c) {
    require_two(c);
    const auto hist = value_histogram(c);
    const BigInt den = pow(BigInt(2), top_exponent(c));
    std::map<BigRational, BigInt> out;
    for (std::size_t v = 0; v < hist.size(); ++v)
        if (hist[v]) out[make_rational(BigInt(static_cast<long>(v)), den)] = static_cast<long>(hist[v]);
    return out;
}

CyclotomicElement gauss_sum_from_counts(const std::map<BigRational, BigInt>& counts, unsigned long k) {
    unsigned long level = 3;
    for (const auto& [a, n] : counts) level = std::max(level, log2_exact(a.get_den()));
    CyclotomicElement out(static_cast<unsigned>(level));
    const BigInt full = pow(BigInt(2), level);
    for (const auto& [a, n] : counts) {
        const BigRational scaled = a * full * pow(BigInt(2), k);
        out.add_power(to_long(mod(scaled.get_num(), full)), n);
    }
    return out;
}

CyclotomicElement gauss_sum_bruteforce(const PrimaryComponent& c, unsigned long k) {
    require_two(c);
    const auto hist = value_histogram(c);
    const unsigned long top = top_exponent(c);
    const unsigned level = static_cast<unsigned>(std::max(3ul, top));
    CyclotomicElement out(level);
    const std::int64_t full = std::int64_t{1} << level;
    for (std::size_t v = 0; v < hist.size(); ++v) {
        if (!hist[v]) continue;
        // E(2^k v / 2^top) = zeta_{2^level}^(v 2^(k + level - top)), reduced as we shift.
        std::int64_t e = static_cast<std::int64_t>(v) << (level - top);
        for (unsigned long i = 0; i < k && e; ++i) e = (e * 2) % full;
        out.add_power(e, hist[v]);
    }
    return out;
}

CyclotomicElement gauss_sum_closed_form(const std::vector<BasicForm>& forms, unsigned long k) {
    unsigned long level = 3;
    for (const auto& f : forms) level = std::max(level, f.j);
    const auto lv = static_cast<unsigned>(level);
    CyclotomicElement out = CyclotomicElement::integer(lv, 1);
    for (const auto& f : forms) out *= closed_form(f, k, lv);
    return out;
}

WallDecomposition wall_decompose(const PrimaryComponent& c) {
    require_two(c);
    const TwoForm form(c);
    const Index s = c.rank();
    std::vector<Vec> remaining;
    for (Index i = 0; i < s; ++i) {
        IntegerVector e = IntegerVector::Zero(s);
        e(i) = 1;
        remaining.push_back({e, c.exponents[static_cast<std::size_t>(i)]});
    }
    // Decreasing order, stable in generator index.
    std::stable_sort(remaining.begin(), remaining.end(), [](const Vec& a, const Vec& b) { return a.e > b.e; });

    WallDecomposition out;
    std::vector<IntegerVector> columns;
    while (!remaining.empty()) {
        const unsigned long j = remaining.front().e;
        const BigInt mod_j = pow(BigInt(2), j);
        std::size_t top_count = 0;
        while (top_count < remaining.size() && remaining[top_count].e == j) ++top_count;

        std::size_t unary = top_count;
        for (std::size_t i = 0; i < top_count && unary == top_count; ++i)
            if (mod(form.at_level(remaining[i].x, remaining[i].x, j), BigInt(2)) == 1) unary = i;

        if (unary < top_count) {
            const IntegerVector x = remaining[unary].x;
            const BigInt a = form.at_level(x, x, j);
            const BigInt a_inv = inverse_mod(a, mod_j);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(unary));
            for (auto& z : remaining) {
                const BigInt coef = mod(form.at_level(z.x, x, j) * a_inv, mod_j);
                z.x -= coef * x;
                form.reduce(z.x);
                check(form.pair(z.x, x) == 0, "unary complement is not orthogonal");
            }
            out.summands.push_back({BasicForm::Kind::Unary, a, j});
            columns.push_back(x);
            continue;
        }

        // Top generators pair nondegenerately mod 2 with zero diagonal.
        const IntegerVector x = remaining[0].x;
        std::size_t partner = top_count;
        for (std::size_t i = 1; i < top_count && partner == top_count; ++i)
            if (mod(form.at_level(x, remaining[i].x, j), BigInt(2)) == 1) partner = i;
        check(partner < top_count, "no hyperbolic partner at the top level");
        const BigInt h0 = form.at_level(x, remaining[partner].x, j);
        IntegerVector y = inverse_mod(h0, mod_j) * remaining[partner].x;
        form.reduce(y);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(partner));
        remaining.erase(remaining.begin());

        const BigInt half = j > 1 ? pow(BigInt(2), j - 1) : BigInt(1);
        const BigInt m = mod(form.at_level(x, x, j) / 2, half);
        const BigInt n = mod(form.at_level(y, y, j) / 2, half);
        const BigInt det_inv = inverse_mod(4 * m * n - 1, mod_j);
        for (auto& z : remaining) {
            const BigInt k = form.at_level(z.x, x, j);
            const BigInt h = form.at_level(z.x, y, j);
            const BigInt alpha = mod(det_inv * (2 * n * k - h), mod_j);
            const BigInt beta = mod(det_inv * (2 * m * h - k), mod_j);
            z.x -= alpha * x + beta * y;
            form.reduce(z.x);
            check(form.pair(z.x, x) == 0 && form.pair(z.x, y) == 0, "plane complement is not orthogonal");
        }

        IntegerVector u = x, v = y;
        BasicForm::Kind kind = BasicForm::Kind::BinaryC;
        if (j > 1 && mod(m, BigInt(2)) == 1 && mod(n, BigInt(2)) == 1) {
            kind = BasicForm::Kind::BinaryD;
            // u = x + t y with lambda(u, u) = 2 / 2^j.
            const BigInt t = hensel_lift_to(Quadratic{{m - 1, 1, n}}, 2, j - 1, 0);
            u = x + t * y;
            form.reduce(u);
            const BigInt w_inv = inverse_mod(form.at_level(u, y, j), mod_j);
            const BigInt s2 = n * w_inv * w_inv;
            const BigInt beta = hensel_lift_to(Quadratic{{s2 - 1, 1 - 4 * s2, 4 * s2 - 1}}, 2, j - 1, 0);
            const BigInt alpha = mod((1 - 2 * beta) * w_inv, mod_j);
            v = alpha * y + beta * u;
            form.reduce(v);
        } else if (j > 1) {
            // u = x + t y isotropic, then v isotropic with lambda(u, v) = 1 / 2^j.
            const BigInt seed = mod(n, BigInt(2)) == 0 ? mod(m, BigInt(2)) : BigInt(0);
            const BigInt t = hensel_lift_to(Quadratic{{m, 1, n}}, 2, j - 1, seed);
            u = x + t * y;
            form.reduce(u);
            const BigInt w_inv = inverse_mod(form.at_level(u, y, j), mod_j);
            IntegerVector v0 = w_inv * y;
            form.reduce(v0);
            const BigInt n2 = form.at_level(v0, v0, j) / 2;
            v = v0 - n2 * u;
            form.reduce(v);
        }
        const BigInt diag = kind == BasicForm::Kind::BinaryD ? 2 : 0;
        check(form.at_level(u, u, j) == mod(diag, mod_j) && form.at_level(v, v, j) == mod(diag, mod_j) &&
                  form.at_level(u, v, j) == 1,
              "binary plane is not basic");
        out.summands.push_back({kind, 0, j});
        columns.push_back(u);
        columns.push_back(v);
    }

    out.witness.resize(s, s);
    for (Index col = 0; col < s; ++col) out.witness.col(col) = columns[static_cast<std::size_t>(col)];

    // Orders and Gram matrix of the new basis; with nondegeneracy and equal
    // group orders this makes the witness an isomorphism.
    Index col = 0;
    for (const auto& f : out.summands) {
        const RationalMatrix block = f.matrix();
        const BigInt order = pow(BigInt(2), f.j);
        for (Index a = 0; a < f.rank(); ++a) {
            const IntegerVector wa = out.witness.col(col + a);
            check(form.killed_by(wa, order) && !form.killed_by(wa, order / 2), "witness vector has wrong order");
            for (Index b = 0; b < s; ++b) {
                const BigRational expected =
                    (b >= col && b < col + f.rank()) ? block(a, b - col) : BigRational(0);
                const BigRational got =
                    make_rational(form.pair(wa, out.witness.col(b)), pow(BigInt(2), form.top()));
                check(mod_one(got - expected) == 0, "witness does not transport the form");
            }
        }
        col += f.rank();
    }
    return out;
}

PhaseVector phase_vector(const std::vector<BasicForm>& forms, unsigned long degree) {
    PhaseVector out;
    out.degree = degree;
    for (unsigned long k = degree; k >= 1; --k) {
        std::optional<int> sum = 0;
        for (const auto& f : forms) {
            const auto e = phase_entry(f, k);
            if (!e || !sum) sum = std::nullopt;
            else sum = (*sum + *e) % 8;
        }
        out.entries.push_back(sum);
    }
    return out;
}

PhaseVector phase_vector(const PrimaryComponent& c) {
    return phase_vector(wall_decompose(c).summands, top_exponent(c));
}

std::optional<int> phase_of(const CyclotomicElement& gamma) {
    if (gamma.is_zero()) return std::nullopt;
    const unsigned level = std::max(3u, gamma.level());
    const CyclotomicElement g = gamma.embed(level);
    BigInt norm;
    if (!(g * g.conj()).is_integer(&norm) || norm <= 0) throw std::logic_error("gauss sum norm is not a positive integer");
    const unsigned long p = valuation(norm, 2);
    if (pow(BigInt(2), p) != norm) throw std::logic_error("gauss sum norm is not a power of two");
    const CyclotomicElement base = sqrt2_power(p, level);
    for (int phi = 0; phi < 8; ++phi)
        if (g == base * CyclotomicElement::rho(phi, level)) return phi;
    throw std::logic_error("gauss sum is not sqrt2^p times an eighth root of unity");
}

PhaseVector phase_vector_from_gauss(const PrimaryComponent& c) {
    require_two(c);
    const auto counts = burger_counts(c);
    PhaseVector out;
    out.degree = top_exponent(c);
    for (unsigned long k = out.degree; k >= 1; --k) out.entries.push_back(phase_of(gauss_sum_from_counts(counts, k - 1)));
    return out;
}

bool two_equivalent(const PrimaryComponent& a, const PrimaryComponent& b) {
    if (a.p != b.p || a.exponents != b.exponents) return false;
    return phase_vector(a) == phase_vector(b);
}

}  // namespace heegaard
