#include "heegaard/enumeration.hpp"

#include <cstdlib>
#include <string>

namespace heegaard {

EnumerationLimits enumeration_limits() {
    EnumerationLimits limits;
    if (const char* env = std::getenv("HEEGAARD_MAX_ENUM")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            limits.burger = v;
            limits.isometry = v;
        }
    }
    return limits;
}

SmallLinking::SmallLinking(const std::vector<BigInt>& torsion, const RationalMatrix& linking, std::uint64_t limit) {
    BigInt size = 1;
    for (const auto& t : torsion) size *= t;
    if (size > BigInt(static_cast<unsigned long>(limit)))
        throw SizeLimitError("group of order " + size.get_str() + " exceeds enumeration bound " + std::to_string(limit));
    for (const auto& t : torsion) orders_.push_back(t.get_si());
    size_ = size.get_si();
    modulus_ = orders_.empty() ? 1 : orders_.back();
    const int t = rank();
    form_.resize(static_cast<std::size_t>(t * t));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            const BigRational scaled = mod_one(linking(i, j)) * modulus_;
            if (!is_integer(scaled)) throw ArithmeticError("linking denominator does not divide the exponent");
            form_[static_cast<std::size_t>(i * t + j)] = scaled.get_num().get_si();
        }
}

void SmallLinking::coords(std::int64_t index, std::vector<std::int64_t>& out) const {
    out.resize(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        out[i] = index % orders_[i];
        index /= orders_[i];
    }
}

std::int64_t SmallLinking::value(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const {
    const int t = rank();
    std::int64_t v = 0;
    for (int i = 0; i < t; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0) continue;
        std::int64_t row = 0;
        for (int j = 0; j < t; ++j) row = (row + form(i, j) * y[static_cast<std::size_t>(j)]) % modulus_;
        v = (v + row * x[static_cast<std::size_t>(i)]) % modulus_;
    }
    return mod(v, modulus_);
}

namespace {

struct Target {
    int t;
    std::int64_t N;
    std::vector<std::int64_t> coords;  // size * t
    std::vector<std::int64_t> pairing; // size * t: lambda(x, y_k) * N

    const std::int64_t* c(std::int64_t x) const { return &coords[static_cast<std::size_t>(x * t)]; }
    const std::int64_t* p(std::int64_t x) const { return &pairing[static_cast<std::size_t>(x * t)]; }
    std::int64_t link(std::int64_t x, std::int64_t y) const {
        std::int64_t v = 0;
        const std::int64_t* cy = c(y);
        const std::int64_t* px = p(x);
        for (int k = 0; k < t; ++k) v = (v + cy[k] * px[k]) % N;
        return v;
    }
};

}  // namespace

SearchOutcome search_isometries(const SmallLinking& source, const SmallLinking& target,
                                const std::function<bool(const Isometry&)>& visit, std::uint64_t node_budget) {
    if (source.orders() != target.orders()) throw ArithmeticError("isometry search needs equal torsion");
    const int t = source.rank();
    SearchOutcome outcome;
    if (t == 0) {
        outcome.found = 1;
        visit(Isometry{});
        return outcome;
    }
    Target T{t, target.modulus(), {}, {}};
    T.coords.resize(static_cast<std::size_t>(target.size() * t));
    T.pairing.resize(static_cast<std::size_t>(target.size() * t));
    std::vector<std::int64_t> x;
    for (std::int64_t e = 0; e < target.size(); ++e) {
        target.coords(e, x);
        for (int k = 0; k < t; ++k) {
            T.coords[static_cast<std::size_t>(e * t + k)] = x[static_cast<std::size_t>(k)];
            std::int64_t v = 0;
            for (int l = 0; l < t; ++l) v = (v + x[static_cast<std::size_t>(l)] * target.form(l, k)) % T.N;
            T.pairing[static_cast<std::size_t>(e * t + k)] = v;
        }
    }
    const auto& orders = target.orders();
    std::vector<std::vector<std::int64_t>> candidates(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        const std::int64_t ti = orders[static_cast<std::size_t>(i)];
        for (std::int64_t e = 0; e < target.size(); ++e) {
            bool killed = true;
            for (int l = 0; l < t && killed; ++l)
                killed = (ti * T.c(e)[l]) % orders[static_cast<std::size_t>(l)] == 0;
            if (killed && T.link(e, e) == source.form(i, i)) candidates[static_cast<std::size_t>(i)].push_back(e);
        }
    }

    std::vector<std::int64_t> chosen(static_cast<std::size_t>(t));
    std::uint64_t nodes = 0;
    bool stop = false;
    std::function<void(int)> descend = [&](int i) {
        if (stop) return;
        if (i == t) {
            ++outcome.found;
            Isometry h(static_cast<std::size_t>(t));
            for (int j = 0; j < t; ++j) h[static_cast<std::size_t>(j)].assign(T.c(chosen[static_cast<std::size_t>(j)]),
                                                                               T.c(chosen[static_cast<std::size_t>(j)]) + t);
            if (!visit(h)) stop = true;
            return;
        }
        for (std::int64_t e : candidates[static_cast<std::size_t>(i)]) {
            if (node_budget && ++nodes > node_budget) {
                outcome.complete = false;
                stop = true;
                return;
            }
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = T.link(chosen[static_cast<std::size_t>(j)], e) == source.form(j, i);
            if (!ok) continue;
            chosen[static_cast<std::size_t>(i)] = e;
            descend(i + 1);
            if (stop) return;
        }
    };
    descend(0);
    return outcome;
}

BigInt isometry_det(const Isometry& h, const std::vector<BigInt>& torsion) {
    const auto t = static_cast<Eigen::Index>(h.size());
    if (t == 0) return 0;
    IntegerMatrix a(t, t);
    for (Eigen::Index j = 0; j < t; ++j)
        for (Eigen::Index k = 0; k < t; ++k) a(k, j) = static_cast<long>(h[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
    return mod(determinant(a), torsion.front());
}

}  // namespace heegaard
