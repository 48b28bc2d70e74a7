#pragma once

#include "heegaard/linked_group.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace heegaard {

class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// HEEGAARD_MAX_ENUM, when set to a positive integer, replaces every bound.
struct EnumerationLimits {
    std::uint64_t burger = std::uint64_t{1} << 20;  // elements enumerated for counts and Gauss sums
    std::uint64_t isometry = 4096;                  // |T| for exhaustive isometry search
};
EnumerationLimits enumeration_limits();

// Machine-word view of a small linked group: coordinates x_i mod tau_i and
// the form scaled by N = tau_t, so lambda(x, y) = value(x, y) / N.
class SmallLinking {
public:
    SmallLinking(const std::vector<BigInt>& torsion, const RationalMatrix& linking, std::uint64_t limit);
    explicit SmallLinking(const LinkedGroup& g, std::uint64_t limit) : SmallLinking(g.torsion, g.linking, limit) {}

    int rank() const { return static_cast<int>(orders_.size()); }
    std::int64_t size() const { return size_; }
    std::int64_t modulus() const { return modulus_; }
    const std::vector<std::int64_t>& orders() const { return orders_; }
    std::int64_t form(int i, int j) const { return form_[static_cast<std::size_t>(i * rank() + j)]; }

    // Mixed-radix decoding with the first generator varying fastest.
    void coords(std::int64_t index, std::vector<std::int64_t>& out) const;
    std::int64_t value(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const;

private:
    std::vector<std::int64_t> orders_;
    std::vector<std::int64_t> form_;
    std::int64_t modulus_ = 1;
    std::int64_t size_ = 1;
};

// images[j] = coordinates of h(y_j) in the target.
using Isometry = std::vector<std::vector<std::int64_t>>;

struct SearchOutcome {
    std::uint64_t found = 0;
    bool complete = true;  // false when the node budget ran out
};

// Enumerates linking isomorphisms from `source` to `target` (same torsion).
// The visitor returns false to stop.  node_budget == 0 means unbounded.
SearchOutcome search_isometries(const SmallLinking& source, const SmallLinking& target,
                                const std::function<bool(const Isometry&)>& visit, std::uint64_t node_budget = 0);

// det of the coordinate matrix of h, reduced mod tau_1.
BigInt isometry_det(const Isometry& h, const std::vector<BigInt>& torsion);

}  // namespace heegaard
