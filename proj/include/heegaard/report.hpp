#pragma once

#include "heegaard/minimal_class.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace heegaard {

// Plain-data report; big numbers and rationals are decimal strings.
struct OddSection {
    std::string p;
    std::vector<unsigned long> exponents;
    std::vector<int> characters;  // one per block of equal exponent
    bool operator==(const OddSection&) const = default;
};

struct TwoSection {
    std::vector<unsigned long> exponents;
    std::vector<std::string> summands;
    std::vector<std::optional<int>> phase;  // phi_n ... phi_1, nullopt = infinity
    bool operator==(const TwoSection&) const = default;
};

struct ReidemeisterEntry {
    long i = 0;
    std::string p;
    std::string value;
    int character = 0;
    bool determined = false;
    bool operator==(const ReidemeisterEntry&) const = default;
};

struct ComparisonEntry {
    std::string mode;  // "stable" or "minimal"
    std::string other_digest;
    bool equivalent = false;
    std::string reason;
    std::vector<std::string> differences;
    std::vector<std::string> qualifiers;
    bool operator==(const ComparisonEntry&) const = default;
};

struct InvariantReport {
    std::string digest;
    std::optional<long> genus;
    std::optional<long> stab_index;
    long free_rank = 0;
    std::vector<std::string> torsion;
    std::vector<std::vector<std::string>> linking;
    std::vector<OddSection> odd;
    std::optional<TwoSection> two;
    std::optional<std::string> parity;  // "even" or "odd"; absent without torsion
    std::optional<std::string> tau_bar;
    std::optional<std::string> det_value;
    std::optional<std::string> class_count;
    std::vector<ReidemeisterEntry> reidemeister;
    std::vector<ComparisonEntry> comparisons;
    std::vector<std::string> qualifiers;
    bool operator==(const InvariantReport&) const = default;
};

InvariantReport analyze(const LinkedGroup& g, const std::string& digest, std::uint64_t seed = 1);
// Adds genus, stab_index and Reidemeister symbols from the normal form.
InvariantReport analyze(const SymplecticMatrix& h, const std::string& digest, std::uint64_t seed = 1);

// Field-by-field differences of the invariant parts (digests excluded).
std::vector<std::string> invariant_differences(const InvariantReport& a, const InvariantReport& b);

nlohmann::ordered_json to_json(const InvariantReport& r);
InvariantReport report_from_json(const nlohmann::ordered_json& j);
std::string to_text(const InvariantReport& r);

}  // namespace heegaard
