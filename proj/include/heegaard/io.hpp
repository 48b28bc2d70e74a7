#pragma once

#include "heegaard/linked_group.hpp"

#include <istream>
#include <stdexcept>
#include <string>

namespace heegaard {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Whitespace-separated keyword format; '#' starts a comment.
//   splitting:     genus g / matrix + 2g x 2g integers, row-major
//   linked group:  torsion t_1 ... t_k / rank r / linking + k x k "num/den"
//   plain matrix:  rows m / cols n / matrix + m x n integers
struct ParsedInput {
    enum class Kind { Splitting, Group, Matrix };
    Kind kind = Kind::Matrix;
    IntegerMatrix matrix;  // Splitting and Matrix; not yet checked for symplecticity
    LinkedGroup group;     // Group, validated
    std::string canonical; // normalized rendering of the input
    std::string digest;    // sha256 of `canonical`, hex
};

// Throws ParseError; invalid linkings are reported as ParseError too.
ParsedInput parse_input(std::istream& in);
ParsedInput parse_input_file(const std::string& path);

std::string sha256_hex(const std::string& data);

}  // namespace heegaard
