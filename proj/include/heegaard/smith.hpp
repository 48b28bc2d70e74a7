#pragma once

#include "heegaard/exact.hpp"

namespace heegaard {

// U * input * V == D, with U and V unimodular.  D is diagonal, its entries are
// nonnegative, nonzero entries precede zeros and each divides the next.
// U_inv and V_inv are kept alongside so callers never invert.
struct SmithForm {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;
    IntegerMatrix U_inv;
    IntegerMatrix V_inv;
    std::vector<BigInt> diag;
};

// Pivot: nonzero entry of least absolute value, ties to lowest (row, col).
SmithForm smith_normal_form(const IntegerMatrix& input);

}  // namespace heegaard
