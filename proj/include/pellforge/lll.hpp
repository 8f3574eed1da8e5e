#pragma once

#include <vector>

#include "pellforge/numbers.hpp"

namespace pellforge {

using IntRow = std::vector<Int>;
using IntMat = std::vector<IntRow>;

// LLL reduction with delta = 99/100 in exact rational arithmetic (no
// floating-point Gram-Schmidt anywhere). Returns the reduced basis; when
// transform is non-null it receives the unimodular U with out = U * in.
// Rows must be linearly independent.
IntMat lll_reduce_rows(const IntMat& basis, IntMat* transform = nullptr,
                       const Rat& delta = Rat(99, 100));

// Checks size-reduction and the Lovasz condition on a basis, row by row.
bool lll_is_reduced(const IntMat& basis, const Rat& delta = Rat(99, 100));

}  // namespace pellforge
