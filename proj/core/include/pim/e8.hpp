#pragma once

#include "pim/halfint_mat.hpp"

namespace pim {

// #{X in E8^n : half-Gram(X) = T} by exact enumeration of E8 vectors of
// bounded norm, n in {1,2}.  Siegel-Weil oracle for the genus-1/2 weight-4
// Eisenstein coefficients.
Int e8_pair_count(const HalfIntMat& T, int n);

}  // namespace pim
