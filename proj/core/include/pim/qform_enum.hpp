#pragma once

#include <vector>

#include "pim/halfint_mat.hpp"

namespace pim {

// All integer matrices R (shape size(A1) x size(A2)) with
// [[A1, R/2], [tR/2, A2]] positive semidefinite.  Complete: the psd 2x2
// minors bound every entry by r_ij^2 <= 4 (A1)_ii (A2)_jj, and the box is
// filtered by an exact psd certificate.
std::vector<IntMat> enumerate_R_block(const HalfIntMat& A1, const HalfIntMat& A2);

// int64 fast paths used by the enumerations; exact for |entries| and sizes
// in this project's range (minors stay far below 2^63).
bool psd_small(const std::vector<long>& twoB, int m);
bool pd_small(const std::vector<long>& twoB, int m);

}  // namespace pim
