#pragma once

#include "pim/halfint_mat.hpp"
#include "pim/modforms.hpp"

namespace pim {

// Inputs of the degree-4 lift at n = 1: a plus-space eigenform h of weight
// k + 1/2 and its Shimura correspondent f of weight 2k.
struct LiftContext {
    int k = 0;
    PlusForm h;
    Eigenform f;

    LiftContext(int k_, PlusForm h_, Eigenform f_);
};

// Fourier coefficient of the degree-4 lift of h:
//   c(T) = c_h(|d_T|) f_T^{k-1/2} prod_{p | f_T} alpha_p^{-ord_p(f_T)} F_p(T, p^{-5/2} alpha_p),
// evaluated entirely in the integral beta-ring and symmetrized per prime.
Scalar ikeda_fc(const HalfIntMat& T, const LiftContext& ctx);

// A-th coefficient of the normalized restricted lift: the r-sum
// sum_r c_{I_4(h)}([[A, r/2],[tr/2, 1]]), valid while dim S_{k+2}(SL_2(Z)) = 1.
Scalar miyawaki_fc(const HalfIntMat& A, const LiftContext& ctx);

}  // namespace pim
