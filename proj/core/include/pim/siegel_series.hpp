#pragma once

#include <vector>

#include "pim/alpha_ring.hpp"
#include "pim/halfint_mat.hpp"

namespace pim {

// F_p(B, X), the polynomial part of the local Siegel series b_p = gamma_p F_p.
// Integer coefficients, constant term 1.  The derivation trace records which
// equation fixed each coefficient.
struct SiegelPoly {
    enum class Step { trivial, functional_eq, stratum1, stratum2 };
    long p = 0;
    int m = 0;  // size of the nondegenerate kernel
    std::vector<Int> c;
    std::vector<Step> derivation;

    int degree() const { return static_cast<int>(c.size()) - 1; }
};

// xi_p(B) = chi_p((-1)^{m/2} det B) for pd B of even rank, via the Kronecker
// character of the discriminant field: kronecker(d_B, p).
int xi_p(const HalfIntMat& Btilde, long p);

// Degree of F_p: 2 ord_p(f_B) for even rank, ord_p(det(2B)/2) for odd rank.
int fp_degree(const HalfIntMat& Btilde, long p);

// Power-series coefficients of gamma_p(B, X) through X^order.
std::vector<Int> gamma_series(long p, int m, int xi, int order);

// Sign of the functional equation
//   F_p(B, p^{-(m+1)} X^{-1}) = eps (p^{(m+1)/2} X)^{-deg} F_p(B, X):
// +1 for even rank; for odd rank the Hasse-invariant expression
//   eps = h_p(B) [(-1,-1)_p (-1, det B)_p]^{(m-1)/2},
// fitted to and validated against the definitional b_p enumeration.
int fe_sign(const HalfIntMat& Btilde, long p);

// [X^1] of b_p: the exponential sum over the denominator-p rank-1 classes.
Int stratum_sum_rank1(const HalfIntMat& B, long p);

// [X^2] of b_p: nu = p^2 classes, split into the denominator-p^2 rank-1
// family (Ramanujan sums over P^{m-1}(Z/p^2)) and the denominator-p rank-2
// family (enumeration of Sym_m(F_p)).
Int stratum_sum_level2(const HalfIntMat& B, long p);

// The solver: reduce B, read the degree, close with the functional equation
// F_p(B, p^{-(m+1)} X^{-1}) = (p^{(m+1)/2} X)^{-deg} F_p(B, X) and fix the
// remaining unknowns with the stratum equations.  Cached by class key.
SiegelPoly fp_polynomial(const HalfIntMat& B, long p);

// F(p^t) for t >= 0.
Rat fp_evaluate(const SiegelPoly& F, long t);

// F at X = p^{-n-3/2} alpha_p, in beta-coordinates: sum_j c_j beta^j p^{-j(k+n+1)}.
AlphaElem fp_evaluate_alpha(const SiegelPoly& F, unsigned k, int n, const Scalar& ap);

// Definitional oracle: [X^j] b_p for j <= L by direct enumeration of
// Sym_m(Z/p^L) with exact cyclotomic accumulation.
std::vector<Int> brute_bp(const HalfIntMat& B, long p, int L);

}  // namespace pim
