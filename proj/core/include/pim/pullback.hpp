#pragma once

#include <vector>

#include "pim/halfint_mat.hpp"
#include "pim/modforms.hpp"

namespace pim {

// The degree-3 pullback polynomial
//   Q^2_{3,k}(T) = (2(k-1)(2k-3)(k-2)/3) P0 + ((k-1)(2k-3)/3) P1 + (2(k-1)/3) P2 + P3
// on 6x6 symmetric T = [[R, W],[tW, S]], where det([[xR, W],[tW, S]]) =
// sum_a x^a P_a(T).
Rat q_poly_3k(const HalfIntMat& B, int k);

// The four graded pieces, exposed for the defining-identity tests.
std::array<Rat, 4> q_poly_pieces(const HalfIntMat& B);

// C(k; Ai, A): the Ai-th coefficient of the weight-(k+2) degree-3 cusp form
// carved out of E*_{6,k} by the nu=2 differential operator:
//   (-3 G(2k-3) G(2k-4) / (G(2k) G(2k-1))) 2^{3k+7} (2k-1)(2k-3)(k-1)
//     x sum_R c_{6,k}([[Ai, R/2],[tR/2, A]]) Q^2_{3,k}(same).
Rat big_C(int k, const HalfIntMat& Ai, const HalfIntMat& A);

// Eigen-coefficient table a[i][j] = c_{F_j}(A_i) for the degree-3 cusp space,
// rows indexed by the matrices in `Ai`.
struct BasisTable {
    std::vector<HalfIntMat> Ai;
    std::vector<std::vector<Scalar>> a;

    int dim() const { return static_cast<int>(Ai.size()); }
    BasisTable galois_conj() const;
};

// |c_{F_1}(A)|^2 L_alg(k-3, F_1, St) by Cramer: the multiplier cF1_at_A times
// det(table with first column replaced by C(k; A_i, A)) / det(table).
Scalar extract_std_L(int k, const BasisTable& table, const HalfIntMat& A, const Scalar& cF1_at_A);

// Convenience: target A = table.Ai[0], multiplier = table.a[0][0].
Scalar extract_std_L(int k, const BasisTable& table);

// Rankin-Cohen-type bracket G_nu(E*_{l1-l2+1}, E*_{l1+l2-k+1}), nu = k-l1-1,
// under (*): l1-l2 >= 3 odd, k even, l1+1 <= k <= l1+l2-3 (k = l1+1 is the
// nu = 0 variant and is not cuspidal).
QSeries g_nu(int l1, int l2, int k, int N);

// L_alg(l1, l2; f) from the eigen-expansion of G_nu:
// G_nu = gamma(k, l1) sum_i L_alg(l1, l2; f_i) f_i,
// gamma(k, l1) = (-1)^{k/2} G(k-1) / (2^{k-1} G(l1)).
Scalar product_hecke_L(int l1, int l2, const Eigenform& f, int N = 200);

// Variant with caller-chosen pivot coefficients (robustness checks).
Scalar product_hecke_L(int l1, int l2, const Eigenform& f, const std::vector<int>& rows, int N);

}  // namespace pim
